#include "ncc/triangulation.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace ncc {

namespace {
struct TriError : std::logic_error {
    using std::logic_error::logic_error;
};
}  // namespace

Triangulation::Triangulation(const Point& lo, const Point& hi) {
    points_ = {lo, Point{hi.x, lo.y}, hi, Point{lo.x, hi.y}};
    for (int i = 0; i < 4; ++i) index_[points_[i]] = i;
    v2t_.assign(4, -1);
    int t0 = new_tri(0, 1, 2);
    int t1 = new_tri(0, 2, 3);
    tris_[t0].n[1] = t1;  // across (2,0)
    tris_[t1].n[2] = t0;  // across (0,2)
}

int Triangulation::new_tri(int a, int b, int c) {
    Tri t;
    t.v[0] = a;
    t.v[1] = b;
    t.v[2] = c;
    t.n[0] = t.n[1] = t.n[2] = -1;
    t.alive = true;
    tris_.push_back(t);
    int id = static_cast<int>(tris_.size()) - 1;
    v2t_[a] = v2t_[b] = v2t_[c] = id;
    return id;
}

int Triangulation::tri_edge_index(int t, int a, int b) const {
    for (int i = 0; i < 3; ++i) {
        int u = tris_[t].v[(i + 1) % 3];
        int v = tris_[t].v[(i + 2) % 3];
        if ((u == a && v == b) || (u == b && v == a)) return i;
    }
    return -1;
}

int Triangulation::vertex_index_in(int t, int v) const {
    for (int i = 0; i < 3; ++i)
        if (tris_[t].v[i] == v) return i;
    return -1;
}

void Triangulation::set_neighbor(int t, int other, int a, int b) {
    if (t < 0) return;
    int e = tri_edge_index(t, a, b);
    if (e < 0) throw TriError("set_neighbor: edge not in triangle");
    tris_[t].n[e] = other;
}

int Triangulation::find_vertex(const Point& p) const {
    auto it = index_.find(p);
    return it == index_.end() ? -1 : it->second;
}

Point Triangulation::centroid(int t) const {
    const Tri& tr = tris_[t];
    return Point{(points_[tr.v[0]].x + points_[tr.v[1]].x + points_[tr.v[2]].x) / 3,
                 (points_[tr.v[0]].y + points_[tr.v[1]].y + points_[tr.v[2]].y) / 3};
}

const EdgeTag* Triangulation::edge_tag(int u, int v) const {
    auto it = tags_.find(ekey(u, v));
    return it == tags_.end() ? nullptr : &it->second;
}

std::vector<int> Triangulation::incident(int v) const {
    std::vector<int> out;
    int start = v2t_[v];
    if (start < 0 || !tris_[start].alive || vertex_index_in(start, v) < 0) {
        for (int t = 0; t < static_cast<int>(tris_.size()); ++t)
            if (tris_[t].alive && vertex_index_in(t, v) >= 0) out.push_back(t);
        return out;
    }
    // Walk counterclockwise around v; if the hull interrupts, walk clockwise too.
    int t = start;
    while (true) {
        out.push_back(t);
        int i = vertex_index_in(t, v);
        int next = tris_[t].n[(i + 2) % 3];  // across edge (v, v[i+1])
        if (next < 0) break;
        if (next == start) return out;
        t = next;
    }
    t = start;
    while (true) {
        int i = vertex_index_in(t, v);
        int prev = tris_[t].n[(i + 1) % 3];  // across edge (v[i+2], v)
        if (prev < 0 || prev == start) break;
        out.push_back(prev);
        t = prev;
    }
    return out;
}

int Triangulation::locate_walk(const Point& p) const {
    int cur = -1;
    for (int i = static_cast<int>(tris_.size()) - 1; i >= 0; --i)
        if (tris_[i].alive) {
            cur = i;
            break;
        }
    if (cur < 0) return -1;
    std::size_t steps = 0, limit = 4 * tris_.size() + 64;
    while (steps++ < limit) {
        const Tri& t = tris_[cur];
        const Point &a = points_[t.v[0]], &b = points_[t.v[1]], &c = points_[t.v[2]];
        int o0 = orient(b, c, p);
        int o1 = orient(c, a, p);
        int o2 = orient(a, b, p);
        if (o0 >= 0 && o1 >= 0 && o2 >= 0) return cur;
        int next = -1;
        if (o0 < 0) next = t.n[0];
        if (next < 0 && o1 < 0) next = t.n[1];
        if (next < 0 && o2 < 0) next = t.n[2];
        if (next < 0) break;
        cur = next;
    }
    for (std::size_t i = 0; i < tris_.size(); ++i) {
        if (!tris_[i].alive) continue;
        const Tri& t = tris_[i];
        const Point &a = points_[t.v[0]], &b = points_[t.v[1]], &c = points_[t.v[2]];
        if (orient(b, c, p) >= 0 && orient(c, a, p) >= 0 && orient(a, b, p) >= 0)
            return static_cast<int>(i);
    }
    return -1;
}

int Triangulation::locate(const Point& p) const { return locate_walk(p); }

void Triangulation::split_triangle(int t, int vp) {
    Tri old = tris_[t];
    tris_[t].alive = false;
    int a = old.v[0], b = old.v[1], c = old.v[2];
    int t0 = new_tri(a, b, vp);
    int t1 = new_tri(b, c, vp);
    int t2 = new_tri(c, a, vp);
    tris_[t0].n[0] = t1;
    tris_[t0].n[1] = t2;
    tris_[t0].n[2] = old.n[2];
    tris_[t1].n[0] = t2;
    tris_[t1].n[1] = t0;
    tris_[t1].n[2] = old.n[0];
    tris_[t2].n[0] = t0;
    tris_[t2].n[1] = t1;
    tris_[t2].n[2] = old.n[1];
    set_neighbor(old.n[2], t0, a, b);
    set_neighbor(old.n[0], t1, b, c);
    set_neighbor(old.n[1], t2, c, a);
}

void Triangulation::split_edge(int t, int e, int vp) {
    Tri old = tris_[t];
    int a = old.v[(e + 1) % 3], b = old.v[(e + 2) % 3], c = old.v[e];
    int mate = old.n[e];
    int n_bc = old.n[(e + 1) % 3];
    int n_ca = old.n[(e + 2) % 3];
    EdgeTag tag;
    bool tagged = false;
    if (auto it = tags_.find(ekey(a, b)); it != tags_.end()) {
        tag = it->second;
        tagged = true;
        tags_.erase(it);
    }
    tris_[t].alive = false;
    int t0 = new_tri(a, vp, c);
    int t1 = new_tri(vp, b, c);
    tris_[t0].n[0] = t1;    // (vp,c)
    tris_[t0].n[1] = n_ca;  // (c,a)
    tris_[t0].n[2] = -1;    // (a,vp) fixed below if mate exists
    tris_[t1].n[0] = n_bc;  // (b,c)
    tris_[t1].n[1] = t0;    // (c,vp)
    tris_[t1].n[2] = -1;    // (vp,b)
    set_neighbor(n_ca, t0, c, a);
    set_neighbor(n_bc, t1, b, c);
    if (mate >= 0) {
        int me = tri_edge_index(mate, a, b);
        Tri mold = tris_[mate];
        int d = mold.v[me];
        int n_ad = mold.n[tri_edge_index(mate, a, d)];
        int n_db = mold.n[tri_edge_index(mate, d, b)];
        tris_[mate].alive = false;
        int m0 = new_tri(d, vp, a);
        int m1 = new_tri(d, b, vp);
        tris_[m0].n[vertex_index_in(m0, d)] = t0;    // across (vp,a)
        tris_[m0].n[vertex_index_in(m0, vp)] = n_ad;  // across (a,d)
        tris_[m0].n[vertex_index_in(m0, a)] = m1;     // across (d,vp)
        tris_[m1].n[vertex_index_in(m1, d)] = t1;     // across (b,vp)
        tris_[m1].n[vertex_index_in(m1, b)] = m0;     // across (vp,d)
        tris_[m1].n[vertex_index_in(m1, vp)] = n_db;  // across (d,b)
        set_neighbor(n_ad, m0, a, d);
        set_neighbor(n_db, m1, d, b);
        tris_[t0].n[2] = m0;
        tris_[t1].n[2] = m1;
    }
    if (tagged) {
        tags_[ekey(a, vp)] = tag;
        tags_[ekey(vp, b)] = tag;
    }
}

int Triangulation::insert_point(const Point& p) {
    if (auto it = index_.find(p); it != index_.end()) return it->second;
    int t = locate_walk(p);
    if (t < 0) throw TriError("insert_point: point outside bounding box");
    int vp = static_cast<int>(points_.size());
    points_.push_back(p);
    index_[p] = vp;
    v2t_.push_back(-1);
    const Tri& tr = tris_[t];
    const Point &a = points_[tr.v[0]], &b = points_[tr.v[1]], &c = points_[tr.v[2]];
    int o0 = orient(b, c, p), o1 = orient(c, a, p), o2 = orient(a, b, p);
    if (o0 == 0)
        split_edge(t, 0, vp);
    else if (o1 == 0)
        split_edge(t, 1, vp);
    else if (o2 == 0)
        split_edge(t, 2, vp);
    else
        split_triangle(t, vp);
    return vp;
}

bool Triangulation::flip(int t, int e) {
    int mate = tris_[t].n[e];
    if (mate < 0) return false;
    int a = tris_[t].v[(e + 1) % 3], b = tris_[t].v[(e + 2) % 3], c = tris_[t].v[e];
    if (edge_tag(a, b)) return false;  // constrained edges are not flippable
    int me = tri_edge_index(mate, a, b);
    int d = tris_[mate].v[me];
    const Point &pa = points_[a], &pb = points_[b], &pc = points_[c], &pd = points_[d];
    int oa = orient(pc, pd, pa), ob = orient(pc, pd, pb);
    if (oa == 0 || ob == 0 || oa == ob) return false;  // quad not strictly convex
    int n_t_bc = tris_[t].n[(e + 1) % 3];
    int n_t_ca = tris_[t].n[(e + 2) % 3];
    int n_m_ad = tris_[mate].n[tri_edge_index(mate, a, d)];
    int n_m_db = tris_[mate].n[tri_edge_index(mate, d, b)];
    Tri& T = tris_[t];
    Tri& M = tris_[mate];
    T.v[0] = c;
    T.v[1] = a;
    T.v[2] = d;
    T.n[0] = n_m_ad;  // (a,d)
    T.n[1] = mate;    // (d,c)
    T.n[2] = n_t_ca;  // (c,a)
    M.v[0] = c;
    M.v[1] = d;
    M.v[2] = b;
    M.n[0] = n_m_db;  // (d,b)
    M.n[1] = n_t_bc;  // (b,c)
    M.n[2] = t;       // (c,d)
    set_neighbor(n_m_ad, t, a, d);
    set_neighbor(n_t_ca, t, c, a);
    set_neighbor(n_m_db, mate, d, b);
    set_neighbor(n_t_bc, mate, b, c);
    v2t_[a] = t;
    v2t_[b] = mate;
    v2t_[c] = t;
    v2t_[d] = t;
    return true;
}

bool Triangulation::edge_exists(int u, int v, int* tri_out, int* edge_out) const {
    for (int t : incident(u)) {
        int e = tri_edge_index(t, u, v);
        if (e >= 0) {
            if (tri_out) *tri_out = t;
            if (edge_out) *edge_out = e;
            return true;
        }
    }
    return false;
}

void Triangulation::insert_constraint(int u, int v, const EdgeTag& tag) {
    if (u == v) throw TriError("insert_constraint: degenerate");
    Segment seg{points_[u], points_[v]};
    // Split at any vertex lying in the open segment (cheap bbox prefilter).
    Rat lox = std::min(seg.a.x, seg.b.x), hix = std::max(seg.a.x, seg.b.x);
    Rat loy = std::min(seg.a.y, seg.b.y), hiy = std::max(seg.a.y, seg.b.y);
    int best = -1;
    Rat best_d2;
    for (int w = 0; w < static_cast<int>(points_.size()); ++w) {
        if (w == u || w == v) continue;
        const Point& pw = points_[w];
        if (pw.x < lox || pw.x > hix || pw.y < loy || pw.y > hiy) continue;
        if (!on_segment(pw, seg)) continue;
        Rat d2 = dist2(pw, points_[u]);
        if (best < 0 || d2 < best_d2) {
            best = w;
            best_d2 = d2;
        }
    }
    if (best >= 0) {
        insert_constraint(u, best, tag);
        insert_constraint(best, v, tag);
        return;
    }
    if (!edge_exists(u, v)) {
        // Collect the pipe of crossing edges once, then flip them away.
        std::deque<std::pair<int, int>> pending;
        for (int t : incident(u)) {
            int i = vertex_index_in(t, u);
            int a = tris_[t].v[(i + 1) % 3], b = tris_[t].v[(i + 2) % 3];
            auto isect = segment_intersection(Segment{points_[a], points_[b]}, seg);
            if (std::holds_alternative<SegIntersectPoint>(isect)) pending.emplace_back(a, b);
        }
        std::size_t guard = 0, limit = 1000 + 40 * tris_.size();
        while (!edge_exists(u, v)) {
            if (++guard > limit) throw TriError("insert_constraint: flip loop exceeded bound");
            if (pending.empty()) {
                // Refill from a full scan (pipe advanced past collected edges).
                for (int t = 0; t < static_cast<int>(tris_.size()); ++t) {
                    if (!tris_[t].alive) continue;
                    for (int e = 0; e < 3; ++e) {
                        int a = tris_[t].v[(e + 1) % 3], b = tris_[t].v[(e + 2) % 3];
                        if (a > b) continue;
                        if (a == u || b == u || a == v || b == v) continue;
                        auto isect = segment_intersection(Segment{points_[a], points_[b]}, seg);
                        if (std::holds_alternative<SegIntersectPoint>(isect)) pending.emplace_back(a, b);
                        else if (std::holds_alternative<SegIntersectOverlap>(isect))
                            throw TriError("insert_constraint: collinear overlap with existing edge");
                    }
                }
                if (pending.empty()) throw TriError("insert_constraint: no crossing edges but edge absent");
            }
            auto [a, b] = pending.front();
            pending.pop_front();
            int t = -1, e = -1;
            if (!edge_exists(a, b, &t, &e)) continue;
            auto isect = segment_intersection(Segment{points_[a], points_[b]}, seg);
            if (!std::holds_alternative<SegIntersectPoint>(isect)) continue;
            if (flip(t, e)) {
                // The new edge is (c,d) = current diagonal of the quad; re-test it.
                int c = tris_[t].v[0], d = tris_[t].v[2];
                auto isect2 = segment_intersection(Segment{points_[c], points_[d]}, seg);
                if (std::holds_alternative<SegIntersectPoint>(isect2)) pending.emplace_back(c, d);
            } else {
                pending.emplace_back(a, b);
            }
        }
    }
    EdgeTag& slot = tags_[ekey(u, v)];
    bool was_hard = slot.hard;
    if (!slot.hard || tag.hard) slot = tag;
    slot.hard = slot.hard || was_hard;
}

void Triangulation::check_integrity() const {
    for (int t = 0; t < static_cast<int>(tris_.size()); ++t) {
        if (!tris_[t].alive) continue;
        const Tri& tr = tris_[t];
        if (orient(points_[tr.v[0]], points_[tr.v[1]], points_[tr.v[2]]) <= 0)
            throw TriError("integrity: non-ccw triangle");
        for (int e = 0; e < 3; ++e) {
            int nb = tr.n[e];
            if (nb < 0) continue;
            if (!tris_[nb].alive) throw TriError("integrity: dead neighbor");
            int a = tr.v[(e + 1) % 3], b = tr.v[(e + 2) % 3];
            int me = tri_edge_index(nb, a, b);
            if (me < 0) throw TriError("integrity: neighbor mismatch");
            if (tris_[nb].n[me] != t) throw TriError("integrity: asymmetric adjacency");
        }
    }
}

std::vector<TaggedSegment> split_segments(const std::vector<TaggedSegment>& input,
                                          const std::vector<Point>& extra_points) {
    std::vector<TaggedSegment> out;
    for (std::size_t i = 0; i < input.size(); ++i) {
        const Segment& s = input[i].seg;
        Point d = s.b - s.a;
        std::vector<std::pair<Rat, Point>> cuts;
        auto param = [&](const Point& p) {
            return (rat_abs(d.x) >= rat_abs(d.y)) ? (p.x - s.a.x) / d.x : (p.y - s.a.y) / d.y;
        };
        cuts.emplace_back(Rat(0), s.a);
        cuts.emplace_back(Rat(1), s.b);
        for (std::size_t j = 0; j < input.size(); ++j) {
            if (i == j) continue;
            auto isect = segment_intersection(s, input[j].seg);
            if (std::holds_alternative<SegIntersectOverlap>(isect))
                throw DegenerateBoundaryOverlap("constraint segments overlap collinearly");
            if (auto* sp = std::get_if<SegIntersectPoint>(&isect)) cuts.emplace_back(param(sp->p), sp->p);
        }
        for (const Point& p : extra_points)
            if (on_segment(p, s)) cuts.emplace_back(param(p), p);
        std::sort(cuts.begin(), cuts.end(),
                  [](const auto& l, const auto& r) { return l.first < r.first; });
        for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
            if (cuts[c].first == cuts[c + 1].first) continue;
            out.push_back(TaggedSegment{Segment{cuts[c].second, cuts[c + 1].second}, input[i].tag});
        }
    }
    return out;
}

}  // namespace ncc
