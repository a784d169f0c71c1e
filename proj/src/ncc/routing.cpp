#include "ncc/routing.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <set>

namespace ncc {

namespace {

constexpr int kKindBoundary = 1;
constexpr int kKindConnector = 2;
constexpr int kKindSoft = 3;

std::pair<Point, Point> bounding_box(const Region& region, const std::vector<Polyline>& obstacles,
                                     const std::vector<Segment>& soft, const std::vector<Point>& points) {
    std::vector<Point> all = region.boundary.vertices;
    for (const auto& o : obstacles) all.insert(all.end(), o.vertices.begin(), o.vertices.end());
    for (const auto& s : soft) {
        all.push_back(s.a);
        all.push_back(s.b);
    }
    all.insert(all.end(), points.begin(), points.end());
    Rat lox = all[0].x, hix = all[0].x, loy = all[0].y, hiy = all[0].y;
    for (const Point& p : all) {
        lox = std::min(lox, p.x);
        hix = std::max(hix, p.x);
        loy = std::min(loy, p.y);
        hiy = std::max(hiy, p.y);
    }
    Rat pad = (hix - lox) + (hiy - loy) + 2;
    return {Point{lox - pad, loy - pad}, Point{hix + pad, hiy + pad}};
}

}  // namespace

Triangulation Domain::make_tri(const Region& region, const std::vector<Polyline>& obstacles,
                               const std::vector<Segment>& soft, const std::vector<Point>& points) {
    auto [lo, hi] = bounding_box(region, obstacles, soft, points);
    Triangulation tri(lo, hi);
    std::vector<TaggedSegment> segs;
    for (std::size_t i = 0; i < region.boundary.segment_count(); ++i) {
        EdgeTag tag;
        tag.hard = true;
        tag.kind = kKindBoundary;
        segs.push_back({region.boundary.segment(i), tag});
    }
    for (std::size_t o = 0; o < obstacles.size(); ++o) {
        for (std::size_t i = 0; i < obstacles[o].segment_count(); ++i) {
            EdgeTag tag;
            tag.hard = true;
            tag.kind = kKindConnector;
            tag.conn = static_cast<int>(o);
            segs.push_back({obstacles[o].segment(i), tag});
        }
    }
    for (const Segment& s : soft) {
        EdgeTag tag;
        tag.kind = kKindSoft;
        segs.push_back({s, tag});
    }
    std::vector<TaggedSegment> split = split_segments(segs, points);
    for (const Point& p : points) tri.insert_point(p);
    for (const auto& ts : split) {
        int u = tri.insert_point(ts.seg.a);
        int v = tri.insert_point(ts.seg.b);
        tri.insert_constraint(u, v, ts.tag);
    }
    return tri;
}

Domain::Domain(const Region& region, const std::vector<Polyline>& obstacles,
               const std::vector<Segment>& soft, const std::vector<Point>& points)
    : region_(region), tri_(make_tri(region, obstacles, soft, points)) {
    recompute();
}

void Domain::recompute() {
    const auto& ts = tri_.tris();
    inside_.assign(ts.size(), -1);
    comp_.assign(ts.size(), -1);
    // Outside = flood from triangle 0's hull side; triangle with bbox corner 0.
    // Region boundary edges stop the flood; everything else is crossable.
    std::deque<int> work;
    for (std::size_t t = 0; t < ts.size(); ++t) {
        if (!ts[t].alive) continue;
        for (int i = 0; i < 3; ++i)
            if (ts[t].n[i] < 0) {  // hull triangle: outside the region
                if (inside_[t] == -1) {
                    inside_[t] = 0;
                    work.push_back(static_cast<int>(t));
                }
            }
    }
    while (!work.empty()) {
        int t = work.front();
        work.pop_front();
        for (int i = 0; i < 3; ++i) {
            int nb = ts[t].n[i];
            if (nb < 0 || inside_[nb] != -1) continue;
            int a = ts[t].v[(i + 1) % 3], b = ts[t].v[(i + 2) % 3];
            const EdgeTag* tag = tri_.edge_tag(a, b);
            if (tag && tag->kind == kKindBoundary) continue;
            inside_[nb] = 0;
            work.push_back(nb);
        }
    }
    for (std::size_t t = 0; t < ts.size(); ++t)
        if (ts[t].alive && inside_[t] == -1) inside_[t] = 1;
    // Components: flood inside triangles across non-hard edges.
    comp_count_ = 0;
    for (std::size_t s = 0; s < ts.size(); ++s) {
        if (!ts[s].alive || inside_[s] != 1 || comp_[s] != -1) continue;
        int id = comp_count_++;
        comp_[s] = id;
        std::deque<int> q{static_cast<int>(s)};
        while (!q.empty()) {
            int t = q.front();
            q.pop_front();
            for (int i = 0; i < 3; ++i) {
                int nb = ts[t].n[i];
                if (nb < 0 || !ts[nb].alive || inside_[nb] != 1 || comp_[nb] != -1) continue;
                int a = ts[t].v[(i + 1) % 3], b = ts[t].v[(i + 2) % 3];
                if (tri_.edge_hard(a, b)) continue;
                comp_[nb] = id;
                q.push_back(nb);
            }
        }
    }
    // Pieces: group connector-tagged edges by (conn, piece), order each chain.
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> groups;
    for (std::size_t t = 0; t < ts.size(); ++t) {
        if (!ts[t].alive) continue;
        for (int i = 0; i < 3; ++i) {
            int a = ts[t].v[(i + 1) % 3], b = ts[t].v[(i + 2) % 3];
            if (a > b) continue;
            const EdgeTag* tag = tri_.edge_tag(a, b);
            if (!tag || tag->kind != kKindConnector) continue;
            // Only edges with at least one inside triangle matter here.
            int nb = ts[t].n[i];
            bool in_t = inside_[t] == 1;
            bool in_nb = nb >= 0 && inside_[nb] == 1;
            if (!in_t && !in_nb) continue;
            groups[{tag->conn, tag->piece}].emplace_back(a, b);
        }
    }
    pieces_.clear();
    for (auto& [key, edges] : groups) {
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        // Build chains from the edge set (a piece may split into sub-chains if
        // parts of it run outside the region).
        std::map<int, std::vector<int>> adj;
        for (auto& [a, b] : edges) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        std::set<std::pair<int, int>> unused(edges.begin(), edges.end());
        auto take = [&](int a, int b) {
            auto k = a < b ? std::pair{a, b} : std::pair{b, a};
            auto it = unused.find(k);
            if (it == unused.end()) return false;
            unused.erase(it);
            return true;
        };
        while (!unused.empty()) {
            // Start from a degree-1 endpoint if available, else any.
            int start = unused.begin()->first;
            for (auto& [v, ns] : adj) {
                int deg = 0;
                for (int w : ns) {
                    auto k = v < w ? std::pair{v, w} : std::pair{w, v};
                    if (unused.count(k)) ++deg;
                }
                if (deg == 1) {
                    start = v;
                    break;
                }
            }
            Piece piece;
            piece.conn = key.first;
            piece.piece = key.second;
            piece.chain.push_back(start);
            int cur = start;
            while (true) {
                int next = -1;
                for (int w : adj[cur])
                    if (take(cur, w)) {
                        next = w;
                        break;
                    }
                if (next < 0) break;
                piece.chain.push_back(next);
                cur = next;
            }
            pieces_.push_back(std::move(piece));
        }
    }
    // Separation: look at the two sides of each chain edge.
    for (Piece& piece : pieces_) {
        std::set<std::pair<int, int>> sides;
        for (std::size_t i = 0; i + 1 < piece.chain.size(); ++i) {
            int a = piece.chain[i], b = piece.chain[i + 1];
            int t = -1, e = -1;
            if (!tri_.edge_exists(a, b, &t, &e)) continue;
            int nb = ts[t].n[e];
            if (nb < 0) continue;
            int ca = comp_[t], cb = comp_[nb];
            if (ca < 0 || cb < 0 || ca == cb) continue;
            sides.insert(ca < cb ? std::pair{ca, cb} : std::pair{cb, ca});
        }
        if (sides.size() > 1) throw NotATree("connector piece borders more than two component pairs");
        if (sides.size() == 1) {
            piece.separating = true;
            piece.comp_a = sides.begin()->first;
            piece.comp_b = sides.begin()->second;
        }
    }
}

int Domain::component_of_point(const Point& p) const {
    int v = tri_.find_vertex(p);
    if (v >= 0) {
        for (int t : tri_.incident(v))
            if (inside_[t] == 1) return comp_[t];
        return -1;
    }
    int t = tri_.locate(p);
    if (t < 0 || inside_[t] != 1) return -1;
    return comp_[t];
}

Domain::Tree Domain::component_tree(const Point& root_point) const {
    int root = component_of_point(root_point);
    if (root < 0) throw NotATree("root point is not in any component");
    // Adjacency from separating pieces; multi-edges or cycles break the tree.
    std::vector<std::vector<std::pair<int, std::size_t>>> adj(comp_count_);
    std::set<std::pair<int, int>> seen;
    for (std::size_t pi = 0; pi < pieces_.size(); ++pi) {
        const Piece& p = pieces_[pi];
        if (!p.separating) continue;
        auto key = std::pair{p.comp_a, p.comp_b};
        if (seen.count(key)) throw NotATree("two pieces border the same component pair");
        seen.insert(key);
        adj[p.comp_a].push_back({p.comp_b, pi});
        adj[p.comp_b].push_back({p.comp_a, pi});
    }
    Tree tree;
    tree.root = root;
    tree.parent.assign(comp_count_, -2);
    tree.parent_piece.assign(comp_count_, static_cast<std::size_t>(-1));
    tree.depth.assign(comp_count_, -1);
    std::deque<int> q{root};
    tree.parent[root] = -1;
    tree.depth[root] = 0;
    std::size_t visited = 1;
    while (!q.empty()) {
        int c = q.front();
        q.pop_front();
        for (auto [nb, pi] : adj[c]) {
            if (tree.parent[nb] != -2) {
                if (nb != tree.parent[c]) throw NotATree("component adjacency contains a cycle");
                continue;
            }
            tree.parent[nb] = c;
            tree.parent_piece[nb] = pi;
            tree.depth[nb] = tree.depth[c] + 1;
            q.push_back(nb);
            ++visited;
        }
    }
    if (visited != static_cast<std::size_t>(comp_count_))
        throw NotATree("component adjacency is disconnected");
    return tree;
}

std::optional<std::vector<Point>> Domain::route_leg(int from, int to, int want_comp,
                                                    const std::vector<int>* blocked_fans) {
    const auto& ts = tri_.tris();
    std::vector<char> blocked(ts.size(), 0);
    if (blocked_fans)
        for (int v : *blocked_fans)
            if (v != from && v != to)
                for (int t : tri_.incident(v)) blocked[t] = 1;
    // BFS over triangles of the component, seeded by triangles incident to
    // `from`, stopping at any triangle incident to `to`.
    std::vector<int> prev(ts.size(), -2);
    std::deque<int> q;
    for (int t : tri_.incident(from)) {
        if (comp_[t] != want_comp || blocked[t]) continue;
        prev[t] = -1;
        q.push_back(t);
    }
    int goal = -1;
    std::vector<char> is_goal(ts.size(), 0);
    for (int t : tri_.incident(to))
        if (comp_[t] == want_comp && !blocked[t]) is_goal[t] = 1;
    while (!q.empty() && goal < 0) {
        int t = q.front();
        q.pop_front();
        if (is_goal[t]) {
            goal = t;
            break;
        }
        for (int i = 0; i < 3; ++i) {
            int nb = ts[t].n[i];
            if (nb < 0 || prev[nb] != -2 || comp_[nb] != want_comp || blocked[nb]) continue;
            int a = ts[t].v[(i + 1) % 3], b = ts[t].v[(i + 2) % 3];
            if (tri_.edge_hard(a, b)) continue;
            prev[nb] = t;
            q.push_back(nb);
            if (is_goal[nb]) {
                goal = nb;
                break;
            }
        }
    }
    if (goal < 0) return std::nullopt;
    std::vector<int> tpath{goal};
    while (prev[tpath.back()] >= 0) tpath.push_back(prev[tpath.back()]);
    std::reverse(tpath.begin(), tpath.end());
    std::vector<Point> poly;
    poly.push_back(tri_.vertex(from));
    for (std::size_t i = 0; i < tpath.size(); ++i) {
        if (i > 0) {
            // midpoint of edge shared with previous triangle
            int t = tpath[i - 1];
            for (int e = 0; e < 3; ++e)
                if (ts[t].n[e] == tpath[i]) {
                    int a = ts[t].v[(e + 1) % 3], b = ts[t].v[(e + 2) % 3];
                    poly.push_back(tri_.edge_midpoint(a, b));
                }
        }
        poly.push_back(tri_.centroid(tpath[i]));
    }
    poly.push_back(tri_.vertex(to));
    // Drop consecutive duplicates (degenerate when from/to share a triangle).
    std::vector<Point> clean;
    for (const Point& p : poly)
        if (clean.empty() || clean.back() != p) clean.push_back(p);
    if (clean.size() < 2) return std::nullopt;
    return clean;
}

void Domain::commit_walls(const std::vector<Point>& polyline, int conn_id, int piece_id) {
    EdgeTag tag;
    tag.hard = true;
    tag.kind = kKindConnector;
    tag.conn = conn_id;
    tag.piece = piece_id;
    std::vector<int> vids;
    for (const Point& p : polyline) vids.push_back(tri_.insert_point(p));
    for (std::size_t i = 0; i + 1 < vids.size(); ++i)
        if (vids[i] != vids[i + 1]) tri_.insert_constraint(vids[i], vids[i + 1], tag);
    recompute();
}

Rat difference_area2(const Region& region, const std::vector<Region>& earlier) {
    std::vector<Segment> soft;
    for (const Region& r : earlier)
        for (std::size_t i = 0; i < r.boundary.segment_count(); ++i) soft.push_back(r.boundary.segment(i));
    Domain dom(region, {}, soft, {});
    Rat area = 0;
    const auto& ts = dom.tri().tris();
    for (std::size_t t = 0; t < ts.size(); ++t) {
        if (!ts[t].alive || !dom.tri_inside(static_cast<int>(t))) continue;
        Point c = dom.tri().centroid(static_cast<int>(t));
        bool outside_all = true;
        for (const Region& r : earlier)
            if (point_location(c, r) != Location::Exterior) {
                outside_all = false;
                break;
            }
        if (!outside_all) continue;
        const Point &a = dom.tri().vertex(ts[t].v[0]), &b = dom.tri().vertex(ts[t].v[1]),
                    &cc = dom.tri().vertex(ts[t].v[2]);
        area += cross(b - a, cc - a);
    }
    return area;
}

std::optional<Point> interior_point_outside(const Region& region, const std::vector<Region>& earlier,
                                            const std::vector<Point>& extra_vertices) {
    std::vector<Segment> soft;
    for (const Region& r : earlier)
        for (std::size_t i = 0; i < r.boundary.segment_count(); ++i) soft.push_back(r.boundary.segment(i));
    Domain dom(region, {}, soft, extra_vertices);
    std::optional<Point> best;
    const auto& ts = dom.tri().tris();
    for (std::size_t t = 0; t < ts.size(); ++t) {
        if (!ts[t].alive || !dom.tri_inside(static_cast<int>(t))) continue;
        Point c = dom.tri().centroid(static_cast<int>(t));
        bool outside_all = true;
        for (const Region& r : earlier)
            if (point_location(c, r) != Location::Exterior) {
                outside_all = false;
                break;
            }
        if (!outside_all) continue;
        if (!best || c < *best) best = c;
    }
    return best;
}

}  // namespace ncc
