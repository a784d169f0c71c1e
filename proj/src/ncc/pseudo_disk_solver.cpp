#include "ncc/pseudo_disk_solver.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ncc/verifier.hpp"

namespace ncc {

namespace {

Point rightmost_point(const Region& r) {
    Point best = r.boundary.vertices[0];
    for (const Point& v : r.boundary.vertices)
        if (v.x > best.x || (v.x == best.x && v.y > best.y)) best = v;
    return best;
}

}  // namespace

std::vector<std::size_t> order_regions(const Instance& inst) {
    auto cls = classify_collection(inst.regions);
    if (!cls.pseudo_disks)
        throw NotPseudoDisks("collection is not 2-intersecting with crossings only (k=" +
                             std::to_string(cls.k) + ")");
    std::vector<std::size_t> order(inst.regions.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::vector<Point> rm;
    for (const Region& r : inst.regions) rm.push_back(rightmost_point(r));
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (rm[a].x != rm[b].x) return rm[a].x < rm[b].x;
        if (rm[a].y != rm[b].y) return rm[a].y < rm[b].y;
        return a < b;
    });
    return order;
}

Point pick_private_point(const Instance& inst, const std::vector<std::size_t>& order,
                         std::size_t pos, const std::vector<Point>& known_points) {
    std::vector<Region> earlier;
    for (std::size_t k = 0; k < pos; ++k) earlier.push_back(inst.regions[order[k]]);
    auto p = interior_point_outside(inst.regions[order[pos]], earlier, known_points);
    if (!p)
        throw EmptyDifference("region " + std::to_string(order[pos]) +
                              " minus earlier regions is empty (ordering contract violated)");
    return *p;
}

ComponentTreeView component_tree(const Region& region, const std::vector<Polyline>& routed,
                                 const Point& root_point) {
    Domain dom(region, routed, {}, {});
    auto tree = dom.component_tree(root_point);
    ComponentTreeView view;
    view.component_count = dom.component_count();
    view.root = tree.root;
    view.parent = tree.parent;
    view.depth = tree.depth;
    for (const auto& piece : dom.pieces())
        if (piece.separating) ++view.chord_count;
    return view;
}

namespace {

// Replaces the subarc of `poly` between q1 and q2 (both inside one segment of
// the polyline) with the detour vertices (which run q1 -> ... -> q2).
void splice_detour(Polyline& poly, const Point& q1, const Point& q2,
                   const std::vector<Point>& detour) {
    for (std::size_t s = 0; s + 1 < poly.vertices.size(); ++s) {
        Segment seg{poly.vertices[s], poly.vertices[s + 1]};
        if (!on_segment(q1, seg) || !on_segment(q2, seg)) continue;
        Rat d1 = dist2(seg.a, q1), d2 = dist2(seg.a, q2);
        std::vector<Point> mid(detour.begin(), detour.end());
        if (d2 < d1) std::reverse(mid.begin(), mid.end());
        // mid now runs from the q nearer seg.a to the one nearer seg.b.
        std::vector<Point> out(poly.vertices.begin(), poly.vertices.begin() + s + 1);
        out.insert(out.end(), mid.begin(), mid.end());
        out.insert(out.end(), poly.vertices.begin() + s + 1, poly.vertices.end());
        // Drop consecutive duplicates (q1/q2 may coincide with seg endpoints).
        std::vector<Point> clean;
        for (const Point& p : out)
            if (clean.empty() || clean.back() != p) clean.push_back(p);
        poly.vertices = std::move(clean);
        return;
    }
    throw std::logic_error("splice_detour: q1/q2 not found on one segment");
}

struct SolverState {
    const Instance& inst;
    std::vector<std::optional<Polyline>> routed;  // by original region index
    std::vector<std::vector<Point>> aug;          // augmented point sets
    std::vector<Point> known_points;              // all P points + chosen privates
    SolveStats* stats;

    explicit SolverState(const Instance& i, SolveStats* s) : inst(i), stats(s) {
        routed.resize(inst.regions.size());
        aug = inst.point_sets;
        for (const auto& ps : inst.point_sets)
            known_points.insert(known_points.end(), ps.begin(), ps.end());
    }

    std::vector<Polyline> obstacle_list(std::vector<int>* owner) const {
        std::vector<Polyline> obs;
        for (std::size_t j = 0; j < routed.size(); ++j)
            if (routed[j]) {
                obs.push_back(*routed[j]);
                if (owner) owner->push_back(static_cast<int>(j));
            }
        return obs;
    }

    std::vector<Segment> soft_segments(std::size_t self) const {
        std::vector<Segment> soft;
        for (std::size_t r = 0; r < inst.regions.size(); ++r) {
            if (r == self) continue;
            const auto& b = inst.regions[r].boundary;
            for (std::size_t s = 0; s < b.segment_count(); ++s) soft.push_back(b.segment(s));
        }
        return soft;
    }

    // Common component of the fans of two vertices, restricted to inside
    // triangles; -1 if none.
    static int shared_component(const Domain& dom, int a, int b) {
        std::set<int> ca, cb;
        for (int t : dom.tri().incident(a))
            if (dom.tri_inside(t)) ca.insert(dom.component_of_tri(t));
        for (int t : dom.tri().incident(b))
            if (dom.tri_inside(t)) cb.insert(dom.component_of_tri(t));
        for (int c : ca)
            if (cb.count(c)) return c;
        return -1;
    }

    // Routes a simple polyline visiting `targets` in order inside the domain,
    // committing each leg as walls so later legs avoid earlier ones.
    Polyline route_chain(Domain& dom, const std::vector<Point>& targets, int temp_conn_id) {
        Polyline result;
        for (std::size_t t = 0; t + 1 < targets.size(); ++t) {
            int from = dom.vertex_of(targets[t]);
            int to = dom.vertex_of(targets[t + 1]);
            if (from < 0 || to < 0) throw std::logic_error("route_chain: target not a vertex");
            int want = shared_component(dom, from, to);
            if (want < 0) throw std::logic_error("route_chain: targets in different components");
            auto leg = dom.route_leg(from, to, want);
            if (!leg) throw std::logic_error("route_chain: leg routing failed");
            dom.commit_walls(*leg, temp_conn_id, static_cast<int>(t));
            if (result.vertices.empty())
                result.vertices = *leg;
            else
                result.vertices.insert(result.vertices.end(), leg->begin() + 1, leg->end());
        }
        return result;
    }

    // Greedy shortcutting: drop interior non-anchor vertices whose removal
    // keeps the polyline inside its region, disjoint from everything, and
    // sweeps no known point across (empty removed triangle).
    void shortcut(std::size_t owner_idx) {
        Polyline& poly = *routed[owner_idx];
        std::set<Point> anchors(aug[owner_idx].begin(), aug[owner_idx].end());
        for (int pass = 0; pass < 4; ++pass) {
            bool changed = false;
            std::size_t i = 1;
            while (i + 1 < poly.vertices.size()) {
                const Point& mid = poly.vertices[i];
                if (anchors.count(mid)) {
                    ++i;
                    continue;
                }
                if (poly.vertices[i - 1] == poly.vertices[i + 1]) {
                    poly.vertices.erase(poly.vertices.begin() + i, poly.vertices.begin() + i + 2);
                    changed = true;
                    if (i + 1 >= poly.vertices.size()) break;
                    continue;
                }
                if (!shortcut_ok(owner_idx, poly, i)) {
                    ++i;
                    continue;
                }
                poly.vertices.erase(poly.vertices.begin() + i);
                changed = true;
            }
            if (!changed) break;
        }
    }

    bool shortcut_ok(std::size_t owner_idx, const Polyline& poly, std::size_t i) const {
        const Point& prev = poly.vertices[i - 1];
        const Point& mid = poly.vertices[i];
        const Point& next = poly.vertices[i + 1];
        Segment cand{prev, next};
        if (orient(prev, mid, next) != 0) {
            std::vector<Point> tri{prev, mid, next};
            for (const Point& p : known_points)
                if (p != prev && p != next && point_in_ring(p, tri) != Location::Exterior)
                    return false;
        }
        for (const Point& p : known_points)
            if (p != prev && p != next && on_segment(p, cand)) return false;
        if (!segment_in_region(cand, inst.regions[owner_idx])) return false;
        for (std::size_t j = 0; j < routed.size(); ++j) {
            if (j == owner_idx || !routed[j]) continue;
            for (std::size_t s = 0; s < routed[j]->segment_count(); ++s)
                if (segments_meet(cand, routed[j]->segment(s))) return false;
        }
        for (std::size_t s = 0; s + 1 < poly.vertices.size(); ++s) {
            if (s == i - 1 || s == i) continue;  // the two segments being replaced
            Segment other{poly.vertices[s], poly.vertices[s + 1]};
            auto isect = segment_intersection(cand, other);
            if (std::holds_alternative<SegIntersectEmpty>(isect)) continue;
            bool adj_prev = (s + 1 == i - 1);
            bool adj_next = (s == i + 1);
            if (!adj_prev && !adj_next) return false;
            if (std::holds_alternative<SegIntersectOverlap>(isect)) return false;
            Point at = std::get<SegIntersectPoint>(isect).p;
            if (adj_prev && at != prev) return false;
            if (adj_next && at != next) return false;
        }
        return true;
    }
};

}  // namespace

ConnectorSet solve_pseudo_disks(const Instance& inst, SolveStats* stats) {
    ValidationReport vr = validate(inst);
    if (!vr.ok()) throw std::invalid_argument("invalid instance: " + vr.violations[0].message);
    auto order = order_regions(inst);  // throws NotPseudoDisks
    SolverState st(inst, stats);

    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        std::size_t r = order[pos];
        const Region& region = inst.regions[r];
        Point private_pt = pick_private_point(inst, order, pos, st.known_points);
        st.aug[r].push_back(private_pt);
        st.known_points.push_back(private_pt);

        std::optional<long> last_progress;
        while (true) {
            std::vector<int> owner;
            std::vector<Polyline> obstacles = st.obstacle_list(&owner);
            Domain dom(region, obstacles, st.soft_segments(r), st.known_points);
            auto tree = dom.component_tree(private_pt);
            long progress = 0;
            std::vector<int> comp_of(st.aug[r].size());
            for (std::size_t k = 0; k < st.aug[r].size(); ++k) {
                int c = dom.component_of_point(st.aug[r][k]);
                if (c < 0) throw std::logic_error("solver: point without component");
                comp_of[k] = c;
                progress += tree.depth[c];
            }
            if (last_progress && progress >= *last_progress)
                throw InternalProgressStall("progress measure failed to decrease (" +
                                            std::to_string(*last_progress) + " -> " +
                                            std::to_string(progress) + ")");
            last_progress = progress;
            if (progress == 0) {
                std::vector<Point> targets = st.aug[r];
                std::sort(targets.begin(), targets.end());
                Polyline gamma = st.route_chain(dom, targets, static_cast<int>(r));
                st.routed[r] = gamma;
                st.shortcut(r);
                break;
            }
            // Deepest component holding points of aug[r]; its descendants hold none.
            int C = -1;
            for (std::size_t k = 0; k < comp_of.size(); ++k)
                if (tree.depth[comp_of[k]] > 0 && (C < 0 || tree.depth[comp_of[k]] > tree.depth[C]))
                    C = comp_of[k];
            if (C < 0) throw std::logic_error("solver: positive progress but no deep component");
            std::size_t piece_idx = tree.parent_piece[C];
            const Domain::Piece& piece = dom.pieces()[piece_idx];
            int jstar = owner[piece.conn];
            const Region& rj = inst.regions[jstar];
            // Lemma 1: C lies in the interior of R_{j*}; a breach means a
            // non-pseudo-disk pair slipped through classification.
            const auto& ts = dom.tri().tris();
            Point c_probe{0, 0};
            bool have_probe = false;
            for (std::size_t t = 0; t < ts.size(); ++t) {
                if (!ts[t].alive || dom.component_of_tri(static_cast<int>(t)) != C) continue;
                for (int v = 0; v < 3; ++v)
                    if (point_location(dom.tri().vertex(ts[t].v[v]), rj) == Location::Exterior)
                        throw LemmaViolation("component not inside owner region " +
                                             std::to_string(jstar));
                if (!have_probe) {
                    c_probe = dom.tri().centroid(static_cast<int>(t));
                    have_probe = true;
                }
            }
            if (!have_probe) throw std::logic_error("solver: component with no triangles");
            // q = midpoint of a chain edge bordering C and its parent; q1, q2
            // flank it within the same triangulation edge.
            int qu = -1, qv = -1;
            for (std::size_t e = 0; e + 1 < piece.chain.size(); ++e) {
                int a = piece.chain[e], b = piece.chain[e + 1];
                int t = -1, ei = -1;
                if (!dom.tri().edge_exists(a, b, &t, &ei)) continue;
                int nb = dom.tri().tris()[t].n[ei];
                if (nb < 0) continue;
                int ca = dom.component_of_tri(t), cb = dom.component_of_tri(nb);
                if ((ca == C && cb == tree.parent[C]) || (cb == C && ca == tree.parent[C])) {
                    qu = a;
                    qv = b;
                    break;
                }
            }
            if (qu < 0) throw std::logic_error("solver: no chord edge between C and parent");
            Point pu = dom.tri().vertex(qu), pv = dom.tri().vertex(qv);
            Point q{(pu.x + pv.x) / 2, (pu.y + pv.y) / 2};
            Point q1{(pu.x + q.x) / 2, (pu.y + q.y) / 2};
            Point q2{(q.x + pv.x) / 2, (q.y + pv.y) / 2};
            dom.add_vertex(q);
            dom.add_vertex(q1);
            dom.add_vertex(q2);
            int C_now = dom.component_of_point(c_probe);
            // delta from q through all aug[r] points in C, lexicographic order.
            std::vector<Point> delta_targets;
            std::vector<int> boundary_fans;
            for (std::size_t k = 0; k < st.aug[r].size(); ++k)
                if (dom.component_of_point(st.aug[r][k]) == C_now) delta_targets.push_back(st.aug[r][k]);
            std::sort(delta_targets.begin(), delta_targets.end());
            if (delta_targets.empty()) throw std::logic_error("solver: empty delta target set");
            std::vector<Point> chain_pts{q};
            chain_pts.insert(chain_pts.end(), delta_targets.begin(), delta_targets.end());
            st.route_chain(dom, chain_pts, -1000);
            // Targets on the region boundary cannot be wrapped through the
            // boundary; blocking their fans makes the detour enclose them.
            for (const Point& p : delta_targets)
                if (point_location(p, region) == Location::Boundary)
                    boundary_fans.push_back(dom.vertex_of(p));
            int v1 = dom.vertex_of(q1), v2 = dom.vertex_of(q2);
            int comp_detour = dom.component_of_point(c_probe);
            auto detour = dom.route_leg(v1, v2, comp_detour,
                                        boundary_fans.empty() ? nullptr : &boundary_fans);
            if (!detour) throw std::logic_error("solver: detour routing failed");
            splice_detour(*st.routed[jstar], q1, q2, *detour);
            st.shortcut(static_cast<std::size_t>(jstar));
            if (stats) ++stats->reroute_steps;
        }
    }
    ConnectorSet sol;
    for (std::size_t i = 0; i < inst.regions.size(); ++i) {
        sol.connectors.push_back(*st.routed[i]);
        if (stats) stats->total_vertices += st.routed[i]->vertices.size();
    }
    return sol;
}

}  // namespace ncc
