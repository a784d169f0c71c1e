#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "ncc/verifier.hpp"

namespace ncc {

namespace {

struct Grid {
    std::vector<Rat> xs, ys;
    int nx = 0, ny = 0;
    int node(int ix, int iy) const { return iy * nx + ix; }
    Point pt(int id) const { return Point{xs[id % nx], ys[id / nx]}; }
};

std::vector<Rat> axis_values(std::vector<Rat> critical, int resolution) {
    std::sort(critical.begin(), critical.end());
    critical.erase(std::unique(critical.begin(), critical.end()), critical.end());
    std::vector<Rat> out;
    for (std::size_t i = 0; i < critical.size(); ++i) {
        out.push_back(critical[i]);
        if (i + 1 < critical.size()) {
            Rat step = (critical[i + 1] - critical[i]) / resolution;
            for (int k = 1; k < resolution; ++k) out.push_back(critical[i] + k * step);
        }
    }
    return out;
}

Grid build_grid(const Instance& inst, int resolution) {
    std::vector<Rat> cx, cy;
    for (const Region& r : inst.regions)
        for (const Point& v : r.boundary.vertices) {
            cx.push_back(v.x);
            cy.push_back(v.y);
        }
    for (std::size_t i = 0; i < inst.regions.size(); ++i)
        for (std::size_t j = i + 1; j < inst.regions.size(); ++j)
            for (const auto& ip : boundary_intersections(inst.regions[i], inst.regions[j])) {
                cx.push_back(ip.location.x);
                cy.push_back(ip.location.y);
            }
    for (const auto& ps : inst.point_sets)
        for (const Point& p : ps) {
            cx.push_back(p.x);
            cy.push_back(p.y);
        }
    Grid g;
    g.xs = axis_values(std::move(cx), resolution);
    g.ys = axis_values(std::move(cy), resolution);
    g.nx = static_cast<int>(g.xs.size());
    g.ny = static_cast<int>(g.ys.size());
    return g;
}

struct Searcher {
    const Instance& inst;
    const Grid& g;
    std::size_t budget;
    std::size_t nodes = 0;
    bool out_of_budget = false;

    int n_nodes;
    // Per region: node usable, edge usable (4-neighborhood).
    std::vector<std::vector<char>> node_ok;   // [region][node]
    std::vector<std::vector<char>> node_in;   // [region][node]: non-exterior
    std::vector<std::array<int, 4>> adj;      // geometric neighbors, -1 if none
    std::vector<std::vector<std::array<char, 4>>> edge_ok;  // [region][node][dir]

    std::vector<std::vector<int>> terminals;  // grid node ids per connector
    std::vector<int> order;                   // connector processing order
    std::vector<int> used;                    // node -> connector id or -1
    std::vector<std::vector<int>> chosen;     // per connector: chosen set

    const std::vector<ConnectorConstraint>& constraints;

    Searcher(const Instance& i, const Grid& gr, std::size_t b,
             const std::vector<ConnectorConstraint>& cons)
        : inst(i), g(gr), budget(b), constraints(cons) {
        n_nodes = g.nx * g.ny;
        std::size_t R = inst.regions.size();
        node_ok.assign(R, std::vector<char>(n_nodes, 0));
        node_in = node_ok;
        edge_ok.assign(R, std::vector<std::array<char, 4>>(n_nodes, {0, 0, 0, 0}));
        adj.assign(n_nodes, {-1, -1, -1, -1});
        for (int iy = 0; iy < g.ny; ++iy)
            for (int ix = 0; ix < g.nx; ++ix) {
                int id = g.node(ix, iy);
                if (ix + 1 < g.nx) adj[id][0] = g.node(ix + 1, iy);
                if (ix > 0) adj[id][1] = g.node(ix - 1, iy);
                if (iy + 1 < g.ny) adj[id][2] = g.node(ix, iy + 1);
                if (iy > 0) adj[id][3] = g.node(ix, iy - 1);
            }
        for (std::size_t r = 0; r < R; ++r) {
            for (int id = 0; id < n_nodes; ++id) {
                Location loc = point_location(g.pt(id), inst.regions[r]);
                node_in[r][id] = loc != Location::Exterior;
                node_ok[r][id] = node_in[r][id];
            }
            for (int id = 0; id < n_nodes; ++id) {
                for (int d = 0; d < 4; ++d) {
                    int nb = adj[id][d];
                    if (nb < 0 || !node_ok[r][id] || !node_ok[r][nb]) continue;
                    if (d == 1 || d == 3) continue;  // dedupe: test +x/+y only
                    bool ok = segment_in_region(Segment{g.pt(id), g.pt(nb)}, inst.regions[r]);
                    edge_ok[r][id][d] = ok;
                    int back = (d == 0) ? 1 : 3;
                    edge_ok[r][nb][back] = ok;
                }
            }
        }
        terminals.resize(R);
        for (std::size_t r = 0; r < R; ++r) {
            for (const Point& p : inst.point_sets[r]) {
                int ix = -1, iy = -1;
                for (int k = 0; k < g.nx; ++k)
                    if (g.xs[k] == p.x) ix = k;
                for (int k = 0; k < g.ny; ++k)
                    if (g.ys[k] == p.y) iy = k;
                if (ix < 0 || iy < 0)
                    throw std::logic_error("brute_force: terminal is not a grid vertex");
                terminals[r].push_back(g.node(ix, iy));
            }
            std::sort(terminals[r].begin(), terminals[r].end());
            terminals[r].erase(std::unique(terminals[r].begin(), terminals[r].end()),
                               terminals[r].end());
        }
        used.assign(n_nodes, -1);
        chosen.resize(R);
        order.resize(R);
        for (std::size_t r = 0; r < R; ++r) order[r] = static_cast<int>(r);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return terminals[a].size() > terminals[b].size();
        });
    }

    const ConnectorConstraint* constraint_for(int conn) const {
        for (const auto& c : constraints)
            if (c.connector == conn) return &c;
        return nullptr;
    }

    bool node_allowed(int conn, int id) const {
        if (!node_ok[conn][id] || used[id] >= 0) return false;
        const ConnectorConstraint* c = constraint_for(conn);
        if (c && c->kind == ConnectorConstraint::Kind::MustStay)
            return point_location(g.pt(id), c->region) != Location::Exterior;
        return true;
    }

    // Terminals of connector r mutually reachable through free usable nodes.
    bool terminals_connected(int r) const {
        if (terminals[r].empty()) return true;
        int start = terminals[r][0];
        if (!node_allowed(r, start)) return false;
        std::vector<char> seen(n_nodes, 0);
        std::deque<int> q{start};
        seen[start] = 1;
        while (!q.empty()) {
            int id = q.front();
            q.pop_front();
            for (int d = 0; d < 4; ++d) {
                int nb = adj[id][d];
                if (nb < 0 || seen[nb] || !edge_ok[r][id][d] || !node_allowed(r, nb)) continue;
                seen[nb] = 1;
                q.push_back(nb);
            }
        }
        for (int t : terminals[r])
            if (!seen[t]) return false;
        return true;
    }

    bool future_ok(std::size_t from_pos) const {
        for (std::size_t k = from_pos; k < order.size(); ++k)
            if (!terminals_connected(order[k])) return false;
        return true;
    }

    bool cover_ok(int conn, const std::vector<int>& set) const {
        for (int t : terminals[conn])
            if (std::find(set.begin(), set.end(), t) == set.end()) return false;
        const ConnectorConstraint* c = constraint_for(conn);
        if (c && c->kind == ConnectorConstraint::Kind::MustExit) {
            bool has_exit = false;
            for (int id : set)
                if (point_location(g.pt(id), c->region) == Location::Exterior) has_exit = true;
            if (!has_exit) return false;
        }
        if (set.size() < 2) return false;  // connectors are polylines, need 2 vertices
        return true;
    }

    bool solved = false;

    // Canonical connected-subset enumeration for connector at position pos.
    // `set` grows from its first terminal; `banned` enforces uniqueness.
    bool grow(std::size_t pos, std::vector<int>& set, std::vector<char>& in_set,
              std::vector<char>& banned) {
        if (out_of_budget) return false;
        if (++nodes > budget) {
            out_of_budget = true;
            return false;
        }
        int conn = order[pos];
        if (cover_ok(conn, set)) {
            for (int id : set) used[id] = conn;
            chosen[conn] = set;
            bool done = future_ok(pos + 1) && place(pos + 1);
            if (!done)
                for (int id : set) used[id] = -1;
            return done;
        }
        // Frontier candidates in increasing id order.
        std::vector<int> cands;
        for (int id : set)
            for (int d = 0; d < 4; ++d) {
                int nb = adj[id][d];
                if (nb < 0 || in_set[nb] || banned[nb]) continue;
                if (!edge_ok[conn][id][d] || !node_allowed(conn, nb)) continue;
                cands.push_back(nb);
            }
        std::sort(cands.begin(), cands.end());
        cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
        std::vector<int> newly_banned;
        bool done = false;
        for (int nb : cands) {
            set.push_back(nb);
            in_set[nb] = 1;
            if (reachable_remaining(conn, set, in_set, banned)) {
                done = grow(pos, set, in_set, banned);
            }
            in_set[nb] = 0;
            set.pop_back();
            if (done || out_of_budget) break;
            banned[nb] = 1;  // subsets containing nb are covered by that branch
            newly_banned.push_back(nb);
            if (!reachable_remaining(conn, set, in_set, banned)) break;
        }
        for (int nb : newly_banned) banned[nb] = 0;
        return done;
    }

    // Remaining terminals of conn still reachable from the set through
    // unbanned free nodes.
    bool reachable_remaining(int conn, const std::vector<int>& set, const std::vector<char>& in_set,
                             const std::vector<char>& banned) const {
        std::vector<char> seen(n_nodes, 0);
        std::deque<int> q;
        for (int id : set) {
            seen[id] = 1;
            q.push_back(id);
        }
        while (!q.empty()) {
            int id = q.front();
            q.pop_front();
            for (int d = 0; d < 4; ++d) {
                int nb = adj[id][d];
                if (nb < 0 || seen[nb] || banned[nb]) continue;
                if (!edge_ok[conn][id][d] || !node_allowed(conn, nb)) continue;
                seen[nb] = 1;
                q.push_back(nb);
            }
        }
        for (int t : terminals[conn])
            if (!seen[t]) return false;
        const ConnectorConstraint* c = constraint_for(conn);
        if (c && c->kind == ConnectorConstraint::Kind::MustExit) {
            bool can_exit = false;
            for (int id = 0; id < n_nodes && !can_exit; ++id)
                if (seen[id] && point_location(g.pt(id), c->region) == Location::Exterior)
                    can_exit = true;
            if (!can_exit) return false;
        }
        return true;
    }

    bool place(std::size_t pos) {
        if (out_of_budget) return false;
        if (pos == order.size()) {
            solved = true;
            return true;
        }
        int conn = order[pos];
        if (terminals[conn].empty()) return false;
        std::vector<int> set{terminals[conn][0]};
        if (!node_allowed(conn, set[0])) return false;
        std::vector<char> in_set(n_nodes, 0), banned(n_nodes, 0);
        in_set[set[0]] = 1;
        return grow(pos, set, in_set, banned);
    }

    Polyline walk_polyline(int conn) const {
        // Spanning tree over the chosen set, then a doubling DFS walk.
        const std::vector<int>& set = chosen[conn];
        std::set<int> sset(set.begin(), set.end());
        std::map<int, std::vector<int>> tree;
        std::map<int, char> seen;
        std::deque<int> q{set[0]};
        seen[set[0]] = 1;
        while (!q.empty()) {
            int id = q.front();
            q.pop_front();
            for (int d = 0; d < 4; ++d) {
                int nb = adj[id][d];
                if (nb < 0 || !sset.count(nb) || seen.count(nb) || !edge_ok[conn][id][d]) continue;
                seen[nb] = 1;
                tree[id].push_back(nb);
                q.push_back(nb);
            }
        }
        Polyline out;
        std::vector<std::pair<int, std::size_t>> stack{{set[0], 0}};
        out.vertices.push_back(g.pt(set[0]));
        while (!stack.empty()) {
            auto& [id, next] = stack.back();
            auto it = tree.find(id);
            if (it == tree.end() || next >= it->second.size()) {
                stack.pop_back();
                if (!stack.empty()) out.vertices.push_back(g.pt(stack.back().first));
                continue;
            }
            int child = it->second[next++];
            stack.push_back({child, 0});
            out.vertices.push_back(g.pt(child));
        }
        if (out.vertices.size() < 2) out.vertices.push_back(g.pt(set[1]));
        return out;
    }
};

}  // namespace

BruteForceResult brute_force_decide(const Instance& inst, int resolution, std::size_t node_budget,
                                    const std::vector<ConnectorConstraint>& constraints) {
    BruteForceResult result;
    Grid grid = build_grid(inst, resolution);
    Searcher s(inst, grid, node_budget, constraints);
    bool ok = s.place(0);
    result.nodes_explored = s.nodes;
    if (ok) {
        ConnectorSet sol;
        sol.connectors.resize(inst.regions.size());
        for (std::size_t r = 0; r < inst.regions.size(); ++r)
            sol.connectors[r] = s.walk_polyline(static_cast<int>(r));
        result.witness = std::move(sol);
        result.status = BruteForceStatus::Feasible;
    } else if (s.out_of_budget) {
        result.status = BruteForceStatus::ResourceLimit;
    } else {
        result.status = BruteForceStatus::InfeasibleAtResolution;
    }
    return result;
}

}  // namespace ncc
