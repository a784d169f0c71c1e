#pragma once

#include <optional>
#include <vector>

#include "ncc/instance.hpp"
#include "ncc/routing.hpp"

namespace ncc {

struct NotPseudoDisks : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct EmptyDifference : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct LemmaViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InternalProgressStall : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Region order by non-decreasing x of the rightmost boundary point, ties by
// that point's y, then input index. Requires a pseudo-disk collection.
std::vector<std::size_t> order_regions(const Instance& inst);

// Deterministic point strictly inside regions[order[pos]] and strictly outside
// all earlier regions in the order; EmptyDifference if none exists.
Point pick_private_point(const Instance& inst, const std::vector<std::size_t>& order,
                         std::size_t pos, const std::vector<Point>& known_points);

// Public view of the component structure of region minus routed connectors.
struct ComponentTreeView {
    int component_count = 0;
    int root = -1;
    std::vector<int> parent;  // -1 at root
    std::vector<int> depth;
    std::size_t chord_count = 0;
};

ComponentTreeView component_tree(const Region& region, const std::vector<Polyline>& routed,
                                 const Point& root_point);

struct SolveStats {
    std::size_t reroute_steps = 0;
    std::size_t total_vertices = 0;
};

// Theorem 2 construction: always succeeds on a valid pseudo-disk instance.
ConnectorSet solve_pseudo_disks(const Instance& inst, SolveStats* stats = nullptr);

}  // namespace ncc
