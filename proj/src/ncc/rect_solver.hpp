#pragma once

#include <optional>
#include <vector>

#include "ncc/instance.hpp"

namespace ncc {

struct Rect {
    Rat x1, x2, y1, y2;  // closed [x1,x2] x [y1,y2], x1 < x2, y1 < y2

    Region to_region(int id) const {
        Region r;
        r.id = id;
        r.boundary.closed = true;
        r.boundary.vertices = {Point{x1, y1}, Point{x2, y1}, Point{x2, y2}, Point{x1, y2}};
        return r;
    }
    bool contains(const Point& p) const {
        return p.x >= x1 && p.x <= x2 && p.y >= y1 && p.y <= y2;
    }
};

struct NotRectangles : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Region -> Rect when the boundary is an axis-aligned rectangle (any vertex
// order/orientation); nullopt otherwise.
std::optional<Rect> as_rect(const Region& r);

// 4-intersecting pair: one rectangle's x-range strictly inside the other's
// and strictly containing it in y.
bool is_cross(const Rect& a, const Rect& b);

bool is_filled_cross(const Rect& a, const std::vector<Point>& pa, const Rect& b,
                     const std::vector<Point>& pb);

struct DecideStats {
    std::size_t pair_checks = 0;
};

// Theorem 3 / Corollary 1: O(n^2) pair scan for a filled cross. Returns true
// iff none exists (connectors exist). Optionally reports the offending pair.
bool decide_rectangles(const Instance& inst, DecideStats* stats = nullptr,
                       std::pair<int, int>* filled_pair = nullptr);

struct NoEmptyArm : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Chops crosses per the Theorem 3 proof until the collection is cross-free.
// Requires no filled cross. Returns shrunken rectangles, point-preserving and
// subset-monotone.
std::vector<Rect> chop_to_pseudo_disks(const std::vector<Rect>& rects,
                                       const std::vector<std::vector<Point>>& points);

// Decision + construction: nullopt iff a filled cross exists, otherwise chops
// and delegates to the pseudo-disk solver on the shrunken rectangles.
std::optional<ConnectorSet> solve_rectangles(const Instance& inst);

// Validation specific to the rectangle path: all regions rectangles with
// pairwise distinct corner coordinates per axis (general position).
void require_rect_general_position(const std::vector<Rect>& rects);

}  // namespace ncc
