#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ncc/rational.hpp"

namespace ncc {

struct Point {
    Rat x;
    Rat y;

    Point() = default;
    Point(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {}

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
    // Lexicographic (x, y) is the canonical tie-breaking order everywhere.
    bool operator<(const Point& o) const {
        if (x != o.x) return x < o.x;
        return y < o.y;
    }
};

inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(const Rat& s, const Point& p) { return {s * p.x, s * p.y}; }

inline Rat cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline Rat dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }

// Sign of the signed area of triangle (a, b, c): +1 left turn, -1 right turn.
inline int orient(const Point& a, const Point& b, const Point& c) {
    return sgn(cross(b - a, c - a));
}

inline Rat dist2(const Point& a, const Point& b) {
    Point d = b - a;
    return d.x * d.x + d.y * d.y;
}

struct Segment {
    Point a;
    Point b;
};

// Closed-segment membership, endpoints included.
bool on_segment(const Point& p, const Segment& s);

// Exact squared distance from a point to a closed segment.
Rat point_segment_dist2(const Point& p, const Segment& s);

struct SegIntersectEmpty {};
struct SegIntersectPoint {
    Point p;
};
struct SegIntersectOverlap {
    Segment s;
};
using SegIntersection = std::variant<SegIntersectEmpty, SegIntersectPoint, SegIntersectOverlap>;

// Exact intersection of two closed segments; total and symmetric.
SegIntersection segment_intersection(const Segment& s1, const Segment& s2);

inline bool segments_meet(const Segment& s1, const Segment& s2) {
    return !std::holds_alternative<SegIntersectEmpty>(segment_intersection(s1, s2));
}

struct Polyline {
    std::vector<Point> vertices;
    bool closed = false;

    std::size_t segment_count() const {
        if (vertices.size() < 2) return 0;
        return closed ? vertices.size() : vertices.size() - 1;
    }
    Segment segment(std::size_t i) const {
        return {vertices[i], vertices[(i + 1) % vertices.size()]};
    }
};

// Consecutive vertices distinct; closed polylines must be simple.
bool polyline_valid(const Polyline& p, std::string* why = nullptr);

// True iff no pair of segments of a and b intersects; endpoint contact counts.
bool polyline_disjoint(const Polyline& a, const Polyline& b);

// Self-intersection check for an open polyline (consecutive segments may share
// exactly their common vertex).
bool polyline_simple(const Polyline& p);

struct Region {
    Polyline boundary;  // closed simple polyline
    int id = -1;
};

// Twice the signed area of a closed polyline.
Rat polygon_area2(const Polyline& ring);

enum class Location { Interior, Boundary, Exterior };

// Exact ray-crossing point location against the closed region.
Location point_location(const Point& p, const Region& r);
Location point_in_ring(const Point& p, const std::vector<Point>& ring);

// Winding-number location for simple rings; used as an independent oracle.
Location point_in_ring_winding(const Point& p, const std::vector<Point>& ring);

enum class IntersectKind { Crossing, Touching };

struct IntersectionPoint {
    Point location;
    IntersectKind kind;
    int region_a = -1;
    int region_b = -1;
};

struct DegenerateBoundaryOverlap : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// All points of dA ∩ dB, classified by the cyclic order of the four boundary
// branches, sorted lexicographically. Throws DegenerateBoundaryOverlap if the
// boundaries share a segment of positive length.
std::vector<IntersectionPoint> boundary_intersections(const Region& a, const Region& b);

struct PairClassification {
    int region_a = -1;
    int region_b = -1;
    std::size_t count = 0;
    bool all_crossing = true;
};

struct CollectionClassification {
    std::vector<PairClassification> pairs;
    std::size_t k = 0;  // max pair count rounded up to even
    bool all_crossing = true;
    bool pseudo_disks = false;  // k <= 2 and every point a crossing
};

CollectionClassification classify_collection(const std::vector<Region>& regions);

// True iff the closed segment stays inside the closed region. Assumes both
// endpoints are already known to be non-exterior.
bool segment_in_region(const Segment& s, const Region& r);

}  // namespace ncc
