#include "ncc/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ncc {

bool on_segment(const Point& p, const Segment& s) {
    if (orient(s.a, s.b, p) != 0) return false;
    if (s.a.x != s.b.x) {
        return (p.x >= std::min(s.a.x, s.b.x)) && (p.x <= std::max(s.a.x, s.b.x));
    }
    return (p.y >= std::min(s.a.y, s.b.y)) && (p.y <= std::max(s.a.y, s.b.y));
}

Rat point_segment_dist2(const Point& p, const Segment& s) {
    Point d = s.b - s.a;
    Rat len2 = dot(d, d);
    if (len2 == 0) return dist2(p, s.a);
    Rat t = dot(p - s.a, d) / len2;
    if (t <= 0) return dist2(p, s.a);
    if (t >= 1) return dist2(p, s.b);
    Point proj = s.a + t * d;
    return dist2(p, proj);
}

SegIntersection segment_intersection(const Segment& s1, const Segment& s2) {
    const Point &p = s1.a, &q = s2.a;
    Point r = s1.b - s1.a;
    Point s = s2.b - s2.a;
    Rat denom = cross(r, s);
    Rat qp_r = cross(q - p, r);
    if (denom == 0) {
        if (qp_r != 0) return SegIntersectEmpty{};  // parallel, distinct lines
        // Collinear: project onto the dominant axis of r.
        auto key = [&](const Point& pt) -> Rat {
            return (rat_abs(r.x) >= rat_abs(r.y)) ? pt.x : pt.y;
        };
        Point lo1 = s1.a, hi1 = s1.b, lo2 = s2.a, hi2 = s2.b;
        if (key(hi1) < key(lo1)) std::swap(lo1, hi1);
        if (key(hi2) < key(lo2)) std::swap(lo2, hi2);
        Point lo = key(lo1) < key(lo2) ? lo2 : lo1;
        Point hi = key(hi1) < key(hi2) ? hi1 : hi2;
        if (key(lo) > key(hi)) return SegIntersectEmpty{};
        if (lo == hi) return SegIntersectPoint{lo};
        return SegIntersectOverlap{Segment{lo, hi}};
    }
    Rat t = cross(q - p, s) / denom;
    Rat u = qp_r / denom;
    if (t < 0 || t > 1 || u < 0 || u > 1) return SegIntersectEmpty{};
    return SegIntersectPoint{p + t * r};
}

bool polyline_valid(const Polyline& p, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (p.vertices.size() < 2) return fail("fewer than 2 vertices");
    std::size_t n = p.vertices.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (p.vertices[i] == p.vertices[i + 1]) return fail("repeated consecutive vertex");
    if (p.closed) {
        if (p.vertices.front() == p.vertices.back()) return fail("closed ring repeats first vertex");
        if (n < 3) return fail("closed ring needs 3 vertices");
        // Simplicity: non-adjacent segments disjoint, adjacent share one vertex.
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                Segment si = p.segment(i), sj = p.segment(j);
                auto isect = segment_intersection(si, sj);
                if (std::holds_alternative<SegIntersectEmpty>(isect)) continue;
                bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
                if (!adjacent) return fail("non-adjacent boundary segments intersect");
                if (std::holds_alternative<SegIntersectOverlap>(isect))
                    return fail("adjacent boundary segments overlap");
                Point at = std::get<SegIntersectPoint>(isect).p;
                Point shared = (j == i + 1) ? p.vertices[j] : p.vertices[0];
                if (at != shared) return fail("adjacent boundary segments cross");
            }
        }
    }
    return true;
}

bool polyline_simple(const Polyline& p) {
    if (p.closed) return polyline_valid(p);
    std::size_t n = p.segment_count();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Segment si = p.segment(i), sj = p.segment(j);
            auto isect = segment_intersection(si, sj);
            if (std::holds_alternative<SegIntersectEmpty>(isect)) continue;
            if (j == i + 1) {
                if (std::holds_alternative<SegIntersectOverlap>(isect)) return false;
                if (std::get<SegIntersectPoint>(isect).p != p.vertices[j]) return false;
            } else {
                return false;
            }
        }
    }
    return true;
}

bool polyline_disjoint(const Polyline& a, const Polyline& b) {
    for (std::size_t i = 0; i < a.segment_count(); ++i)
        for (std::size_t j = 0; j < b.segment_count(); ++j)
            if (segments_meet(a.segment(i), b.segment(j))) return false;
    return true;
}

Rat polygon_area2(const Polyline& ring) {
    Rat acc = 0;
    std::size_t n = ring.vertices.size();
    for (std::size_t i = 0; i < n; ++i)
        acc += cross(ring.vertices[i], ring.vertices[(i + 1) % n]);
    return acc;
}

Location point_in_ring(const Point& p, const std::vector<Point>& ring) {
    std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i)
        if (on_segment(p, Segment{ring[i], ring[(i + 1) % n]})) return Location::Boundary;
    // Crossing number against the ray x -> +inf, half-open rule in y.
    bool inside = false;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = ring[i];
        const Point& b = ring[(i + 1) % n];
        if ((a.y > p.y) == (b.y > p.y)) continue;
        Rat x_at = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
        if (x_at > p.x) inside = !inside;
    }
    return inside ? Location::Interior : Location::Exterior;
}

Location point_in_ring_winding(const Point& p, const std::vector<Point>& ring) {
    std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i)
        if (on_segment(p, Segment{ring[i], ring[(i + 1) % n]})) return Location::Boundary;
    long winding = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = ring[i];
        const Point& b = ring[(i + 1) % n];
        if (a.y <= p.y) {
            if (b.y > p.y && orient(a, b, p) > 0) ++winding;
        } else {
            if (b.y <= p.y && orient(a, b, p) < 0) --winding;
        }
    }
    return winding != 0 ? Location::Interior : Location::Exterior;
}

Location point_location(const Point& p, const Region& r) {
    return point_in_ring(p, r.boundary.vertices);
}

namespace {

// Outgoing branch directions of a ring at point p (p on the ring).
std::vector<Point> branch_directions(const std::vector<Point>& ring, const Point& p) {
    std::vector<Point> dirs;
    std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = ring[i];
        const Point& b = ring[(i + 1) % n];
        Segment s{a, b};
        if (!on_segment(p, s)) continue;
        if (p == a) {
            dirs.push_back(b - a);
        } else if (p == b) {
            dirs.push_back(a - b);
        } else {
            dirs.push_back(b - p);
            dirs.push_back(a - p);
        }
    }
    return dirs;
}

// Strict angular order of direction vectors around the origin.
bool angle_less(const Point& u, const Point& v) {
    auto half = [](const Point& d) {
        // 0: angle in [0, pi), 1: [pi, 2pi)
        if (d.y > 0) return 0;
        if (d.y < 0) return 1;
        return d.x > 0 ? 0 : 1;
    };
    int hu = half(u), hv = half(v);
    if (hu != hv) return hu < hv;
    return sgn(cross(u, v)) > 0;
}

}  // namespace

std::vector<IntersectionPoint> boundary_intersections(const Region& ra, const Region& rb) {
    const auto& A = ra.boundary;
    const auto& B = rb.boundary;
    std::set<Point> pts;
    for (std::size_t i = 0; i < A.segment_count(); ++i) {
        for (std::size_t j = 0; j < B.segment_count(); ++j) {
            auto isect = segment_intersection(A.segment(i), B.segment(j));
            if (std::holds_alternative<SegIntersectOverlap>(isect))
                throw DegenerateBoundaryOverlap(
                    "regions " + std::to_string(ra.id) + "," + std::to_string(rb.id) +
                    " share a boundary segment of positive length");
            if (auto* sp = std::get_if<SegIntersectPoint>(&isect)) pts.insert(sp->p);
        }
    }
    std::vector<IntersectionPoint> out;
    for (const Point& p : pts) {
        std::vector<Point> da = branch_directions(A.vertices, p);
        std::vector<Point> db = branch_directions(B.vertices, p);
        // Tag and sort all branches angularly; crossing iff tags alternate.
        std::vector<std::pair<Point, int>> branches;
        for (auto& d : da) branches.emplace_back(d, 0);
        for (auto& d : db) branches.emplace_back(d, 1);
        std::sort(branches.begin(), branches.end(),
                  [](const auto& l, const auto& r) { return angle_less(l.first, r.first); });
        bool alternating = branches.size() == 4;
        if (alternating)
            for (std::size_t i = 0; i < 4; ++i)
                if (branches[i].second == branches[(i + 1) % 4].second) alternating = false;
        out.push_back(IntersectionPoint{
            p, alternating ? IntersectKind::Crossing : IntersectKind::Touching, ra.id, rb.id});
    }
    return out;  // std::set iteration is already lexicographic
}

CollectionClassification classify_collection(const std::vector<Region>& regions) {
    CollectionClassification result;
    for (std::size_t i = 0; i < regions.size(); ++i) {
        for (std::size_t j = i + 1; j < regions.size(); ++j) {
            auto pts = boundary_intersections(regions[i], regions[j]);
            PairClassification pc;
            pc.region_a = regions[i].id;
            pc.region_b = regions[j].id;
            pc.count = pts.size();
            for (const auto& ip : pts)
                if (ip.kind == IntersectKind::Touching) pc.all_crossing = false;
            result.pairs.push_back(pc);
            result.k = std::max(result.k, pc.count);
            if (!pc.all_crossing) result.all_crossing = false;
        }
    }
    if (result.k % 2 != 0) ++result.k;
    result.pseudo_disks = result.k <= 2 && result.all_crossing;
    return result;
}

bool segment_in_region(const Segment& s, const Region& r) {
    if (point_location(s.a, r) == Location::Exterior) return false;
    if (point_location(s.b, r) == Location::Exterior) return false;
    // Split at every boundary incidence; every open piece must stay inside.
    std::vector<Rat> cuts{Rat(0), Rat(1)};
    Point d = s.b - s.a;
    for (std::size_t i = 0; i < r.boundary.segment_count(); ++i) {
        auto isect = segment_intersection(s, r.boundary.segment(i));
        if (auto* sp = std::get_if<SegIntersectPoint>(&isect)) {
            Rat t = (rat_abs(d.x) >= rat_abs(d.y)) ? (d.x == 0 ? Rat(0) : (sp->p.x - s.a.x) / d.x)
                                                   : (sp->p.y - s.a.y) / d.y;
            cuts.push_back(t);
        } else if (auto* so = std::get_if<SegIntersectOverlap>(&isect)) {
            // Riding along the boundary is inside the closed region.
            auto param = [&](const Point& p) {
                return (rat_abs(d.x) >= rat_abs(d.y)) ? (p.x - s.a.x) / d.x : (p.y - s.a.y) / d.y;
            };
            cuts.push_back(param(so->s.a));
            cuts.push_back(param(so->s.b));
        }
    }
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (cuts[i] == cuts[i + 1]) continue;
        Rat mid = (cuts[i] + cuts[i + 1]) / 2;
        Point m = s.a + mid * d;
        if (point_location(m, r) == Location::Exterior) return false;
    }
    return true;
}

}  // namespace ncc
