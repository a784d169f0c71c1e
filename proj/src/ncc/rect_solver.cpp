#include "ncc/rect_solver.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ncc/pseudo_disk_solver.hpp"

namespace ncc {

std::optional<Rect> as_rect(const Region& r) {
    const auto& v = r.boundary.vertices;
    if (v.size() != 4) return std::nullopt;
    std::set<Rat> xs{v[0].x, v[1].x, v[2].x, v[3].x};
    std::set<Rat> ys{v[0].y, v[1].y, v[2].y, v[3].y};
    if (xs.size() != 2 || ys.size() != 2) return std::nullopt;
    // Each side must be axis-parallel.
    for (std::size_t i = 0; i < 4; ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % 4];
        if (a.x != b.x && a.y != b.y) return std::nullopt;
    }
    Rect rect{*xs.begin(), *std::next(xs.begin()), *ys.begin(), *std::next(ys.begin())};
    if (rect.x1 >= rect.x2 || rect.y1 >= rect.y2) return std::nullopt;
    return rect;
}

bool is_cross(const Rect& a, const Rect& b) {
    auto crosses = [](const Rect& h, const Rect& v) {
        // h spans v horizontally, v spans h vertically; all strict.
        return h.x1 < v.x1 && v.x2 < h.x2 && v.y1 < h.y1 && h.y2 < v.y2;
    };
    return crosses(a, b) || crosses(b, a);
}

bool is_filled_cross(const Rect& a, const std::vector<Point>& pa, const Rect& b,
                     const std::vector<Point>& pb) {
    const Rect *h = nullptr, *v = nullptr;
    const std::vector<Point>*ph = nullptr, *pv = nullptr;
    if (a.x1 < b.x1 && b.x2 < a.x2 && b.y1 < a.y1 && a.y2 < b.y2) {
        h = &a;
        v = &b;
        ph = &pa;
        pv = &pb;
    } else if (b.x1 < a.x1 && a.x2 < b.x2 && a.y1 < b.y1 && b.y2 < a.y2) {
        h = &b;
        v = &a;
        ph = &pb;
        pv = &pa;
    } else {
        return false;
    }
    // Closed components of h \ v: left and right arms; of v \ h: bottom, top.
    Rect left{h->x1, v->x1, h->y1, h->y2};
    Rect right{v->x2, h->x2, h->y1, h->y2};
    Rect bottom{v->x1, v->x2, v->y1, h->y1};
    Rect top{v->x1, v->x2, h->y2, v->y2};
    auto has_point = [](const Rect& arm, const std::vector<Point>& pts) {
        for (const Point& p : pts)
            if (arm.contains(p)) return true;
        return false;
    };
    return has_point(left, *ph) && has_point(right, *ph) && has_point(bottom, *pv) &&
           has_point(top, *pv);
}

namespace {
std::vector<Rect> rects_of(const Instance& inst) {
    std::vector<Rect> out;
    for (const Region& r : inst.regions) {
        auto rect = as_rect(r);
        if (!rect) throw NotRectangles("region " + std::to_string(r.id) + " is not an axis-aligned rectangle");
        out.push_back(*rect);
    }
    return out;
}
}  // namespace

void require_rect_general_position(const std::vector<Rect>& rects) {
    std::set<Rat> xs, ys;
    for (const Rect& r : rects) {
        if (!xs.insert(r.x1).second || !xs.insert(r.x2).second || !ys.insert(r.y1).second ||
            !ys.insert(r.y2).second)
            throw NotRectangles("coincident rectangle corner coordinates (general position required)");
    }
}

bool decide_rectangles(const Instance& inst, DecideStats* stats, std::pair<int, int>* filled_pair) {
    std::vector<Rect> rects = rects_of(inst);
    std::size_t checks = 0;
    bool ok = true;
    for (std::size_t i = 0; i < rects.size(); ++i) {
        for (std::size_t j = i + 1; j < rects.size(); ++j) {
            ++checks;
            if (is_filled_cross(rects[i], inst.point_sets[i], rects[j], inst.point_sets[j])) {
                if (ok && filled_pair) *filled_pair = {static_cast<int>(i), static_cast<int>(j)};
                ok = false;
            }
        }
    }
    if (stats) stats->pair_checks = checks;
    return ok;
}

namespace {

// Axis transforms mapping every chop orientation to "chop the top arm of the
// vertical member". Each is an involution on points up to the inverse flag.
struct Axes {
    // (x,y) -> (sx * (swap ? y : x), sy * (swap ? x : y))
    bool swap;
    int sx, sy;
    Rect apply(const Rect& r) const {
        Rat ax1 = swap ? r.y1 : r.x1, ax2 = swap ? r.y2 : r.x2;
        Rat ay1 = swap ? r.x1 : r.y1, ay2 = swap ? r.x2 : r.y2;
        Rat nx1 = sx > 0 ? ax1 : -ax2, nx2 = sx > 0 ? ax2 : -ax1;
        Rat ny1 = sy > 0 ? ay1 : -ay2, ny2 = sy > 0 ? ay2 : -ay1;
        return Rect{nx1, nx2, ny1, ny2};
    }
    Point apply(const Point& p) const {
        Rat ax = swap ? p.y : p.x;
        Rat ay = swap ? p.x : p.y;
        return Point{sx > 0 ? ax : Rat(-ax), sy > 0 ? ay : Rat(-ay)};
    }
};

// Count of crosses in the collection.
std::size_t cross_count(const std::vector<Rect>& rects) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < rects.size(); ++i)
        for (std::size_t j = i + 1; j < rects.size(); ++j)
            if (is_cross(rects[i], rects[j])) ++c;
    return c;
}

Rect intersect(const Rect& a, const Rect& b) {
    return Rect{std::max(a.x1, b.x1), std::min(a.x2, b.x2), std::max(a.y1, b.y1),
                std::min(a.y2, b.y2)};
}

bool rect_subset(const Rect& a, const Rect& b) {  // a subseteq b
    return a.x1 >= b.x1 && a.x2 <= b.x2 && a.y1 >= b.y1 && a.y2 <= b.y2;
}

}  // namespace

std::vector<Rect> chop_to_pseudo_disks(const std::vector<Rect>& rects_in,
                                       const std::vector<std::vector<Point>>& points) {
    std::vector<Rect> rects = rects_in;
    std::size_t n = rects.size();
    std::size_t iterations = 0, max_iterations = n * (n - 1) / 2 + 1;
    std::size_t crosses = cross_count(rects);
    while (crosses > 0) {
        if (++iterations > max_iterations)
            throw std::logic_error("chop_to_pseudo_disks: iteration bound exceeded");
        // Inclusion-minimal cross; ties by (area of intersection, index pair).
        std::optional<std::pair<std::size_t, std::size_t>> pick;
        Rect pick_isect{0, 1, 0, 1};
        Rat pick_area;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (!is_cross(rects[i], rects[j])) continue;
                Rect isect = intersect(rects[i], rects[j]);
                bool minimal = true;
                for (std::size_t a = 0; a < n && minimal; ++a)
                    for (std::size_t b = a + 1; b < n; ++b) {
                        if (a == i && b == j) continue;
                        if (!is_cross(rects[a], rects[b])) continue;
                        Rect other = intersect(rects[a], rects[b]);
                        if (rect_subset(other, isect) && !rect_subset(isect, other)) {
                            minimal = false;
                            break;
                        }
                    }
                if (!minimal) continue;
                Rat area = (isect.x2 - isect.x1) * (isect.y2 - isect.y1);
                if (!pick || area < pick_area) {
                    pick = {i, j};
                    pick_isect = isect;
                    pick_area = area;
                }
            }
        }
        if (!pick) throw std::logic_error("chop_to_pseudo_disks: crosses but no minimal cross");
        auto [i, j] = *pick;
        // Identify the vertical member v (x-range inside the other's).
        std::size_t hi = i, vi = j;
        if (!(rects[i].x1 < rects[j].x1)) std::swap(hi, vi);
        // Candidate empty arms in fixed order: v-top, v-bottom, h-left, h-right,
        // each mapped by an axis transform to the canonical "top of v" chop.
        struct Candidate {
            std::size_t owner;  // rectangle to shrink
            std::size_t other;  // the crossing partner
            Axes axes;
        };
        // Each transform is an involution mapping the arm onto the canonical
        // top arm, so applying it again maps the chopped rectangle back.
        std::vector<Candidate> cands = {
            {vi, hi, Axes{false, 1, 1}},    // top arm of v
            {vi, hi, Axes{false, 1, -1}},   // bottom arm of v
            {hi, vi, Axes{true, -1, -1}},   // left arm of h
            {hi, vi, Axes{true, 1, 1}},     // right arm of h
        };
        bool chopped = false;
        for (const Candidate& cand : cands) {
            Rect owner = cand.axes.apply(rects[cand.owner]);
            Rect other = cand.axes.apply(rects[cand.other]);
            // Canonical configuration: owner vertical member, chop its top arm
            // C = [owner.x1, owner.x2] x [other.y2, owner.y2].
            if (!(other.x1 < owner.x1 && owner.x2 < other.x2 && owner.y1 < other.y1 &&
                  other.y2 < owner.y2))
                continue;
            Rect arm{owner.x1, owner.x2, other.y2, owner.y2};
            bool empty = true;
            for (const Point& p : points[cand.owner])
                if (arm.contains(cand.axes.apply(p))) {
                    empty = false;
                    break;
                }
            if (!empty) continue;
            // Largest eps with no owner point and no foreign corner y in the
            // strip, halved.
            Rat top = other.y2;
            std::optional<Rat> nearest_below;
            auto consider = [&](const Rat& y) {
                if (y >= top) return;
                if (!nearest_below || y > *nearest_below) nearest_below = y;
            };
            for (const Point& p : points[cand.owner]) consider(cand.axes.apply(p).y);
            for (std::size_t r = 0; r < rects.size(); ++r) {
                if (r == cand.other) continue;  // the proof excludes R_i's corners
                Rect tr = cand.axes.apply(rects[r]);
                consider(tr.y1);
                consider(tr.y2);
            }
            if (!nearest_below) throw std::logic_error("chop: no candidate below strip");
            Rat eps = (top - *nearest_below) / 2;
            Rect shrunk{owner.x1, owner.x2, owner.y1, top - eps};
            // Transform back: the transforms used here are involutions.
            rects[cand.owner] = cand.axes.apply(shrunk);
            chopped = true;
            break;
        }
        if (!chopped)
            throw NoEmptyArm("cross (" + std::to_string(i) + "," + std::to_string(j) +
                             ") has no empty arm (filled cross)");
        std::size_t now = cross_count(rects);
        if (now >= crosses)
            throw std::logic_error("chop_to_pseudo_disks: cross count failed to decrease");
        crosses = now;
    }
    return rects;
}

std::optional<ConnectorSet> solve_rectangles(const Instance& inst) {
    std::vector<Rect> rects = rects_of(inst);
    require_rect_general_position(rects);
    if (!decide_rectangles(inst)) return std::nullopt;
    std::vector<Rect> shrunk = chop_to_pseudo_disks(rects, inst.point_sets);
    Instance sub;
    for (std::size_t i = 0; i < shrunk.size(); ++i)
        sub.regions.push_back(shrunk[i].to_region(static_cast<int>(i)));
    sub.point_sets = inst.point_sets;
    // Connectors for the shrunken rectangles are good for the originals too.
    return solve_pseudo_disks(sub);
}

}  // namespace ncc
