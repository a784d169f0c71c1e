#include "ncc/generator.hpp"

#include <algorithm>

#include "ncc/rect_solver.hpp"

namespace ncc {

namespace {

// Convex octagon template; homothets of a fixed convex set are pseudo-disks.
const int kOct[8][2] = {{4, 0}, {3, 3}, {0, 4}, {-3, 3}, {-4, 0}, {-3, -3}, {0, -4}, {3, -3}};

Region make_homothet(const Rat& cx, const Rat& cy, const Rat& scale, int id) {
    Region r;
    r.id = id;
    r.boundary.closed = true;
    for (const auto& v : kOct)
        r.boundary.vertices.push_back(Point{cx + scale * make_rat(v[0]), cy + scale * make_rat(v[1])});
    return r;
}

}  // namespace

Instance gen_pseudo_disks(std::size_t n, std::uint64_t seed, int max_points) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coord(0, 160);   // quarters: centers in [0,40]
    std::uniform_int_distribution<int> scale(3, 12);    // quarters: scales in [3/4, 3]
    std::uniform_int_distribution<int> npts(1, max_points);

    Instance inst;
    int guard = 0;
    while (inst.regions.size() < n) {
        if (++guard > 100000) throw std::runtime_error("gen_pseudo_disks: cannot place regions");
        Rat cx = make_rat(coord(rng), 4), cy = make_rat(coord(rng), 4);
        Rat sc = make_rat(scale(rng), 4);
        Region cand = make_homothet(cx, cy, sc, static_cast<int>(inst.regions.size()));
        std::vector<Region> trial = inst.regions;
        trial.push_back(cand);
        try {
            auto cls = classify_collection(trial);
            if (!cls.pseudo_disks) continue;
        } catch (const DegenerateBoundaryOverlap&) {
            continue;
        }
        // Rightmost points must be distinct for the solver ordering guarantee.
        inst.regions.push_back(cand);
        inst.point_sets.emplace_back();
    }
    // Distinct rightmost x: enforced by distinct (center.x + 4*scale).
    {
        std::set<Rat> rx;
        bool ok = true;
        for (const Region& r : inst.regions) {
            Rat mx = r.boundary.vertices[0].x;
            for (const Point& v : r.boundary.vertices) mx = std::max(mx, v.x);
            if (!rx.insert(mx).second) ok = false;
        }
        if (!ok) return gen_pseudo_disks(n, seed + 0x9e3779b97f4a7c15ULL, max_points);
    }
    std::set<Point> taken;
    std::uniform_int_distribution<int> off(-15, 15);
    for (std::size_t i = 0; i < n; ++i) {
        int want = npts(rng);
        int guard2 = 0;
        while (static_cast<int>(inst.point_sets[i].size()) < want) {
            if (++guard2 > 100000) throw std::runtime_error("gen_pseudo_disks: cannot place points");
            const Region& r = inst.regions[i];
            Point c = r.boundary.vertices[0];
            // Sample around the region center on a fine grid.
            Rat cx = (r.boundary.vertices[0].x + r.boundary.vertices[4].x) / 2;
            Rat cy = (r.boundary.vertices[0].y + r.boundary.vertices[4].y) / 2;
            (void)c;
            Point p{cx + make_rat(off(rng), 8), cy + make_rat(off(rng), 8)};
            if (taken.count(p)) continue;
            if (point_location(p, r) != Location::Interior) continue;
            taken.insert(p);
            inst.point_sets[i].push_back(p);
        }
        std::sort(inst.point_sets[i].begin(), inst.point_sets[i].end());
    }
    return inst;
}

Instance gen_rectangles(std::size_t n, std::uint64_t seed, int max_points, bool avoid_filled_cross) {
    std::mt19937_64 rng(seed);
    int span = static_cast<int>(8 * n + 8);
    std::uniform_int_distribution<int> pick(0, span - 1);
    std::uniform_int_distribution<int> npts(1, max_points);
    int guard = 0;
    while (true) {
        if (++guard > 10000) throw std::runtime_error("gen_rectangles: give up");
        // Distinct corner coordinates per axis (general position).
        std::set<int> xs, ys;
        while (xs.size() < 2 * n) xs.insert(pick(rng));
        while (ys.size() < 2 * n) ys.insert(pick(rng));
        std::vector<int> xv(xs.begin(), xs.end()), yv(ys.begin(), ys.end());
        std::shuffle(xv.begin(), xv.end(), rng);
        std::shuffle(yv.begin(), yv.end(), rng);
        std::vector<Rect> rects;
        for (std::size_t i = 0; i < n; ++i) {
            int x1 = xv[2 * i], x2 = xv[2 * i + 1];
            int y1 = yv[2 * i], y2 = yv[2 * i + 1];
            if (x1 > x2) std::swap(x1, x2);
            if (y1 > y2) std::swap(y1, y2);
            rects.push_back(Rect{make_rat(x1), make_rat(x2), make_rat(y1), make_rat(y2)});
        }
        Instance inst;
        std::set<Point> taken;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            inst.regions.push_back(rects[i].to_region(static_cast<int>(i)));
            inst.point_sets.emplace_back();
            int want = npts(rng);
            int guard2 = 0;
            while (static_cast<int>(inst.point_sets[i].size()) < want) {
                if (++guard2 > 10000) {
                    ok = false;
                    break;
                }
                Rat px = rects[i].x1 + make_rat(1 + pick(rng) % 7, 8) * (rects[i].x2 - rects[i].x1);
                Rat py = rects[i].y1 + make_rat(1 + pick(rng) % 7, 8) * (rects[i].y2 - rects[i].y1);
                Point p{px, py};
                if (taken.count(p)) continue;
                taken.insert(p);
                inst.point_sets[i].push_back(p);
            }
            std::sort(inst.point_sets[i].begin(), inst.point_sets[i].end());
        }
        if (!ok) continue;
        if (avoid_filled_cross && !decide_rectangles(inst)) continue;
        return inst;
    }
}

}  // namespace ncc
