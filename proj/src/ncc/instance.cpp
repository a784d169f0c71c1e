#include "ncc/instance.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace ncc {

ValidationReport validate(const Instance& inst) {
    ValidationReport rep;
    auto add = [&](const std::string& m) { rep.violations.push_back({m}); };
    if (inst.regions.size() != inst.point_sets.size()) {
        add("region/point-set count mismatch");
        return rep;
    }
    for (std::size_t i = 0; i < inst.regions.size(); ++i) {
        const Region& r = inst.regions[i];
        std::string why;
        if (!r.boundary.closed) {
            add("region " + std::to_string(i) + ": boundary not closed");
            continue;
        }
        if (!polyline_valid(r.boundary, &why)) {
            add("region " + std::to_string(i) + ": " + why);
            continue;
        }
        if (polygon_area2(r.boundary) == 0) add("region " + std::to_string(i) + ": zero area");
        if (inst.point_sets[i].empty()) add("point set " + std::to_string(i) + " is empty");
        for (const Point& p : inst.point_sets[i]) {
            if (point_location(p, r) == Location::Exterior)
                add("point (" + rat_to_string(p.x) + "," + rat_to_string(p.y) + ") outside region " +
                    std::to_string(i));
        }
    }
    // Pairwise-disjoint point sets, exact equality.
    std::map<Point, std::size_t> seen;
    for (std::size_t i = 0; i < inst.point_sets.size(); ++i) {
        for (const Point& p : inst.point_sets[i]) {
            auto [it, fresh] = seen.emplace(p, i);
            if (!fresh && it->second != i)
                add("shared point, sets " + std::to_string(it->second) + "," + std::to_string(i));
        }
    }
    // Finite boundary intersections (no shared positive-length segments).
    for (std::size_t i = 0; i < inst.regions.size(); ++i) {
        for (std::size_t j = i + 1; j < inst.regions.size(); ++j) {
            try {
                boundary_intersections(inst.regions[i], inst.regions[j]);
            } catch (const DegenerateBoundaryOverlap& e) {
                add(e.what());
            }
        }
    }
    return rep;
}

Rat min_feature_dist2(const Instance& inst) {
    std::vector<Segment> segs;
    std::vector<Point> verts;
    for (const Region& r : inst.regions) {
        for (std::size_t i = 0; i < r.boundary.segment_count(); ++i) segs.push_back(r.boundary.segment(i));
        for (const Point& v : r.boundary.vertices) verts.push_back(v);
    }
    for (const auto& ps : inst.point_sets)
        for (const Point& p : ps) verts.push_back(p);
    std::optional<Rat> best;
    auto consider = [&](const Rat& d2) {
        if (d2 == 0) return;
        if (!best || d2 < *best) best = d2;
    };
    for (const Point& v : verts)
        for (const Segment& s : segs)
            if (v != s.a && v != s.b) consider(point_segment_dist2(v, s));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j) consider(dist2(verts[i], verts[j]));
    return best ? *best : make_rat(1);
}

namespace {

// All touching points in the instance as (region i, region j, point).
std::vector<std::tuple<std::size_t, std::size_t, Point>> find_touchings(const Instance& inst) {
    std::vector<std::tuple<std::size_t, std::size_t, Point>> out;
    for (std::size_t i = 0; i < inst.regions.size(); ++i)
        for (std::size_t j = i + 1; j < inst.regions.size(); ++j)
            for (const auto& ip : boundary_intersections(inst.regions[i], inst.regions[j]))
                if (ip.kind == IntersectKind::Touching) out.emplace_back(i, j, ip.location);
    return out;
}

struct PairSignature {
    std::vector<std::size_t> counts;
    std::vector<bool> containments;
};

PairSignature combinatorial_signature(const Instance& inst) {
    PairSignature sig;
    for (std::size_t i = 0; i < inst.regions.size(); ++i)
        for (std::size_t j = i + 1; j < inst.regions.size(); ++j)
            sig.counts.push_back((boundary_intersections(inst.regions[i], inst.regions[j]).size() > 0) ? 1
                                                                                                       : 0);
    for (std::size_t i = 0; i < inst.point_sets.size(); ++i)
        for (const Point& p : inst.point_sets[i])
            for (std::size_t r = 0; r < inst.regions.size(); ++r)
                sig.containments.push_back(point_location(p, inst.regions[r]) != Location::Exterior);
    return sig;
}

bool signatures_equal(const PairSignature& a, const PairSignature& b) {
    return a.counts == b.counts && a.containments == b.containments;
}

}  // namespace

Instance perturb_touchings(const Instance& inst) {
    Instance cur = inst;
    auto touchings = find_touchings(cur);
    if (touchings.empty()) return cur;
    PairSignature sig = combinatorial_signature(cur);

    int guard = 0;
    while (!touchings.empty()) {
        if (++guard > 1000) throw PerturbationFailed("perturbation did not converge");
        auto [ri, rj, p] = touchings.front();
        Rat radius2 = min_feature_dist2(cur);
        // The touching point is a vertex of at least one boundary (transversal
        // interior-interior contacts are always crossings).
        bool moved = false;
        for (std::size_t which : {ri, rj}) {
            auto& verts = cur.regions[which].boundary.vertices;
            auto it = std::find(verts.begin(), verts.end(), p);
            if (it == verts.end()) continue;
            std::size_t vi = static_cast<std::size_t>(it - verts.begin());
            // Try small rational displacements in 8 directions, halving.
            static const int dirs[8][2] = {{1, 0},  {-1, 0}, {0, 1},  {0, -1},
                                           {1, 1},  {-1, 1}, {1, -1}, {-1, -1}};
            Rat step = make_rat(1, 4);
            for (int halve = 0; halve < 40 && !moved; ++halve, step /= 2) {
                if (step * step * 2 >= radius2 / 4) continue;  // stay well inside safe radius
                for (const auto& d : dirs) {
                    Instance trial = cur;
                    auto& tv = trial.regions[which].boundary.vertices[vi];
                    tv = Point{tv.x + step * make_rat(d[0]), tv.y + step * make_rat(d[1])};
                    if (!polyline_valid(trial.regions[which].boundary)) continue;
                    ValidationReport vr = validate(trial);
                    if (!vr.ok()) continue;
                    // The touch must be resolved into crossings only.
                    bool still_touching = false;
                    try {
                        for (const auto& ip :
                             boundary_intersections(trial.regions[ri], trial.regions[rj]))
                            if (ip.kind == IntersectKind::Touching) still_touching = true;
                    } catch (const DegenerateBoundaryOverlap&) {
                        continue;
                    }
                    if (still_touching) continue;
                    if (!signatures_equal(sig, combinatorial_signature(trial))) continue;
                    cur = trial;
                    moved = true;
                    break;
                }
            }
            if (moved) break;
        }
        if (!moved)
            throw PerturbationFailed("no displacement within the safe radius removes the touching at (" +
                                     rat_to_string(p.x) + "," + rat_to_string(p.y) + ")");
        touchings = find_touchings(cur);
    }
    return cur;
}

// --- serialization -----------------------------------------------------------

namespace {
void emit_point(std::ostream& os, const char* tag, const Point& p) {
    os << tag << ' ' << rat_to_string(p.x) << ' ' << rat_to_string(p.y) << '\n';
}
}  // namespace

std::string serialize_instance(const Instance& inst) {
    std::ostringstream os;
    os << "NCC 1\n";
    for (std::size_t i = 0; i < inst.regions.size(); ++i) {
        const auto& verts = inst.regions[i].boundary.vertices;
        os << "region " << i << ' ' << verts.size() << '\n';
        for (const Point& v : verts) emit_point(os, "v", v);
        // Canonical ordering: points within P_i sorted lexicographically.
        std::vector<Point> pts = inst.point_sets[i];
        std::sort(pts.begin(), pts.end());
        os << "points " << pts.size() << '\n';
        for (const Point& p : pts) emit_point(os, "p", p);
    }
    return os.str();
}

std::string serialize_connectors(const ConnectorSet& sol) {
    std::ostringstream os;
    os << "NCC-SOL 1\n";
    for (std::size_t i = 0; i < sol.connectors.size(); ++i) {
        const auto& verts = sol.connectors[i].vertices;
        os << "connector " << i << ' ' << verts.size() << '\n';
        for (const Point& v : verts) emit_point(os, "v", v);
    }
    return os.str();
}

namespace {

struct LineReader {
    std::istringstream in;
    std::string line;
    int lineno = 0;
    explicit LineReader(const std::string& text) : in(text) {}
    bool next() {
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("line " + std::to_string(lineno) + ": " + msg);
    }
};

Point parse_point_line(LineReader& lr, const char* tag) {
    std::istringstream ls(lr.line);
    std::string t, xs, ys;
    if (!(ls >> t >> xs >> ys) || t != tag) lr.fail(std::string("expected '") + tag + "' line");
    auto x = rat_from_string(xs);
    auto y = rat_from_string(ys);
    if (!x || !y) lr.fail("bad rational");
    return Point{*x, *y};
}

}  // namespace

Instance parse_instance(const std::string& text) {
    LineReader lr(text);
    if (!lr.next() || lr.line != "NCC 1") lr.fail("expected 'NCC 1' header");
    Instance inst;
    while (lr.next()) {
        std::istringstream ls(lr.line);
        std::string kw;
        std::size_t idx = 0, k = 0;
        if (!(ls >> kw >> idx >> k) || kw != "region") lr.fail("expected 'region <i> <k>'");
        if (idx != inst.regions.size()) lr.fail("region index out of order");
        Region r;
        r.id = static_cast<int>(idx);
        r.boundary.closed = true;
        for (std::size_t v = 0; v < k; ++v) {
            if (!lr.next()) lr.fail("unexpected end of input in region vertices");
            r.boundary.vertices.push_back(parse_point_line(lr, "v"));
        }
        if (!lr.next()) lr.fail("expected 'points <m>'");
        std::istringstream ps(lr.line);
        std::size_t m = 0;
        if (!(ps >> kw >> m) || kw != "points") lr.fail("expected 'points <m>'");
        std::vector<Point> pts;
        for (std::size_t p = 0; p < m; ++p) {
            if (!lr.next()) lr.fail("unexpected end of input in points");
            pts.push_back(parse_point_line(lr, "p"));
        }
        inst.regions.push_back(std::move(r));
        inst.point_sets.push_back(std::move(pts));
    }
    return inst;
}

ConnectorSet parse_connectors(const std::string& text) {
    LineReader lr(text);
    if (!lr.next() || lr.line != "NCC-SOL 1") lr.fail("expected 'NCC-SOL 1' header");
    ConnectorSet sol;
    while (lr.next()) {
        std::istringstream ls(lr.line);
        std::string kw;
        std::size_t idx = 0, k = 0;
        if (!(ls >> kw >> idx >> k) || kw != "connector") lr.fail("expected 'connector <i> <k>'");
        if (idx != sol.connectors.size()) lr.fail("connector index out of order");
        Polyline pl;
        for (std::size_t v = 0; v < k; ++v) {
            if (!lr.next()) lr.fail("unexpected end of input in connector vertices");
            pl.vertices.push_back(parse_point_line(lr, "v"));
        }
        sol.connectors.push_back(std::move(pl));
    }
    return sol;
}

namespace {
std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
}  // namespace

Instance load_instance_file(const std::string& path) { return parse_instance(read_file(path)); }
ConnectorSet load_connectors_file(const std::string& path) { return parse_connectors(read_file(path)); }

void write_file_atomic(const std::string& path, const std::string& content) {
    std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string());
        out << content;
    }
    std::filesystem::rename(tmp, target);
}

}  // namespace ncc
