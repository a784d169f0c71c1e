#include "ncc/verifier.hpp"

namespace ncc {

VerifyReport verify_connectors(const Instance& inst, const ConnectorSet& sol) {
    VerifyReport rep;
    auto add = [&](const std::string& m) {
        rep.valid = false;
        rep.violations.push_back(m);
    };
    if (inst.regions.size() != sol.connectors.size()) {
        add("connector count " + std::to_string(sol.connectors.size()) + " does not match region count " +
            std::to_string(inst.regions.size()));
        return rep;
    }
    for (std::size_t i = 0; i < inst.regions.size(); ++i) {
        const Polyline& g = sol.connectors[i];
        std::string why;
        if (!polyline_valid(g, &why)) {
            add("connector " + std::to_string(i) + ": " + why);
            continue;
        }
        // Every point of P_i lies on gamma_i.
        for (const Point& p : inst.point_sets[i]) {
            bool on = false;
            for (std::size_t s = 0; s < g.segment_count() && !on; ++s)
                if (on_segment(p, g.segment(s))) on = true;
            if (!on)
                add("connector " + std::to_string(i) + " misses point (" + rat_to_string(p.x) + "," +
                    rat_to_string(p.y) + ")");
        }
        // gamma_i inside closed R_i.
        for (const Point& v : g.vertices)
            if (point_location(v, inst.regions[i]) == Location::Exterior) {
                add("connector " + std::to_string(i) + " vertex (" + rat_to_string(v.x) + "," +
                    rat_to_string(v.y) + ") outside its region");
            }
        for (std::size_t s = 0; s < g.segment_count(); ++s)
            if (!segment_in_region(g.segment(s), inst.regions[i])) {
                add("connector " + std::to_string(i) + " segment " + std::to_string(s) +
                    " leaves its region");
                break;
            }
    }
    for (std::size_t i = 0; i < sol.connectors.size(); ++i)
        for (std::size_t j = i + 1; j < sol.connectors.size(); ++j)
            if (!polyline_disjoint(sol.connectors[i], sol.connectors[j]))
                add("pair (" + std::to_string(i) + "," + std::to_string(j) + ") intersects");
    return rep;
}

}  // namespace ncc
