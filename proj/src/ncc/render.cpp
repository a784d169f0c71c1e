#include "ncc/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace ncc {

namespace {

std::string dec(const Rat& v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v.get_d());
    return buf;
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                          "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};

}  // namespace

std::string render_svg(const Instance& inst, const ConnectorSet* sol) {
    Rat lox = 0, loy = 0, hix = 1, hiy = 1;
    bool first = true;
    auto grow = [&](const Point& p) {
        if (first) {
            lox = hix = p.x;
            loy = hiy = p.y;
            first = false;
            return;
        }
        lox = std::min(lox, p.x);
        hix = std::max(hix, p.x);
        loy = std::min(loy, p.y);
        hiy = std::max(hiy, p.y);
    };
    for (const Region& r : inst.regions)
        for (const Point& v : r.boundary.vertices) grow(v);
    for (const auto& ps : inst.point_sets)
        for (const Point& p : ps) grow(p);
    if (sol)
        for (const auto& c : sol->connectors)
            for (const Point& v : c.vertices) grow(v);
    Rat pad = (hix - lox + hiy - loy) / 20 + 1;
    lox -= pad;
    loy -= pad;
    hix += pad;
    hiy += pad;

    std::ostringstream os;
    double w = (hix - lox).get_d(), h = (hiy - loy).get_d();
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << dec(lox) << " "
       << dec(loy) << " " << dec(hix - lox) << " " << dec(hiy - loy) << "\" width=\"800\" height=\""
       << static_cast<int>(800.0 * h / (w > 0 ? w : 1.0)) << "\">\n";
    // Flip y so larger y is up.
    os << "<g transform=\"translate(0," << dec(loy + hiy) << ") scale(1,-1)\">\n";
    double stroke = std::max(w, h) / 400.0;
    for (std::size_t i = 0; i < inst.regions.size(); ++i) {
        const char* color = kPalette[i % 10];
        os << "<polygon fill=\"" << color << "\" fill-opacity=\"0.08\" stroke=\"" << color
           << "\" stroke-width=\"" << stroke << "\" points=\"";
        for (const Point& v : inst.regions[i].boundary.vertices)
            os << dec(v.x) << "," << dec(v.y) << " ";
        os << "\"/>\n";
    }
    if (sol) {
        for (std::size_t i = 0; i < sol->connectors.size(); ++i) {
            const char* color = kPalette[i % 10];
            os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << 1.6 * stroke
               << "\" points=\"";
            for (const Point& v : sol->connectors[i].vertices) os << dec(v.x) << "," << dec(v.y) << " ";
            os << "\"/>\n";
        }
    }
    for (std::size_t i = 0; i < inst.point_sets.size(); ++i) {
        const char* color = kPalette[i % 10];
        for (const Point& p : inst.point_sets[i])
            os << "<circle cx=\"" << dec(p.x) << "\" cy=\"" << dec(p.y) << "\" r=\"" << 2.2 * stroke
               << "\" fill=\"" << color << "\"/>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

}  // namespace ncc
