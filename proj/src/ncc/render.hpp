#pragma once

#include <optional>
#include <string>

#include "ncc/instance.hpp"

namespace ncc {

// Static SVG 1.1 drawing: regions stroked, points as dots colored per set,
// connectors as polylines. Coordinates printed at 9 significant digits.
std::string render_svg(const Instance& inst, const ConnectorSet* sol = nullptr);

}  // namespace ncc
