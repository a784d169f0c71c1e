#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ncc/geometry.hpp"

namespace ncc {

struct Instance {
    std::vector<Region> regions;
    std::vector<std::vector<Point>> point_sets;  // P_i aligned with regions
};

struct ConnectorSet {
    std::vector<Polyline> connectors;  // gamma_i aligned with regions
};

struct Violation {
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

// Checks every Instance invariant plus the finite-boundary-intersection
// assumption. Report-based: never throws.
ValidationReport validate(const Instance& inst);

// Smallest squared distance between a vertex and a non-incident boundary or
// point feature; safety radius for perturbations.
Rat min_feature_dist2(const Instance& inst);

struct PerturbationFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Replaces every touching point between two boundaries by two nearby crossing
// points via a local rational vertex displacement. Identity when no touchings.
Instance perturb_touchings(const Instance& inst);

// --- text formats -----------------------------------------------------------
// Instance:   "NCC 1" header; per region "region <i> <k>" + k vertex lines
//             "v <px>/<qx> <py>/<qy>", then "points <m>" + m point lines.
// Connectors: "NCC-SOL 1" header; per connector "connector <i> <k>" + k lines.

std::string serialize_instance(const Instance& inst);
std::string serialize_connectors(const ConnectorSet& sol);

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Instance parse_instance(const std::string& text);
ConnectorSet parse_connectors(const std::string& text);

Instance load_instance_file(const std::string& path);
ConnectorSet load_connectors_file(const std::string& path);
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace ncc
