#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncc/instance.hpp"

namespace ncc {

struct VerifyReport {
    bool valid = true;
    std::vector<std::string> violations;
};

// Certificate check: every P_i on gamma_i, gamma_i inside closed R_i,
// connectors pairwise disjoint. Report-based.
VerifyReport verify_connectors(const Instance& inst, const ConnectorSet& sol);

enum class BruteForceStatus { Feasible, InfeasibleAtResolution, ResourceLimit };

// Optional per-connector routing constraint used by the gadget-level checks:
// the connector must contain a grid vertex outside `region` (exit) or must
// stay entirely within `region` (stay).
struct ConnectorConstraint {
    int connector = -1;
    enum class Kind { MustExit, MustStay } kind = Kind::MustExit;
    Region region;
};

struct BruteForceResult {
    BruteForceStatus status = BruteForceStatus::InfeasibleAtResolution;
    std::optional<ConnectorSet> witness;
    std::size_t nodes_explored = 0;
};

// Grid-based exhaustive search for vertex-disjoint connected connector sets.
// Feasibility certificates are sound (witness passes verify_connectors);
// infeasibility is relative to the grid resolution.
BruteForceResult brute_force_decide(const Instance& inst, int resolution,
                                    std::size_t node_budget = 50'000'000,
                                    const std::vector<ConnectorConstraint>& constraints = {});

}  // namespace ncc
