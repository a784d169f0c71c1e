#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncc/instance.hpp"

namespace ncc {

// CNF with <=3 literals per clause; literals are +-(1-based variable).
struct Formula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;
};

struct FormulaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotPlanar : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// DIMACS CNF: 'c' comments, "p cnf <vars> <clauses>", zero-terminated clauses.
Formula parse_dimacs(const std::string& text);
std::string to_dimacs(const Formula& f);

// Clause size <=3, every variable >=1 positive and >=1 negated occurrence,
// <=3 occurrences total, no variable twice in one clause. Throws FormulaError.
void check_formula_invariants(const Formula& f);

// Planarity of the clause-variable incidence graph; throws NotPlanar if not.
bool formula_graph_planar(const Formula& f);

// Exhaustive/DPLL satisfiability for desk-scale formulas.
std::optional<std::vector<bool>> solve_sat(const Formula& f);

bool assignment_satisfies(const Formula& f, const std::vector<bool>& a);

// Reproducible random planar 3-SAT instance respecting the invariants.
Formula gen_planar_formula(int num_vars, std::uint64_t seed);

}  // namespace ncc
