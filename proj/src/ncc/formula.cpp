#include "ncc/formula.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace ncc {

Formula parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    Formula f;
    bool header = false;
    std::size_t expect_clauses = 0;
    std::vector<int> cur;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (line[0] == 'p') {
            std::string p, cnf;
            if (!(ls >> p >> cnf >> f.num_vars >> expect_clauses) || cnf != "cnf")
                throw FormulaError("bad DIMACS header");
            header = true;
            continue;
        }
        if (!header) throw FormulaError("clause before DIMACS header");
        int lit;
        while (ls >> lit) {
            if (lit == 0) {
                if (!cur.empty()) f.clauses.push_back(cur);
                cur.clear();
            } else {
                if (std::abs(lit) > f.num_vars) throw FormulaError("literal out of range");
                cur.push_back(lit);
            }
        }
    }
    if (!cur.empty()) f.clauses.push_back(cur);
    if (expect_clauses != 0 && f.clauses.size() != expect_clauses)
        throw FormulaError("clause count mismatch with header");
    return f;
}

std::string to_dimacs(const Formula& f) {
    std::ostringstream os;
    os << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
    for (const auto& c : f.clauses) {
        for (int lit : c) os << lit << ' ';
        os << "0\n";
    }
    return os.str();
}

void check_formula_invariants(const Formula& f) {
    std::vector<int> pos(f.num_vars + 1, 0), neg(f.num_vars + 1, 0);
    for (const auto& c : f.clauses) {
        if (c.empty() || c.size() > 3) throw FormulaError("clause size must be 1..3");
        std::set<int> vars;
        for (int lit : c) {
            int v = std::abs(lit);
            if (v == 0 || v > f.num_vars) throw FormulaError("literal out of range");
            if (!vars.insert(v).second) throw FormulaError("variable repeated within a clause");
            (lit > 0 ? pos : neg)[v]++;
        }
    }
    for (int v = 1; v <= f.num_vars; ++v) {
        if (pos[v] + neg[v] == 0) throw FormulaError("variable " + std::to_string(v) + " unused");
        if (pos[v] == 0 || neg[v] == 0)
            throw FormulaError("variable " + std::to_string(v) +
                               " must appear both positive and negated");
        if (pos[v] + neg[v] > 3)
            throw FormulaError("variable " + std::to_string(v) + " appears in more than 3 clauses");
    }
    if (!formula_graph_planar(f)) throw NotPlanar("formula graph is not planar");
}

bool formula_graph_planar(const Formula& f) {
    using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    Graph g(f.num_vars + f.clauses.size());
    for (std::size_t c = 0; c < f.clauses.size(); ++c)
        for (int lit : f.clauses[c])
            boost::add_edge(std::abs(lit) - 1, f.num_vars + c, g);
    return boost::boyer_myrvold_planarity_test(g);
}

bool assignment_satisfies(const Formula& f, const std::vector<bool>& a) {
    for (const auto& c : f.clauses) {
        bool sat = false;
        for (int lit : c) {
            bool val = a[std::abs(lit) - 1];
            if ((lit > 0) == val) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    return true;
}

namespace {
bool dpll(const Formula& f, std::vector<int>& assign) {  // 0 unset, 1 true, -1 false
    // Unit propagation.
    while (true) {
        bool changed = false;
        for (const auto& c : f.clauses) {
            int unset = 0, unit = 0;
            bool sat = false;
            for (int lit : c) {
                int v = std::abs(lit) - 1;
                if (assign[v] == 0) {
                    ++unset;
                    unit = lit;
                } else if ((lit > 0) == (assign[v] > 0)) {
                    sat = true;
                }
            }
            if (sat) continue;
            if (unset == 0) return false;
            if (unset == 1) {
                assign[std::abs(unit) - 1] = unit > 0 ? 1 : -1;
                changed = true;
            }
        }
        if (!changed) break;
    }
    int branch = -1;
    for (std::size_t v = 0; v < assign.size(); ++v)
        if (assign[v] == 0) {
            branch = static_cast<int>(v);
            break;
        }
    if (branch < 0) return true;
    for (int val : {1, -1}) {
        std::vector<int> saved = assign;
        assign[branch] = val;
        if (dpll(f, assign)) return true;
        assign = saved;
    }
    return false;
}
}  // namespace

std::optional<std::vector<bool>> solve_sat(const Formula& f) {
    std::vector<int> assign(f.num_vars, 0);
    if (!dpll(f, assign)) return std::nullopt;
    std::vector<bool> out(f.num_vars);
    for (int v = 0; v < f.num_vars; ++v) out[v] = assign[v] >= 0;  // unset defaults true
    if (!assignment_satisfies(f, out)) {
        for (int v = 0; v < f.num_vars; ++v) out[v] = assign[v] > 0;
        if (!assignment_satisfies(f, out)) return std::nullopt;
    }
    return out;
}

Formula gen_planar_formula(int num_vars, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    // Variables on a cycle-free ladder keep the incidence graph planar: clause
    // j uses variables from a sliding window, alternating signs so every
    // variable gets both polarities and at most 3 occurrences.
    int guard = 0;
    while (true) {
        if (++guard > 2000) throw FormulaError("gen_planar_formula: give up");
        Formula f;
        f.num_vars = num_vars;
        std::vector<int> occ(num_vars + 1, 0);
        std::vector<int> pos(num_vars + 1, 0), neg(num_vars + 1, 0);
        std::uniform_int_distribution<int> size_d(2, 3);
        std::uniform_int_distribution<int> sign_d(0, 1);
        int window = 0;
        while (true) {
            // Advance the window to the first variable with spare occurrences.
            while (window < num_vars && occ[window + 1] >= 3) ++window;
            if (window >= num_vars) break;
            int want = size_d(rng);
            std::vector<int> clause;
            for (int v = window + 1; v <= num_vars && static_cast<int>(clause.size()) < want; ++v) {
                if (occ[v] >= 3) continue;
                // Keep planarity trivially: only consecutive-window variables.
                if (v > window + 4) break;
                int lit = sign_d(rng) ? v : -v;
                // Force missing polarity when running out of occurrences.
                if (occ[v] == 2) {
                    if (pos[v] == 0) lit = v;
                    if (neg[v] == 0) lit = -v;
                }
                clause.push_back(lit);
                occ[v]++;
                (lit > 0 ? pos : neg)[v]++;
            }
            if (clause.size() < 2) {
                // Re-balance: give the lonely variable its missing polarity via
                // a 2-clause with the next variable.
                if (clause.size() == 1) {
                    int v = std::abs(clause[0]);
                    int u = v < num_vars ? v + 1 : v - 1;
                    if (u >= 1 && occ[u] < 3) {
                        int lit = sign_d(rng) ? u : -u;
                        if (occ[u] == 2) {
                            if (pos[u] == 0) lit = u;
                            if (neg[u] == 0) lit = -u;
                        }
                        clause.push_back(lit);
                        occ[u]++;
                        (lit > 0 ? pos : neg)[u]++;
                    }
                }
            }
            if (clause.size() >= 2)
                f.clauses.push_back(clause);
            else
                break;
        }
        // Fix any variable missing a polarity with extra 2-clauses.
        for (int v = 1; v <= num_vars; ++v) {
            if (pos[v] > 0 && neg[v] > 0) continue;
            if (occ[v] >= 3) break;
            int missing = pos[v] == 0 ? v : -v;
            int partner = v < num_vars ? v + 1 : (v > 1 ? v - 1 : -1);
            if (partner < 1 || occ[partner] >= 3) continue;
            int plit = pos[partner] == 0 ? partner : -partner;
            f.clauses.push_back({missing, plit});
            occ[v]++;
            occ[partner]++;
            (missing > 0 ? pos : neg)[v]++;
            (plit > 0 ? pos : neg)[partner]++;
        }
        try {
            check_formula_invariants(f);
        } catch (const std::exception&) {
            seed = rng();
            continue;
        }
        return f;
    }
}

}  // namespace ncc
