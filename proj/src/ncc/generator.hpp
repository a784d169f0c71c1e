#pragma once

#include <cstdint>
#include <random>

#include "ncc/instance.hpp"

namespace ncc {

// Reproducible random instances; identical (kind, n, seed, max_points) yield
// byte-identical serializations.
Instance gen_pseudo_disks(std::size_t n, std::uint64_t seed, int max_points = 4);
Instance gen_rectangles(std::size_t n, std::uint64_t seed, int max_points = 3,
                        bool avoid_filled_cross = false);

}  // namespace ncc
