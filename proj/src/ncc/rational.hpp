#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace ncc {

// Exact rational scalar. mpq_class keeps results of arithmetic canonical;
// anything built from raw numerator/denominator goes through make_rat so the
// canonical (reduced, positive-denominator) form is restored.
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    mpq_class r(num, den);
    r.canonicalize();
    return r;
}

inline int sgn(const Rat& v) { return mpq_sgn(v.get_mpq_t()); }

inline Rat rat_abs(const Rat& v) { return sgn(v) < 0 ? Rat(-v) : v; }

// Canonical wire form: "<num>/<den>" with den >= 1, always with the slash.
inline std::string rat_to_string(const Rat& v) {
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

// Accepts "p/q" or a bare integer "p". Returns nullopt on malformed input or
// zero denominator.
std::optional<Rat> rat_from_string(const std::string& text);

}  // namespace ncc
