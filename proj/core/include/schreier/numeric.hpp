#pragma once

#include <gmpxx.h>

#include <string>

namespace schreier {

// All term values are exact. Counts grow geometrically, so every public
// count/term is arbitrary precision; rationals appear in recurrence
// coefficients and in the detector's linear solver.
using Int = mpz_class;
using Rat = mpq_class;

inline std::string to_decimal(const Int& v) { return v.get_str(); }

// Canonical "p/q" form; integers print without the denominator.
inline std::string to_decimal(const Rat& v) { return v.get_str(); }

inline bool is_integral(const Rat& v) { return v.get_den() == 1; }

} // namespace schreier
