#pragma once

#include <gmpxx.h>

#include <string>

#include "loopsym/errors.hpp"

namespace loopsym {

/// Exact arbitrary-precision rational number.
using Rat = mpq_class;

/// Parses a decimal-free rational string "p" or "p/q".
Rat rat_from_string(const std::string& s);

/// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string rat_to_string(const Rat& r);

inline int rat_sign(const Rat& r) { return sgn(r); }

} // namespace loopsym
