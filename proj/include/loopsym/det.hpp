#pragma once

#include <vector>

#include "loopsym/factored.hpp"
#include "loopsym/poly.hpp"

namespace loopsym {

using PolyMatrix = std::vector<std::vector<Poly>>;
using FactoredMatrix = std::vector<std::vector<Factored>>;

/// Exact quotient a / b; throws domain_error when the division is not exact.
/// Uses an internal graded-lex reduction order, so it is independent of the
/// canonical display order.
Poly poly_divexact(const Poly& a, const Poly& b);

/// Determinant of a nonempty square polynomial matrix.  Leibniz expansion
/// up to 6x6, fraction-free Bareiss elimination above.
Poly poly_det(const PolyMatrix& m);
Poly poly_det_leibniz(const PolyMatrix& m);
Poly poly_det_bareiss(const PolyMatrix& m);

/// Determinant over rational functions: clears each row by the factorwise
/// lcm of its denominators, takes a polynomial determinant, and divides the
/// tracked clearing factors back out.
Factored factored_det(const FactoredMatrix& m);

} // namespace loopsym
