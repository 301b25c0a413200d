#pragma once

#include <functional>
#include <vector>

#include "loopsym/partition.hpp"
#include "loopsym/poly.hpp"

namespace loopsym {

/// Semistandard Young tableau: rows weakly increase, columns strictly
/// increase, entries in 1..m.
class Tableau {
public:
    Tableau(Partition shape, std::vector<std::vector<int>> rows, int m);

    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    /// 1-based box access.
    int entry(int i, int j) const;

    std::string to_string() const;

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
};

/// Streams every semistandard tableau of the given shape with entries in
/// 1..m exactly once, ordered lexicographically by row reading word (rows
/// concatenated top to bottom).  The visitor returns false to stop early.
/// Yields nothing when l(shape) > m; yields one empty tableau for the empty
/// shape.
void enumerate_ssyt(const Partition& shape, int m,
                    const std::function<bool(const Tableau&)>& visit);

/// Convenience for tests: the full list in stream order.
std::vector<Tableau> list_ssyt(const Partition& shape, int m);

/// Product over boxes (i, j) holding k of x_k^(r+i-j), colors mod n.
Monomial colored_weight(const Ambient& amb, const Tableau& t, int r);

/// s_lambda^(r) as the tableau generating function.  Zero when
/// l(lambda) > m, one for the empty shape.
Poly loop_schur(const Ambient& amb, const Partition& shape, int r);

/// s_lambda^(r) as det(h_{lambda_i - i + j}^{(r - lambda_i + i)}) over the
/// full flow set, h of negative index being 0.  Requires l(lambda) <= m.
Poly jacobi_trudi(const Ambient& amb, const Partition& shape, int r);

} // namespace loopsym
