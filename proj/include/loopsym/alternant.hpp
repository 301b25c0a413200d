#pragma once

#include <optional>
#include <vector>

#include "loopsym/birational.hpp"
#include "loopsym/det.hpp"
#include "loopsym/json_io.hpp"
#include "loopsym/partition.hpp"
#include "loopsym/tableaux.hpp"

namespace loopsym {

/// The m x m alternant matrix A_alpha^(r) with (i, j) entry
/// t_{j,m}(x_m^(r) x_m^(r-1) ... x_m^(r-alpha_i+1)).  Column m carries the
/// untransformed monomials.
struct AlternantSpec {
    Ambient amb;
    std::vector<int> alpha;
    int r;
    FactoredMatrix matrix;

    /// 1-based entry in its plain rational-function form.
    RatFn entry(int i, int j) const;
};

AlternantSpec alternant_matrix(const Ambient& amb, const std::vector<int>& alpha, int r);

/// a_alpha^(r) = det(A_alpha^(r)).
Factored alternant_det(const AlternantSpec& spec);

/// The matrix H_alpha^(s) with (i, j) entry h_{alpha_i - m + j}^(s') over
/// the full flow set, where s' = r - alpha_i + 1 and h of negative index
/// is zero.  For alpha = lambda + delta its determinant is the Jacobi-Trudi
/// determinant of lambda at color r - m + 1.
PolyMatrix h_matrix(const Ambient& amb, const std::vector<int>& alpha, int r);

/// The matrix M^(r) with (i, j) entry
/// (-1)^(m-i) t_{j,m}(e_{m-i}^(r+i+1-m)) over the flows {1..m-1}.
FactoredMatrix m_matrix(const Ambient& amb, int r);

/// Outcome of a mechanical identity check.  `witness` describes the first
/// failure; it is an empty object when the check passes.
struct CheckResult {
    bool ok = true;
    Json witness = Json::object();
};

/// Entrywise check of H_alpha^(r-m+1) * M^(r) == A_alpha^(r).  Requires
/// alpha = lambda + delta, i.e. strictly decreasing entries.
CheckResult verify_hma(const Ambient& amb, const std::vector<int>& alpha, int r);

/// Cross-multiplied check of the ratio-of-alternants identity:
/// s_lambda^(r-m+1) * a_delta^(r) == a_{lambda+delta}^(r).
CheckResult verify_roa(const Ambient& amb, const Partition& lambda, int r);

/// A connected, 2x2-free skew shape outer/inner.
struct BorderStrip {
    Partition outer;
    Partition inner;
    int size = 0;
    int ht = 0; // rows spanned minus one

    friend bool operator==(const BorderStrip&, const BorderStrip&) = default;
};

/// Direct enumeration along the rim: choose the spanned row range, read the
/// forced row lengths off the shape, keep the partitions that close up.
std::vector<BorderStrip> border_strips_geometric(const Partition& shape, int size);

/// Enumeration by sorting lambda + delta + size*eps_i: rows with a repeated
/// entry drop out, the swap count gives ht.
std::vector<BorderStrip> border_strips_rearrange(const Partition& shape, int size);

/// All ways to add a border strip of exactly `size` boxes.  Runs both
/// enumerations and insists they agree.
std::vector<BorderStrip> add_border_strips(const Partition& shape, int size);

/// Expanded-polynomial check of the loop Murnaghan-Nakayama rule
/// p_k * s_lambda^(r) == sum over strips of size kn of (-1)^ht s_mu^(r).
/// Requires m >= l(lambda) + kn unless `force` is set; with `force` the
/// check still runs and reports the outcome.
CheckResult verify_mn(const Ambient& amb, const Partition& lambda, int k, int r,
                      bool force = false);

} // namespace loopsym
