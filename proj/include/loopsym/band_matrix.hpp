#pragma once

#include <string>
#include <vector>

#include "loopsym/json_io.hpp"
#include "loopsym/poly.hpp"

namespace loopsym {

/// Finite K x K window of an infinite n-periodic upper-unitriangular matrix
/// with polynomial entries.  Rows and columns are addressed 1-based to match
/// the usual matrix conventions.  Upper-triangularity makes every windowed
/// computation agree with the infinite one on the window.
class BandMatrix {
public:
    BandMatrix(Ambient amb, int K);

    static BandMatrix identity(Ambient amb, int K);

    const Ambient& ambient() const { return amb_; }
    int size() const { return K_; }
    int period() const { return amb_.n; }
    /// Entries with j - i >= width_hint are guaranteed zero.
    int width_hint() const { return width_hint_; }
    void set_width_hint(int w);

    const Poly& entry(int i, int j) const;
    void set_entry(int i, int j, Poly p);

    /// The leading K2 x K2 principal submatrix.
    BandMatrix restrict_window(int K2) const;

    bool is_unitriangular() const;
    /// Verifies entry (i, j) == entry (i+n, j+n) wherever both fit.
    bool is_periodic() const;
    /// Throws shape_error if either structural invariant fails.
    void check_invariants() const;

    std::string to_text_grid() const;
    Json to_json() const;

    /// Structural equality of the windows; the width hint is advisory and
    /// deliberately excluded.
    friend bool operator==(const BandMatrix& a, const BandMatrix& b) {
        return a.amb_.m == b.amb_.m && a.amb_.n == b.amb_.n && a.K_ == b.K_ &&
               a.entries_ == b.entries_;
    }

private:
    Ambient amb_;
    int K_;
    int width_hint_;
    std::vector<Poly> entries_; // row-major
};

/// Whirl window M(a_1, ..., a_n): ones on the diagonal, superdiagonal entry
/// in row i equal to a_{((i-1) mod n)+1}.  `vars` must have exactly n atoms.
BandMatrix whirl(Ambient amb, const std::vector<Poly>& vars, int K);
/// M(x_flow) on the variables x_flow^(1..n).
BandMatrix whirl_flow(Ambient amb, int flow, int K);

/// Entrywise sign flip by parity of i + j.  An involution commuting with
/// matrix products and inverses.
BandMatrix c_transform(const BandMatrix& a);

/// Exact inverse of an upper-unitriangular window by back-substitution.
/// Every entry of the result equals the corresponding entry of the infinite
/// inverse, because inversion of upper-triangular matrices never looks
/// outside the leading window.
BandMatrix unitriangular_inverse(const BandMatrix& a);

BandMatrix band_mul(const BandMatrix& a, const BandMatrix& b);

/// Curl window N(a_1, ..., a_n), the c-transform of the inverse whirl.  Its
/// (i, j) entry is the monomial a_i a_{i+1} ... a_{j-1} with periodic
/// subscripts.
BandMatrix curl(Ambient amb, const std::vector<Poly>& vars, int K);
BandMatrix curl_flow(Ambient amb, int flow, int K);

} // namespace loopsym
