#include "loopsym/det.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace loopsym {

namespace {

void check_square(std::size_t rows, const auto& m) {
    if (rows == 0)
        throw shape_error("determinant of an empty matrix");
    for (const auto& row : m)
        if (row.size() != rows)
            throw shape_error("determinant of a non-square matrix");
}

// Graded lex with earlier (flow, color) more significant; compatible with
// monomial multiplication, which the division loop needs to terminate.
bool grlex_less(const Monomial& a, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db)
        return da < db;
    auto ia = a.entries().begin(), ae = a.entries().end();
    auto ib = b.entries().begin(), be = b.entries().end();
    while (ia != ae && ib != be) {
        if (ia->first != ib->first)
            return ib->first < ia->first; // b has the earlier variable => b larger
        if (ia->second != ib->second)
            return ia->second < ib->second;
        ++ia;
        ++ib;
    }
    return false; // equal degree and one exhausted => identical monomials
}

std::size_t grlex_leading(const Poly& p) {
    const auto& ts = p.terms();
    std::size_t best = 0;
    for (std::size_t i = 1; i < ts.size(); ++i)
        if (grlex_less(ts[best].mono, ts[i].mono))
            best = i;
    return best;
}

int permutation_sign(const std::vector<int>& perm) {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j])
                ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

} // namespace

Poly poly_divexact(const Poly& a, const Poly& b) {
    check_ambient(a.ambient(), b.ambient(), "poly_divexact");
    if (b.is_zero())
        throw divide_by_zero("exact division by the zero polynomial");
    Poly rem = a;
    std::vector<Poly::Term> quotient;
    const auto& bl = b.terms()[grlex_leading(b)];
    while (!rem.is_zero()) {
        const auto& rl = rem.terms()[grlex_leading(rem)];
        if (!rl.mono.divisible_by(bl.mono))
            throw domain_error("polynomial division is not exact");
        Monomial q_mono = rl.mono.div(bl.mono);
        Rat q_coeff = rl.coeff / bl.coeff;
        rem = rem.sub(b.mul_monomial(q_mono, q_coeff));
        quotient.push_back(Poly::Term{std::move(q_mono), std::move(q_coeff)});
    }
    return Poly::from_terms(a.ambient(), std::move(quotient));
}

Poly poly_det_leibniz(const PolyMatrix& m) {
    const std::size_t k = m.size();
    check_square(k, m);
    const Ambient amb = m[0][0].ambient();
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    Poly det = Poly::zero(amb);
    do {
        Poly prod = Poly::constant(amb, permutation_sign(perm));
        for (std::size_t i = 0; i < k && !prod.is_zero(); ++i)
            prod = prod.mul(m[i][perm[i]]);
        det = det.add(prod);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

Poly poly_det_bareiss(const PolyMatrix& m) {
    const std::size_t k = m.size();
    check_square(k, m);
    const Ambient amb = m[0][0].ambient();
    PolyMatrix w = m;
    Poly prev = Poly::one(amb);
    int sign = 1;
    for (std::size_t step = 0; step + 1 < k; ++step) {
        if (w[step][step].is_zero()) {
            std::size_t pivot = step + 1;
            while (pivot < k && w[pivot][step].is_zero())
                ++pivot;
            if (pivot == k)
                return Poly::zero(amb);
            std::swap(w[step], w[pivot]);
            sign = -sign;
        }
        for (std::size_t i = step + 1; i < k; ++i) {
            for (std::size_t j = step + 1; j < k; ++j) {
                Poly t = w[step][step].mul(w[i][j]).sub(w[i][step].mul(w[step][j]));
                w[i][j] = poly_divexact(t, prev);
            }
            w[i][step] = Poly::zero(amb);
        }
        prev = w[step][step];
    }
    return sign > 0 ? w[k - 1][k - 1] : w[k - 1][k - 1].neg();
}

Poly poly_det(const PolyMatrix& m) {
    return m.size() <= 6 ? poly_det_leibniz(m) : poly_det_bareiss(m);
}

Factored factored_det(const FactoredMatrix& m) {
    const std::size_t k = m.size();
    check_square(k, m);
    const Ambient amb = m[0][0].ambient();

    // Row clearing: multiply row i by the factorwise lcm of its entry
    // denominators, remembering the product to divide back out.
    struct PolyLess {
        bool operator()(const Poly& a, const Poly& b) const { return poly_less(a, b); }
    };
    Factored clearing = Factored::constant(amb, 1);
    PolyMatrix cleared(k, std::vector<Poly>(k, Poly::zero(amb)));
    for (std::size_t i = 0; i < k; ++i) {
        Monomial lcd_mono;
        std::map<Poly, int, PolyLess> lcd;
        for (const auto& entry : m[i]) {
            for (const auto& [v, e] : entry.mono_den().entries())
                if (lcd_mono.exponent(v) < e)
                    lcd_mono = lcd_mono.mul(Monomial::from_entries({{v, e - lcd_mono.exponent(v)}}));
            for (const auto& f : entry.factors())
                if (f.exp < 0) {
                    int& mult = lcd[f.base];
                    mult = std::max(mult, -f.exp);
                }
        }
        Factored row_den = Factored::from_monomial(amb, lcd_mono);
        for (const auto& [base, mult] : lcd)
            row_den = row_den.mul(Factored::from_poly(base).pow(mult));
        for (std::size_t j = 0; j < k; ++j) {
            Factored e = m[i][j].mul(row_den);
            if (!e.mono_den().is_one() ||
                std::any_of(e.factors().begin(), e.factors().end(),
                            [](const Factored::Factor& f) { return f.exp < 0; }))
                throw domain_error("row clearing left a denominator behind");
            cleared[i][j] = e.expand_num();
        }
        clearing = clearing.mul(row_den);
    }
    Factored det = Factored::from_poly(poly_det(cleared));
    return det.div(clearing);
}

} // namespace loopsym
