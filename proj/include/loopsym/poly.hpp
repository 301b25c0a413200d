#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "loopsym/monomial.hpp"
#include "loopsym/rational.hpp"
#include "loopsym/variables.hpp"

namespace loopsym {

/// Sparse multivariate polynomial over exact rationals in the mn variables
/// x_i^(j).  Terms are kept sorted by the canonical term order with no zero
/// coefficients, so two polynomials are equal iff their term lists are.
class Poly {
public:
    struct Term {
        Monomial mono;
        Rat coeff;
    };

    Poly() = default;
    explicit Poly(Ambient amb) : amb_(amb) {}

    static Poly zero(Ambient amb) { return Poly(amb); }
    static Poly constant(Ambient amb, Rat c);
    static Poly one(Ambient amb) { return constant(amb, 1); }
    static Poly variable(Ambient amb, VarId v);
    static Poly monomial(Ambient amb, Monomial mono, Rat coeff = 1);
    /// Normalizing constructor: sorts, merges duplicates, purges zeros.
    static Poly from_terms(Ambient amb, std::vector<Term> terms);

    const Ambient& ambient() const { return amb_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const;
    /// Coefficient of the empty monomial.
    Rat constant_term() const;
    /// Coefficient of a given monomial (zero when absent).
    Rat coefficient(const Monomial& mono) const;

    int total_degree() const; // -1 for the zero polynomial
    bool is_homogeneous() const;

    /// Largest term in the canonical order.  Requires a nonzero polynomial.
    const Term& leading_term() const;

    Poly neg() const;
    Poly add(const Poly& other) const;
    Poly sub(const Poly& other) const;
    Poly mul(const Poly& other) const;
    Poly mul_scalar(const Rat& c) const;
    Poly mul_monomial(const Monomial& mono, const Rat& coeff = 1) const;
    Poly pow(int k) const;

    /// Exact evaluation at a full assignment of the support variables.
    Rat eval(const std::map<VarId, Rat>& point) const;

    /// gcd of coefficient numerators over lcm of denominators; 0 for zero.
    Rat content() const;
    /// Divides out the content and flips the sign so the leading coefficient
    /// is positive; returns the extracted scalar c with *this == c * result.
    std::pair<Poly, Rat> primitive_part() const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.amb_ == b.amb_ && a.terms_size_eq(b) && a.terms_eq(b);
    }

    Poly operator+(const Poly& o) const { return add(o); }
    Poly operator-(const Poly& o) const { return sub(o); }
    Poly operator*(const Poly& o) const { return mul(o); }
    Poly operator-() const { return neg(); }

    /// Canonical text form, terms in canonical order.
    std::string to_string() const;

private:
    bool terms_size_eq(const Poly& b) const { return terms_.size() == b.terms_.size(); }
    bool terms_eq(const Poly& b) const;

    Ambient amb_;
    std::vector<Term> terms_;
};

/// Total order on polynomials (ambient, then term-by-term); used for the
/// deterministic bookkeeping of factor lists.
bool poly_less(const Poly& a, const Poly& b);

} // namespace loopsym
