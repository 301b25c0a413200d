#pragma once

#include <string>

#include "loopsym/poly.hpp"

namespace loopsym {

/// Quotient of two polynomials.  Not necessarily in lowest terms: the
/// normal form only divides out the joint integer content and fixes the
/// sign so the leading coefficient of the denominator is positive.
/// Equality of field elements is decided by cross-multiplication.
class RatFn {
public:
    RatFn() = default;
    /// Normalizes; throws divide_by_zero when den is the zero polynomial.
    RatFn(Poly num, Poly den);

    static RatFn from_poly(Poly p);
    static RatFn constant(Ambient amb, Rat c) { return from_poly(Poly::constant(amb, c)); }
    static RatFn one(Ambient amb) { return constant(amb, 1); }
    static RatFn zero(Ambient amb) { return from_poly(Poly::zero(amb)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const Ambient& ambient() const { return num_.ambient(); }
    bool is_zero() const { return num_.is_zero(); }

    RatFn neg() const;
    RatFn add(const RatFn& other) const;
    RatFn sub(const RatFn& other) const;
    RatFn mul(const RatFn& other) const;
    /// Throws divide_by_zero when other is the zero rational function.
    RatFn div(const RatFn& other) const;
    RatFn inverse() const;

    RatFn operator+(const RatFn& o) const { return add(o); }
    RatFn operator-(const RatFn& o) const { return sub(o); }
    RatFn operator*(const RatFn& o) const { return mul(o); }
    RatFn operator/(const RatFn& o) const { return div(o); }
    RatFn operator-() const { return neg(); }

    std::string to_string() const;

private:
    Poly num_;
    Poly den_;
};

/// Field equality via a.num * b.den == b.num * a.den; exact and GCD-free.
bool ratfn_eq(const RatFn& a, const RatFn& b);

} // namespace loopsym
