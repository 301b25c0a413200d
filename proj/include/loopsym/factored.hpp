#pragma once

#include <vector>

#include "loopsym/poly.hpp"
#include "loopsym/ratfn.hpp"

namespace loopsym {

/// Rational function kept as scalar * mono_num/mono_den * prod_i P_i^e_i
/// with every P_i a primitive non-constant polynomial and e_i a nonzero
/// (possibly negative) integer.  Products cancel structurally equal factors
/// by multiset arithmetic, which is what keeps the images of the birational
/// maps and the alternant entries small without any polynomial GCD.
class Factored {
public:
    struct Factor {
        Poly base; // primitive, positive leading coefficient, non-constant
        int exp;   // nonzero
    };

    explicit Factored(Ambient amb) : amb_(amb), scalar_(0) {}

    static Factored zero(Ambient amb) { return Factored(amb); }
    static Factored constant(Ambient amb, Rat c);
    static Factored from_monomial(Ambient amb, Monomial mono, Rat coeff = 1);
    static Factored from_poly(const Poly& p);
    /// p / q with both sides absorbed into the factor list.
    static Factored quotient(const Poly& p, const Poly& q);

    const Ambient& ambient() const { return amb_; }
    bool is_zero() const { return scalar_ == 0; }
    const Rat& scalar() const { return scalar_; }
    const Monomial& mono_num() const { return mono_num_; }
    const Monomial& mono_den() const { return mono_den_; }
    const std::vector<Factor>& factors() const { return factors_; }

    Factored mul(const Factored& other) const;
    Factored div(const Factored& other) const;
    Factored mul_scalar(const Rat& c) const;
    Factored neg() const { return mul_scalar(Rat(-1)); }
    /// Integer power; negative k inverts (requires a nonzero value).
    Factored pow(int k) const;
    Factored inverse() const;

    /// Expanded numerator (scalar folded in) and denominator.
    Poly expand_num() const;
    Poly expand_den() const;
    RatFn to_ratfn() const;

    /// Exact evaluation; throws divide_by_zero if a denominator factor
    /// vanishes at the point.
    Rat eval(const std::map<VarId, Rat>& point) const;

private:
    void push_poly_factor(const Poly& p, int exp);
    void absorb(const Poly& primitive, int exp);
    friend Factored factored_sum(const std::vector<Factored>& parts);

    Ambient amb_;
    Rat scalar_;
    Monomial mono_num_;
    Monomial mono_den_;
    std::vector<Factor> factors_; // sorted by poly_less on base, unique bases
};

/// Sum over a common denominator.  The common denominator is the factorwise
/// lcm of the part denominators (max exponent per distinct base, per-variable
/// max for the monomial parts), so no GCD is ever computed; the numerator is
/// expanded into a single polynomial factor.
Factored factored_sum(const std::vector<Factored>& parts);

/// Field equality by cross-multiplication after structural cancellation.
bool factored_eq(const Factored& a, const Factored& b);

} // namespace loopsym
