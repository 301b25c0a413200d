#include "loopsym/factored.hpp"

#include <algorithm>
#include <map>

namespace loopsym {

namespace {

Rat rat_pow(const Rat& base, int k) {
    if (k == 0)
        return Rat(1);
    if (base == 0) {
        if (k < 0)
            throw divide_by_zero("zero raised to a negative power");
        return Rat(0);
    }
    const unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
    Rat r = k > 0 ? Rat(num, den) : Rat(den, num);
    r.canonicalize();
    return r;
}

// Largest monomial dividing every term (per-variable min exponent).
Monomial monomial_content(const Poly& p) {
    if (p.is_zero())
        return Monomial{};
    std::vector<Monomial::Entry> common(p.terms()[0].mono.entries().begin(),
                                        p.terms()[0].mono.entries().end());
    for (const auto& t : p.terms()) {
        std::vector<Monomial::Entry> next;
        for (const auto& [v, e] : common) {
            int o = t.mono.exponent(v);
            if (o > 0)
                next.emplace_back(v, std::min(e, o));
        }
        common = std::move(next);
        if (common.empty())
            break;
    }
    return Monomial::from_entries(std::move(common));
}

} // namespace

Factored Factored::constant(Ambient amb, Rat c) {
    Factored f(amb);
    f.scalar_ = std::move(c);
    return f;
}

Factored Factored::from_monomial(Ambient amb, Monomial mono, Rat coeff) {
    Factored f(amb);
    f.scalar_ = std::move(coeff);
    if (f.scalar_ != 0)
        f.mono_num_ = std::move(mono);
    return f;
}

void Factored::absorb(const Poly& primitive, int exp) {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), primitive,
                               [](const Factor& f, const Poly& p) { return poly_less(f.base, p); });
    if (it != factors_.end() && it->base == primitive) {
        it->exp += exp;
        if (it->exp == 0)
            factors_.erase(it);
    } else {
        factors_.insert(it, Factor{primitive, exp});
    }
}

void Factored::push_poly_factor(const Poly& p, int exp) {
    if (exp == 0 || scalar_ == 0)
        return;
    if (p.is_zero()) {
        if (exp < 0)
            throw divide_by_zero("zero polynomial in a denominator");
        scalar_ = 0;
        mono_num_ = Monomial{};
        mono_den_ = Monomial{};
        factors_.clear();
        return;
    }
    // Split p = g * c * q with g the monomial content, c the rational
    // content (sign-adjusted) and q primitive; only q stays a factor.
    Monomial g = monomial_content(p);
    Poly q = g.is_one() ? p : Poly::from_terms(p.ambient(), [&] {
        std::vector<Poly::Term> ts;
        ts.reserve(p.terms().size());
        for (const auto& t : p.terms())
            ts.push_back(Poly::Term{t.mono.div(g), t.coeff});
        return ts;
    }());
    auto [q_prim, c] = q.primitive_part();
    scalar_ *= rat_pow(c, exp);
    if (!g.is_one()) {
        if (exp > 0)
            mono_num_ = mono_num_.mul(g.pow(exp));
        else
            mono_den_ = mono_den_.mul(g.pow(-exp));
        reduce_monomial_pair(mono_num_, mono_den_);
    }
    if (!q_prim.is_constant())
        absorb(q_prim, exp);
}

Factored Factored::from_poly(const Poly& p) {
    Factored f(p.ambient());
    f.scalar_ = 1;
    f.push_poly_factor(p, 1);
    return f;
}

Factored Factored::quotient(const Poly& p, const Poly& q) {
    Factored f = from_poly(p);
    f.push_poly_factor(q, -1);
    return f;
}

Factored Factored::mul(const Factored& other) const {
    check_ambient(amb_, other.amb_, "factored_mul");
    if (is_zero() || other.is_zero())
        return zero(amb_);
    Factored out(amb_);
    out.scalar_ = scalar_ * other.scalar_;
    out.mono_num_ = mono_num_.mul(other.mono_num_);
    out.mono_den_ = mono_den_.mul(other.mono_den_);
    reduce_monomial_pair(out.mono_num_, out.mono_den_);
    out.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin(), ae = factors_.end();
    auto b = other.factors_.begin(), be = other.factors_.end();
    while (a != ae && b != be) {
        if (poly_less(a->base, b->base))
            out.factors_.push_back(*a++);
        else if (poly_less(b->base, a->base))
            out.factors_.push_back(*b++);
        else {
            int e = a->exp + b->exp;
            if (e != 0)
                out.factors_.push_back(Factor{a->base, e});
            ++a;
            ++b;
        }
    }
    out.factors_.insert(out.factors_.end(), a, ae);
    out.factors_.insert(out.factors_.end(), b, be);
    return out;
}

Factored Factored::inverse() const {
    if (is_zero())
        throw divide_by_zero("inverse of the zero value");
    Factored out(amb_);
    out.scalar_ = Rat(1) / scalar_;
    out.mono_num_ = mono_den_;
    out.mono_den_ = mono_num_;
    out.factors_ = factors_;
    for (auto& f : out.factors_)
        f.exp = -f.exp;
    return out;
}

Factored Factored::div(const Factored& other) const {
    return mul(other.inverse());
}

Factored Factored::mul_scalar(const Rat& c) const {
    if (c == 0)
        return zero(amb_);
    Factored out = *this;
    out.scalar_ *= c;
    return out;
}

Factored Factored::pow(int k) const {
    if (is_zero()) {
        if (k > 0)
            return zero(amb_);
        if (k == 0)
            return constant(amb_, 1);
        throw divide_by_zero("zero raised to a negative power");
    }
    Factored out(amb_);
    out.scalar_ = rat_pow(scalar_, k);
    if (k >= 0) {
        out.mono_num_ = mono_num_.pow(k);
        out.mono_den_ = mono_den_.pow(k);
    } else {
        out.mono_num_ = mono_den_.pow(-k);
        out.mono_den_ = mono_num_.pow(-k);
    }
    if (k != 0) {
        out.factors_ = factors_;
        for (auto& f : out.factors_)
            f.exp *= k;
    }
    return out;
}

Poly Factored::expand_num() const {
    Poly acc = Poly::monomial(amb_, mono_num_, scalar_);
    for (const auto& f : factors_)
        if (f.exp > 0)
            acc = acc.mul(f.base.pow(f.exp));
    return acc;
}

Poly Factored::expand_den() const {
    Poly acc = Poly::monomial(amb_, mono_den_, 1);
    for (const auto& f : factors_)
        if (f.exp < 0)
            acc = acc.mul(f.base.pow(-f.exp));
    return acc;
}

RatFn Factored::to_ratfn() const {
    return RatFn(expand_num(), expand_den());
}

Rat Factored::eval(const std::map<VarId, Rat>& point) const {
    if (is_zero())
        return Rat(0);
    Rat den_val = mono_den_.eval(point);
    if (den_val == 0)
        throw divide_by_zero("denominator monomial vanishes at the point");
    Rat acc = scalar_ * mono_num_.eval(point) / den_val;
    for (const auto& f : factors_) {
        Rat v = f.base.eval(point);
        if (v == 0 && f.exp < 0)
            throw divide_by_zero("denominator factor vanishes at the point");
        acc *= rat_pow(v, f.exp);
    }
    return acc;
}

Factored factored_sum(const std::vector<Factored>& parts) {
    if (parts.empty())
        throw domain_error("factored_sum of an empty list");
    const Ambient amb = parts[0].ambient();
    std::vector<const Factored*> live;
    for (const auto& p : parts) {
        check_ambient(amb, p.ambient(), "factored_sum");
        if (!p.is_zero())
            live.push_back(&p);
    }
    if (live.empty())
        return Factored::zero(amb);
    if (live.size() == 1)
        return *live[0];

    // Factorwise lcm of the denominators.
    struct PolyLess {
        bool operator()(const Poly& a, const Poly& b) const { return poly_less(a, b); }
    };
    std::map<Poly, int, PolyLess> lcd_factors;
    Monomial lcd_mono;
    for (const Factored* p : live) {
        std::vector<Monomial::Entry> raised;
        for (const auto& [v, e] : p->mono_den().entries())
            if (lcd_mono.exponent(v) < e)
                raised.emplace_back(v, e - lcd_mono.exponent(v));
        if (!raised.empty())
            lcd_mono = lcd_mono.mul(Monomial::from_entries(std::move(raised)));
        for (const auto& f : p->factors())
            if (f.exp < 0) {
                int& m = lcd_factors[f.base];
                m = std::max(m, -f.exp);
            }
    }

    Poly sum = Poly::zero(amb);
    for (const Factored* p : live) {
        Poly contrib = Poly::monomial(amb, p->mono_num().mul(lcd_mono.div(p->mono_den())),
                                      p->scalar());
        for (const auto& f : p->factors())
            if (f.exp > 0)
                contrib = contrib.mul(f.base.pow(f.exp));
        for (const auto& [base, mult] : lcd_factors) {
            int have = 0;
            for (const auto& f : p->factors())
                if (f.exp < 0 && f.base == base)
                    have = -f.exp;
            if (mult - have > 0)
                contrib = contrib.mul(base.pow(mult - have));
        }
        sum = sum.add(contrib);
    }

    Factored out = Factored::from_poly(sum);
    out.push_poly_factor(Poly::monomial(amb, lcd_mono), -1);
    for (const auto& [base, mult] : lcd_factors)
        out.push_poly_factor(base, -mult);
    return out;
}

bool factored_eq(const Factored& a, const Factored& b) {
    check_ambient(a.ambient(), b.ambient(), "factored_eq");
    if (a.is_zero() || b.is_zero())
        return a.is_zero() == b.is_zero();
    Factored d = a.div(b);
    return d.expand_num() == d.expand_den();
}

} // namespace loopsym
