#include "loopsym/poly.hpp"

#include <algorithm>

namespace loopsym {

namespace {

// Sorts, merges equal monomials and purges zero coefficients in place.
void normalize_terms(std::vector<Poly::Term>& terms) {
    std::sort(terms.begin(), terms.end(), [](const Poly::Term& a, const Poly::Term& b) {
        return monomial_less(a.mono, b.mono);
    });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        Monomial mono = std::move(terms[i].mono);
        Rat coeff = std::move(terms[i].coeff);
        ++i;
        while (i < terms.size() && terms[i].mono == mono) {
            coeff += terms[i].coeff;
            ++i;
        }
        if (coeff != 0)
            terms[out++] = Poly::Term{std::move(mono), std::move(coeff)};
    }
    terms.resize(out);
}

void check_vars(const Ambient& amb, const Monomial& mono) {
    for (const auto& [v, e] : mono.entries()) {
        if (v.flow < 1 || v.flow > amb.m || v.color < 0 || v.color >= amb.n)
            throw domain_error("variable " + var_to_string(v) + " outside the (m=" +
                               std::to_string(amb.m) + ", n=" + std::to_string(amb.n) +
                               ") universe");
    }
}

} // namespace

Poly Poly::constant(Ambient amb, Rat c) {
    Poly p(amb);
    if (c != 0)
        p.terms_.push_back(Term{Monomial{}, std::move(c)});
    return p;
}

Poly Poly::variable(Ambient amb, VarId v) {
    return monomial(amb, Monomial::variable(v));
}

Poly Poly::monomial(Ambient amb, Monomial mono, Rat coeff) {
    check_vars(amb, mono);
    Poly p(amb);
    if (coeff != 0)
        p.terms_.push_back(Term{std::move(mono), std::move(coeff)});
    return p;
}

Poly Poly::from_terms(Ambient amb, std::vector<Term> terms) {
    for (const auto& t : terms)
        check_vars(amb, t.mono);
    normalize_terms(terms);
    Poly p(amb);
    p.terms_ = std::move(terms);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Rat Poly::constant_term() const {
    if (!terms_.empty() && terms_[0].mono.is_one())
        return terms_[0].coeff;
    return Rat(0);
}

Rat Poly::coefficient(const Monomial& mono) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), mono,
                               [](const Term& t, const Monomial& m) {
                                   return monomial_less(t.mono, m);
                               });
    if (it != terms_.end() && it->mono == mono)
        return it->coeff;
    return Rat(0);
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& t : terms_)
        d = std::max(d, t.mono.total_degree());
    return d;
}

bool Poly::is_homogeneous() const {
    if (terms_.empty())
        return true;
    int d = terms_[0].mono.total_degree();
    for (const auto& t : terms_)
        if (t.mono.total_degree() != d)
            return false;
    return true;
}

const Poly::Term& Poly::leading_term() const {
    if (terms_.empty())
        throw domain_error("leading term of the zero polynomial");
    return terms_.back();
}

bool Poly::terms_eq(const Poly& b) const {
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].mono == b.terms_[i].mono) || terms_[i].coeff != b.terms_[i].coeff)
            return false;
    return true;
}

Poly Poly::neg() const {
    Poly out(amb_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        out.terms_.push_back(Term{t.mono, -t.coeff});
    return out;
}

Poly Poly::add(const Poly& other) const {
    check_ambient(amb_, other.amb_, "poly_add");
    Poly out(amb_);
    out.terms_.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin(), ae = terms_.end();
    auto b = other.terms_.begin(), be = other.terms_.end();
    while (a != ae && b != be) {
        if (monomial_less(a->mono, b->mono))
            out.terms_.push_back(*a++);
        else if (monomial_less(b->mono, a->mono))
            out.terms_.push_back(*b++);
        else {
            Rat c = a->coeff + b->coeff;
            if (c != 0)
                out.terms_.push_back(Term{a->mono, std::move(c)});
            ++a;
            ++b;
        }
    }
    out.terms_.insert(out.terms_.end(), a, ae);
    out.terms_.insert(out.terms_.end(), b, be);
    return out;
}

Poly Poly::sub(const Poly& other) const {
    return add(other.neg());
}

Poly Poly::mul(const Poly& other) const {
    check_ambient(amb_, other.amb_, "poly_mul");
    if (terms_.empty() || other.terms_.empty())
        return Poly(amb_);

    // Bound the scratch vector; beyond it, split and recombine so memory
    // tracks the collected result rather than the raw pair count.
    constexpr std::size_t kPairLimit = std::size_t(1) << 20;
    if (terms_.size() * other.terms_.size() > kPairLimit) {
        const Poly& big = terms_.size() >= other.terms_.size() ? *this : other;
        const Poly& small = terms_.size() >= other.terms_.size() ? other : *this;
        std::size_t half = big.terms_.size() / 2;
        Poly lo(amb_), hi(amb_);
        lo.terms_.assign(big.terms_.begin(), big.terms_.begin() + half);
        hi.terms_.assign(big.terms_.begin() + half, big.terms_.end());
        return lo.mul(small).add(hi.mul(small));
    }

    std::vector<Term> prods;
    prods.reserve(terms_.size() * other.terms_.size());
    for (const auto& ta : terms_)
        for (const auto& tb : other.terms_)
            prods.push_back(Term{ta.mono.mul(tb.mono), ta.coeff * tb.coeff});
    normalize_terms(prods);
    Poly out(amb_);
    out.terms_ = std::move(prods);
    return out;
}

Poly Poly::mul_scalar(const Rat& c) const {
    if (c == 0)
        return Poly(amb_);
    Poly out(amb_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        out.terms_.push_back(Term{t.mono, t.coeff * c});
    return out;
}

Poly Poly::mul_monomial(const Monomial& mono, const Rat& coeff) const {
    if (coeff == 0)
        return Poly(amb_);
    check_vars(amb_, mono);
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_)
        terms.push_back(Term{t.mono.mul(mono), t.coeff * coeff});
    // The term order is not translation-invariant, so re-sort.
    normalize_terms(terms);
    Poly out(amb_);
    out.terms_ = std::move(terms);
    return out;
}

Poly Poly::pow(int k) const {
    if (k < 0)
        throw domain_error("negative polynomial power");
    Poly acc = Poly::one(amb_);
    Poly base = *this;
    while (k > 0) {
        if (k & 1)
            acc = acc.mul(base);
        k >>= 1;
        if (k > 0)
            base = base.mul(base);
    }
    return acc;
}

Rat Poly::eval(const std::map<VarId, Rat>& point) const {
    Rat acc(0);
    for (const auto& t : terms_)
        acc += t.coeff * t.mono.eval(point);
    return acc;
}

Rat Poly::content() const {
    if (terms_.empty())
        return Rat(0);
    mpz_class num_gcd(0), den_lcm(1);
    for (const auto& t : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
    }
    Rat c(num_gcd, den_lcm);
    c.canonicalize();
    return c;
}

std::pair<Poly, Rat> Poly::primitive_part() const {
    if (terms_.empty())
        return {Poly(amb_), Rat(0)};
    Rat c = content();
    if (leading_term().coeff < 0)
        c = -c;
    Poly out(amb_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        out.terms_.push_back(Term{t.mono, t.coeff / c});
    return {std::move(out), std::move(c)};
}

std::string Poly::to_string() const {
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& t : terms_) {
        const bool neg = t.coeff < 0;
        Rat a = neg ? Rat(-t.coeff) : t.coeff;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        if (t.mono.is_one())
            s += rat_to_string(a);
        else if (a == 1)
            s += t.mono.to_string();
        else
            s += rat_to_string(a) + "*" + t.mono.to_string();
    }
    return s;
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.ambient().m != b.ambient().m)
        return a.ambient().m < b.ambient().m;
    if (a.ambient().n != b.ambient().n)
        return a.ambient().n < b.ambient().n;
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    for (std::size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
        if (!(ta[i].mono == tb[i].mono))
            return monomial_less(ta[i].mono, tb[i].mono);
        if (ta[i].coeff != tb[i].coeff)
            return ta[i].coeff < tb[i].coeff;
    }
    return ta.size() < tb.size();
}

} // namespace loopsym
