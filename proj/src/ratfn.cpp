#include "loopsym/ratfn.hpp"

namespace loopsym {

namespace {

// Joint normalization: divide out the common rational content of num and
// den, then make the leading coefficient of den positive.
void normalize(Poly& num, Poly& den) {
    if (den.is_zero())
        throw divide_by_zero("rational function with zero denominator");
    if (num.is_zero()) {
        auto [dprim, dc] = den.primitive_part();
        den = std::move(dprim);
        return;
    }
    mpz_class num_gcd(0), den_lcm(1);
    auto absorb = [&](const Poly& p) {
        for (const auto& t : p.terms()) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
        }
    };
    absorb(num);
    absorb(den);
    Rat c(num_gcd, den_lcm);
    c.canonicalize();
    if (den.leading_term().coeff < 0)
        c = -c;
    num = num.mul_scalar(Rat(1) / c);
    den = den.mul_scalar(Rat(1) / c);
}

} // namespace

RatFn::RatFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    check_ambient(num_.ambient(), den_.ambient(), "ratfn");
    normalize(num_, den_);
}

RatFn RatFn::from_poly(Poly p) {
    Ambient amb = p.ambient();
    return RatFn(std::move(p), Poly::one(amb));
}

RatFn RatFn::neg() const {
    return RatFn(num_.neg(), den_);
}

RatFn RatFn::add(const RatFn& other) const {
    check_ambient(ambient(), other.ambient(), "ratfn_add");
    return RatFn(num_.mul(other.den_).add(other.num_.mul(den_)), den_.mul(other.den_));
}

RatFn RatFn::sub(const RatFn& other) const {
    return add(other.neg());
}

RatFn RatFn::mul(const RatFn& other) const {
    check_ambient(ambient(), other.ambient(), "ratfn_mul");
    return RatFn(num_.mul(other.num_), den_.mul(other.den_));
}

RatFn RatFn::div(const RatFn& other) const {
    check_ambient(ambient(), other.ambient(), "ratfn_div");
    if (other.num_.is_zero())
        throw divide_by_zero("division by the zero rational function");
    return RatFn(num_.mul(other.den_), den_.mul(other.num_));
}

RatFn RatFn::inverse() const {
    if (num_.is_zero())
        throw divide_by_zero("inverse of the zero rational function");
    return RatFn(den_, num_);
}

std::string RatFn::to_string() const {
    if (den_ == Poly::one(ambient()))
        return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

bool ratfn_eq(const RatFn& a, const RatFn& b) {
    check_ambient(a.ambient(), b.ambient(), "ratfn_eq");
    return a.num().mul(b.den()) == b.num().mul(a.den());
}

} // namespace loopsym
