#include "loopsym/rational.hpp"

namespace loopsym {

Rat rat_from_string(const std::string& s) {
    if (s.empty())
        throw domain_error("empty rational string");
    for (char c : s) {
        if (!(c == '-' || c == '+' || c == '/' || (c >= '0' && c <= '9')))
            throw domain_error("malformed rational string: " + s);
    }
    mpq_t q;
    mpq_init(q);
    if (mpq_set_str(q, s.c_str(), 10) != 0) {
        mpq_clear(q);
        throw domain_error("malformed rational string: " + s);
    }
    if (mpz_sgn(mpq_denref(q)) == 0) {
        mpq_clear(q);
        throw divide_by_zero("rational with zero denominator: " + s);
    }
    mpq_canonicalize(q);
    Rat r(q);
    mpq_clear(q);
    return r;
}

std::string rat_to_string(const Rat& r) {
    return r.get_str();
}

} // namespace loopsym
