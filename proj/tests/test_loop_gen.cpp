#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "loopsym/loop_gen.hpp"
#include "oracles.hpp"

using namespace loopsym;

namespace {

Poly var(const Ambient& amb, int flow, int color) {
    return Poly::variable(amb, make_var(amb, flow, color));
}

long binom(long a, long b) {
    if (b < 0 || b > a)
        return 0;
    long r = 1;
    for (long t = 1; t <= b; ++t)
        r = r * (a - b + t) / t;
    return r;
}

} // namespace

TEST_CASE("flow sets validate and support omission") {
    CHECK(FlowSet::full(3).flows() == std::vector<int>{1, 2, 3});
    CHECK(FlowSet::full(3).without(2).flows() == std::vector<int>{1, 3});
    CHECK(FlowSet{1, 3}.contains(3));
    CHECK_FALSE(FlowSet{1, 3}.contains(2));
    CHECK_THROWS_AS(FlowSet(std::vector<int>{2, 1}), domain_error);
    CHECK_THROWS_AS(FlowSet(std::vector<int>{0, 1}), domain_error);
    CHECK_THROWS_AS(FlowSet(std::vector<int>{1, 1}), domain_error);
}

TEST_CASE("elementary generators match the displayed example") {
    const Ambient amb{3, 2};
    const FlowSet full = FlowSet::full(3);
    CHECK(loop_e(amb, 1, 1, full) == var(amb, 1, 1) + var(amb, 2, 1) + var(amb, 3, 1));
    CHECK(loop_e(amb, 2, 1, full) == var(amb, 1, 1) * var(amb, 2, 2) +
                                         var(amb, 2, 1) * var(amb, 3, 2) +
                                         var(amb, 1, 1) * var(amb, 3, 2));
    CHECK(loop_e(amb, 3, 1, full) == var(amb, 1, 1) * var(amb, 2, 2) * var(amb, 3, 1));
    CHECK(loop_e(amb, 0, 1, full) == Poly::one(amb));
    CHECK(loop_e(amb, 4, 1, full).is_zero());
}

TEST_CASE("homogeneous generators match the displayed example") {
    const Ambient amb{3, 2};
    const FlowSet full = FlowSet::full(3);
    const Poly expected = var(amb, 1, 1) * var(amb, 1, 2) + var(amb, 2, 1) * var(amb, 2, 2) +
                          var(amb, 3, 1) * var(amb, 3, 2) + var(amb, 2, 1) * var(amb, 1, 2) +
                          var(amb, 3, 1) * var(amb, 2, 2) + var(amb, 3, 1) * var(amb, 1, 2);
    CHECK(loop_h(amb, 2, 1, full) == expected);
    CHECK(loop_h(amb, 0, 1, full) == Poly::one(amb));
}

TEST_CASE("single-flow h is the alternant monomial chain") {
    const Ambient amb{3, 3};
    // h_k(x_m) with base color b is x_m^(b) x_m^(b+1) ... x_m^(b+k-1); the
    // alternant entries use it with b = r - k + 1 so the colors descend from
    // r.  Both readings name the same multiset of colors.
    const int k = 4, r = 2;
    const Poly h = loop_h(amb, k, r - k + 1, FlowSet{3});
    REQUIRE(h.term_count() == 1);
    Poly expected = Poly::one(amb);
    for (int t = 0; t < k; ++t)
        expected = expected * var(amb, 3, r - t);
    CHECK(h == expected);
}

TEST_CASE("empty flow set collapses the generators") {
    const Ambient amb{2, 2};
    const FlowSet none;
    CHECK(loop_e(amb, 0, 1, none) == Poly::one(amb));
    CHECK(loop_h(amb, 0, 2, none) == Poly::one(amb));
    CHECK(loop_e(amb, 1, 1, none).is_zero());
    CHECK(loop_h(amb, 3, 1, none).is_zero());
}

TEST_CASE("h term counts follow the multiset formula") {
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 2; ++n) {
            const Ambient amb{m, n};
            const FlowSet full = FlowSet::full(m);
            for (int k = 0; k <= 5; ++k) {
                // Terms counted with multiplicity: evaluate at all-ones.
                std::map<VarId, Rat> ones;
                for (int i = 1; i <= m; ++i)
                    for (int j = 1; j <= n; ++j)
                        ones[make_var(amb, i, j)] = Rat(1);
                CHECK(loop_h(amb, k, 1, full).eval(ones) == Rat(binom(m + k - 1, k)));
                CHECK(loop_e(amb, k, 1, full).eval(ones) == Rat(binom(m, k)));
            }
        }
}

TEST_CASE("pi and power sums") {
    const Ambient amb3{2, 3};
    CHECK(pi(amb3, 1) == var(amb3, 1, 1) * var(amb3, 1, 2) * var(amb3, 1, 3));
    const Ambient amb1{2, 1};
    CHECK(pi(amb1, 2) == var(amb1, 2, 1));
    CHECK_THROWS_AS(pi(amb1, 3), domain_error);
    CHECK_THROWS_AS(pi(amb1, 0), domain_error);
    CHECK(power_sum(amb1, 1) == var(amb1, 1, 1) + var(amb1, 2, 1));
    const Ambient amb2{2, 2};
    CHECK(power_sum(amb2, 1) ==
          var(amb2, 1, 1) * var(amb2, 1, 2) + var(amb2, 2, 1) * var(amb2, 2, 2));
    CHECK_THROWS_AS(power_sum(amb2, 0), domain_error);
    for (int k = 1; k <= 4; ++k)
        for (int n = 1; n <= 3; ++n) {
            const Ambient amb{3, n};
            CHECK(pi(amb, 1).pow(k).total_degree() == k * n);
            const Poly p = power_sum(amb, k);
            CHECK(p.total_degree() == k * n);
            CHECK(p.is_homogeneous());
        }
}

TEST_CASE("kappa matches the four-term telescoping example") {
    const Ambient amb{2, 4};
    const Poly k2 = kappa(amb, 2, 1, 2);
    const Poly expected = var(amb, 1, 3) * var(amb, 1, 4) * var(amb, 1, 1) +
                          var(amb, 2, 3) * var(amb, 1, 4) * var(amb, 1, 1) +
                          var(amb, 2, 3) * var(amb, 2, 4) * var(amb, 1, 1) +
                          var(amb, 2, 3) * var(amb, 2, 4) * var(amb, 2, 1);
    CHECK(k2 == expected);
}

TEST_CASE("kappa degenerates to one when n=1") {
    const Ambient amb{3, 1};
    CHECK(kappa(amb, 1, 1, 2) == Poly::one(amb));
    CHECK(kappa(amb, 5, 3, 1) == Poly::one(amb));
}

TEST_CASE("kappa equals the two-flow h generator") {
    for (int n = 1; n <= 5; ++n) {
        const Ambient amb{3, n};
        for (int r = 1; r <= n; ++r) {
            CHECK(kappa(amb, r, 1, 2) == loop_h(amb, n - 1, r + 1, FlowSet{1, 2}));
            CHECK(kappa(amb, r, 2, 3) == loop_h(amb, n - 1, r + 1, FlowSet{2, 3}));
        }
    }
    CHECK_THROWS_AS(kappa(Ambient{2, 2}, 1, 1, 1), domain_error);
}

TEST_CASE("matrix and formula routes agree") {
    const int k_max = 6;
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 3; ++n) {
            const Ambient amb{m, n};
            const int K = window_size(amb, k_max);
            const BandMatrix a = whirl_product(amb, K);
            const BandMatrix b = curl_product(amb, K);
            const FlowSet full = FlowSet::full(m);
            for (int r = 1; r <= n; ++r)
                for (int k = 0; k <= k_max; ++k) {
                    CHECK(a.entry(r, r + k) == loop_e(amb, k, r, full));
                    CHECK(b.entry(r, r + k) == loop_h(amb, k, r, full));
                }
        }
}

TEST_CASE("n=1 generators reduce to the classical polynomials") {
    for (int m = 1; m <= 4; ++m) {
        const Ambient amb{m, 1};
        const FlowSet full = FlowSet::full(m);
        for (int k = 0; k <= 5; ++k) {
            CHECK(loop_e(amb, k, 1, full) == oracle::to_poly(amb, oracle::classical_e(m, k)));
            CHECK(loop_h(amb, k, 1, full) == oracle::to_poly(amb, oracle::classical_h(m, k)));
        }
    }
}
