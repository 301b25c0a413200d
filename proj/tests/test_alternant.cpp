#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "loopsym/alternant.hpp"
#include "oracles.hpp"

using namespace loopsym;

namespace {

Poly var(const Ambient& amb, int flow, int color) {
    return Poly::variable(amb, make_var(amb, flow, color));
}

RatFn entry_rf(const AlternantSpec& spec, int i, int j) {
    return spec.entry(i, j);
}

} // namespace

TEST_CASE("alternant matrix matches the displayed 2x2 example") {
    const Ambient amb{2, 3};
    const AlternantSpec spec = alternant_matrix(amb, {4, 2}, 2);
    const Poly k1 = kappa(amb, 1, 1, 2);
    const Poly k2 = kappa(amb, 2, 1, 2);
    const Poly k3 = kappa(amb, 3, 1, 2);

    const Poly mono11 = var(amb, 1, 1) * var(amb, 1, 1) * var(amb, 1, 2) * var(amb, 1, 3);
    CHECK(ratfn_eq(entry_rf(spec, 1, 1), RatFn(mono11 * k1, k2)));

    const Poly mono12 = var(amb, 2, 2) * var(amb, 2, 2) * var(amb, 2, 1) * var(amb, 2, 3);
    CHECK(ratfn_eq(entry_rf(spec, 1, 2), RatFn::from_poly(mono12)));

    const Poly mono21 = var(amb, 1, 1) * var(amb, 1, 3);
    CHECK(ratfn_eq(entry_rf(spec, 2, 1), RatFn(mono21 * k3, k2)));

    CHECK(ratfn_eq(entry_rf(spec, 2, 2), RatFn::from_poly(var(amb, 2, 1) * var(amb, 2, 2))));

    CHECK_THROWS_AS(alternant_matrix(amb, {4, 2, 1}, 2), shape_error);
    CHECK_THROWS_AS(alternant_matrix(amb, {4, -1}, 2), domain_error);
}

TEST_CASE("degenerate alternants") {
    const Ambient amb{2, 2};
    // alpha = (0, 0): h_0 = 1 everywhere and substitutions fix constants.
    const AlternantSpec zeros = alternant_matrix(amb, {0, 0}, 1);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            CHECK(ratfn_eq(zeros.entry(i, j), RatFn::one(amb)));
    CHECK(alternant_det(zeros).is_zero());

    // Repeated alpha entries force equal rows, hence a zero determinant.
    CHECK(alternant_det(alternant_matrix(amb, {2, 2}, 1)).is_zero());
}

TEST_CASE("one-flow alternants are bare monomial chains") {
    const Ambient amb{1, 3};
    for (int k = 0; k <= 4; ++k)
        for (int r = 1; r <= 3; ++r) {
            const Factored det = alternant_det(alternant_matrix(amb, {k}, r));
            CHECK(factored_eq(det,
                              Factored::from_poly(loop_h(amb, k, r - k + 1, FlowSet{1}))));
        }
}

TEST_CASE("staircase alternant matches the displayed quotient") {
    const Ambient amb{2, 3};
    const Factored adelta = alternant_det(alternant_matrix(amb, {1, 0}, 2));
    const Poly target = pi(amb, 1) - pi(amb, 2);
    CHECK(factored_eq(adelta, Factored::quotient(target, kappa(amb, 2, 1, 2))));
}

TEST_CASE("row swaps negate the determinant") {
    for (int n = 1; n <= 3; ++n) {
        const Ambient amb{2, n};
        for (int r = 1; r <= n; ++r) {
            const Factored ab = alternant_det(alternant_matrix(amb, {4, 2}, r));
            const Factored ba = alternant_det(alternant_matrix(amb, {2, 4}, r));
            CHECK(factored_eq(ab, ba.neg()));
        }
    }
    // A three-row cycle needs two swaps: the sign is +1.
    const Ambient amb3{3, 2};
    const Factored sorted = alternant_det(alternant_matrix(amb3, {5, 3, 1}, 1));
    const Factored cycled = alternant_det(alternant_matrix(amb3, {3, 1, 5}, 1));
    CHECK(factored_eq(sorted, cycled));
    const Factored swapped = alternant_det(alternant_matrix(amb3, {3, 5, 1}, 1));
    CHECK(factored_eq(sorted, swapped.neg()));
}

TEST_CASE("n=1 alternants match the classical oracle") {
    for (int m = 1; m <= 4; ++m) {
        const Ambient amb{m, 1};
        for (const auto& lambda : partitions_up_to(5)) {
            if (lambda.length() > m)
                continue;
            const auto alpha = shifted_parts(lambda, m);
            const AlternantSpec spec = alternant_matrix(amb, alpha, 1);
            // Entries are the plain monomials x_j^{alpha_i}.
            for (int i = 1; i <= m; ++i)
                for (int j = 1; j <= m; ++j) {
                    Poly expected = Poly::one(amb);
                    for (int t = 0; t < alpha[static_cast<std::size_t>(i - 1)]; ++t)
                        expected = expected * var(amb, j, 1);
                    CHECK(ratfn_eq(spec.entry(i, j), RatFn::from_poly(expected)));
                }
            const Factored det = alternant_det(spec);
            CHECK(factored_eq(det, Factored::from_poly(oracle::to_poly(
                                       amb, oracle::alternant_num(m, alpha)))));
        }
    }
}

TEST_CASE("m-matrix facts") {
    const Ambient one{1, 2};
    const FactoredMatrix m1 = m_matrix(one, 1);
    REQUIRE(m1.size() == 1);
    CHECK(factored_eq(m1[0][0], Factored::constant(one, Rat(1))));

    for (int m = 2; m <= 3; ++m)
        for (int n = 1; n <= 2; ++n) {
            const Ambient amb{m, n};
            for (int r = 1; r <= n; ++r) {
                const Factored det_m = factored_det(m_matrix(amb, r));
                const Factored adelta =
                    alternant_det(alternant_matrix(amb, shifted_parts(Partition(), m), r));
                CHECK(factored_eq(det_m, adelta));
            }
        }

    // At n = 1 the m-matrix holds signed classical e's in the remaining
    // flows: entry (i, j) = (-1)^(m-i) e_{m-i} over {1..m} minus flow j.
    const Ambient amb{3, 1};
    const FactoredMatrix mm = m_matrix(amb, 1);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            Poly expected = oracle::to_poly(amb, oracle::classical_e(3, 3 - i, j));
            if ((3 - i) % 2 == 1)
                expected = expected.neg();
            CHECK(factored_eq(mm[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)],
                              Factored::from_poly(expected)));
        }
}

TEST_CASE("the h-matrix at the staircase is unitriangular") {
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 2; ++n) {
            const Ambient amb{m, n};
            const auto delta = shifted_parts(Partition(), m);
            for (int r = 1; r <= n; ++r) {
                const PolyMatrix h = h_matrix(amb, delta, r);
                for (int i = 0; i < m; ++i) {
                    CHECK(h[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] ==
                          Poly::one(amb));
                    for (int j = 0; j < i; ++j)
                        CHECK(h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                                  .is_zero());
                }
                CHECK(poly_det(h) == Poly::one(amb));
            }
        }
}

TEST_CASE("H times M equals A") {
    // The worked-example parameters.
    CHECK(verify_hma(Ambient{2, 3}, {4, 2}, 2).ok);
    // One flow: both sides are the same single monomial.
    for (int k = 0; k <= 3; ++k)
        CHECK(verify_hma(Ambient{1, 2}, {k}, 1).ok);
    // Classical three-flow case (the h/e convolution identity).
    CHECK(verify_hma(Ambient{3, 1}, {4, 2, 0}, 1).ok);
    // Precondition: alpha must be strictly decreasing.
    CHECK_THROWS_AS(verify_hma(Ambient{2, 2}, {2, 2}, 1), domain_error);
    CHECK_THROWS_AS(verify_hma(Ambient{2, 2}, {1, 2}, 1), domain_error);
}

TEST_CASE("ratio of alternants at the worked example") {
    const Ambient amb{2, 3};
    CHECK(verify_roa(amb, Partition{3, 2}, 2).ok);
    // The ratio itself equals the loop Schur function.
    const Factored num = alternant_det(alternant_matrix(amb, {4, 2}, 2));
    const Factored den = alternant_det(alternant_matrix(amb, {1, 0}, 2));
    CHECK(ratfn_eq(num.to_ratfn() / den.to_ratfn(),
                   RatFn::from_poly(loop_schur(amb, Partition{3, 2}, 1))));
}

TEST_CASE("ratio of alternants trivial and classical cases") {
    for (int m = 2; m <= 3; ++m)
        for (int n = 1; n <= 2; ++n)
            CHECK(verify_roa(Ambient{m, n}, Partition(), 1).ok);
    CHECK(verify_roa(Ambient{3, 1}, Partition{2, 1}, 1).ok);
    CHECK_THROWS_AS(verify_roa(Ambient{2, 2}, Partition{1, 1, 1}, 1), domain_error);
}

TEST_CASE("hma and roa sweep stays green") {
    for (const Ambient amb : {Ambient{2, 2}, Ambient{3, 2}}) {
        for (const auto& lambda : partitions_up_to(3)) {
            if (lambda.length() > amb.m)
                continue;
            for (int r = 1; r <= amb.n; ++r) {
                CHECK(verify_hma(amb, shifted_parts(lambda, amb.m), r).ok);
                CHECK(verify_roa(amb, lambda, r).ok);
            }
        }
    }
}
