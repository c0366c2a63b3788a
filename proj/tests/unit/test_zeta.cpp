#include <doctest.h>

#include "oracles.hpp"

#include "zetamill/counting.hpp"
#include "zetamill/zeta.hpp"

#include <cmath>

using namespace zetamill;

namespace {

IntPolynomial P(std::vector<long> c) {
    std::vector<BigInt> b(c.begin(), c.end());
    return IntPolynomial(b);
}

}  // namespace

TEST_SUITE("zeta") {

TEST_CASE("power sums round trip") {
    const IntPolynomial A = P({1, -20, 343});
    CHECK(from_power_sums(power_sums(A, 4), 2) == A);
    const IntPolynomial B = IntPolynomial::linear(3) * IntPolynomial::linear(-5) * IntPolynomial::linear(7);
    CHECK(from_power_sums(power_sums(B, 3), 3) == B);
    // s_1 = 1, s_2 = 0 forces e_2 = 1/2
    CHECK_THROWS_AS(from_power_sums({BigInt(1), BigInt(0)}, 2), MathInconsistency);
}

TEST_CASE("factor counts follow the sign convention") {
    // Z = 1 / ((1 - T)(1 - qT)) has N_k = 1 + q^k
    const FactorList F = {{IntPolynomial::linear(1), -1}, {IntPolynomial::linear(7), -1}};
    const auto N = factor_counts(F, 3);
    CHECK(N == std::vector<BigInt>{8, 50, 344});
    CHECK(from_factors(F).counts(3) == N);
}

TEST_CASE("recurrence reconstruction matches the Hankel oracle") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 40; ++t) {
        const auto R = oracle::random_rational(rng, 6, 9, 12);
        const auto Z = recurrence_reconstruct(R.counts, 6);
        const auto H = oracle::hankel_roots(R.counts, 9);
        REQUIRE(H);
        CHECK(*H == R.e);
        CHECK(Z.counts(12) == R.counts);
        CHECK(Z.order == static_cast<int>(R.e.size()));
    }
}

TEST_CASE("reconstruction refuses too few counts and detects overflow of the bound") {
    const std::vector<BigInt> N = {8, 50, 344, 2402};
    CHECK_THROWS_AS(recurrence_reconstruct({BigInt(8), BigInt(50)}, 2), UsageError);
    const auto Z = recurrence_reconstruct(N, 2);
    CHECK(Z.tight);
    CHECK(Z.denominator == IntPolynomial::linear(1) * IntPolynomial::linear(7));
    CHECK_THROWS_AS(recurrence_reconstruct(N, 1), MathInconsistency);
    // 2^k / 2 is not a power-sum sequence
    CHECK_THROWS_AS(recurrence_reconstruct({BigInt(1), BigInt(2), BigInt(4), BigInt(8)}, 2), MathInconsistency);
}

TEST_CASE("toric zeta of a line in the torus") {
    const FieldDesc F = make_field(7, 1);
    const LaurentPoly f = parse_laurent("x1 + x2 + 1", 2, F);
    std::vector<BigInt> counts = {count_points(f, 1), count_points(f, 2)};
    const auto D = newton_polytope(f);
    const auto Z = toric_zeta(D, counts, 7);
    CHECK(Z.numerator == pow(IntPolynomial::linear(1), 2));
    CHECK(Z.denominator == IntPolynomial::linear(7));
    CHECK(nontrivial_factor(D, counts, 7) == IntPolynomial::one());
}

TEST_CASE("toric zeta of a smooth cubic fibre") {
    const FieldDesc F = make_field(7, 1);
    const LaurentPoly g = parse_laurent("x1 + x2 + x1^-1*x2^-1 - 1", 2, F);
    std::vector<BigInt> counts;
    for (int k = 1; k <= 4; ++k) counts.push_back(count_points(g, k));
    const auto D = newton_polytope(g);
    const IntPolynomial Pg = nontrivial_factor(D, counts, 7);
    CHECK(Pg.degree() == 2);
    CHECK(Pg.coeff(2) == 7);
    const auto Z = toric_zeta(D, counts, 7);
    CHECK(Z.counts(4) == counts);
    // a wrong extra count is caught
    counts[3] += 1;
    CHECK_THROWS_AS(nontrivial_factor(D, counts, 7), MathInconsistency);
}

TEST_CASE("weil weights") {
    const auto W = weil_weights(P({1, -20, 343}), 7);
    CHECK(W.pure);
    CHECK(W.weights == std::vector<int>{3, 3});
    for (double m : W.moduli) CHECK(std::abs(m - std::pow(7.0, 1.5)) < 1e-9);
    const auto mixed = weil_weights(IntPolynomial::linear(1) * IntPolynomial::linear(49), 7);
    CHECK(mixed.pure);
    CHECK(mixed.weights == std::vector<int>{0, 4});
    CHECK(!weil_weights(IntPolynomial::linear(2), 7).pure);
    CHECK(weil_weights(P({1, -3, 7}), 7).pure);
    CHECK(!weil_weights(P({1, -6, 7}), 7).pure);  // real roots 3 +- sqrt 2
}

TEST_CASE("functional equation sign") {
    const IntPolynomial A = P({1, -20, 343});
    CHECK(functional_equation_sign(A, 7, 3, 2) == 1);
    CHECK(functional_equation_check(A, 7, 3, 2));
    const IntPolynomial B = IntPolynomial::linear(7) * IntPolynomial::linear(-7);  // 1 - 49 T^2
    CHECK(functional_equation_sign(B, 7, 2, 2) == -1);
    CHECK(!functional_equation_sign(P({1, 1, 7}), 7, 3, 2));
}

TEST_CASE("reconstruct with a known part") {
    const FactorList known = {{IntPolynomial::linear(1), 1}, {IntPolynomial::linear(7), -1}};
    const IntPolynomial U = P({1, -20, 343});
    FactorList all = known;
    all.emplace_back(U, 1);
    const auto N = factor_counts(all, 3);
    const IntPolynomial got = reconstruct_with_known(N, factor_counts(known, 3), 2, 1);
    CHECK(got == U);
    FactorList inv = known;
    inv.emplace_back(U, -1);
    CHECK(reconstruct_with_known(factor_counts(inv, 3), factor_counts(known, 3), 2, -1) == U);
}

TEST_CASE("trivial factors of the family") {
    const auto T1 = cy_trivial_factors(2, 1, 7);
    CHECK(T1.A == FactorList{{IntPolynomial::linear(7), 1}});
    for (int d = 1; d <= 4; ++d) {
        const auto T = cy_trivial_factors(2, d, 7);
        CHECK(!T.A.empty());
        CHECK(!T.S.empty());
    }
    CHECK_THROWS_AS(cy_trivial_factors(1, 1, 7), UsageError);
}

TEST_CASE("known factor reproduces low moments") {
    // Z_1^-1 = K_1 with R_1 = R_{-1} = 1: M_1(k) = (q^k - 1)^2
    const auto K = cy2_known_factor(1, 7);
    std::vector<BigInt> N = factor_counts(K, 3);
    for (int k = 1; k <= 3; ++k) CHECK(-N[k - 1] == big_pow(big_pow(BigInt(7), k) - 1, 2));
    CHECK_THROWS_AS(cy2_known_factor(2, 9), UsageError);
}

TEST_CASE("extract R_d from exact moments") {
    const Family fam = cy_family(2, make_field(7, 1));
    const auto M = moment_sequence(fam, 2, 3);
    const auto rd = extract_R_d(2, 7, M, IntPolynomial::one());
    CHECK(rd.R == P({1, -20, 343}));
    CHECK(rd.functional_equation);
    CHECK(rd.fe_sign == 1);
    CHECK(!rd.completed_by_fe);
    CHECK(rd.counts_used == 3);
    auto bad = M;
    bad[2] += 7;
    CHECK_THROWS_AS(extract_R_d(2, 7, bad, IntPolynomial::one()), MathInconsistency);
}

TEST_CASE("slope zeta") {
    const FactorList F = {{IntPolynomial::linear(1), 1}, {IntPolynomial::linear(7), -1}, {P({1, -20, 343}), 1}};
    const SlopeZeta S = slope_zeta(F, 7);
    // 1 - 20T + 343T^2 has slopes 0 and 3
    CHECK(S.factors.at(Rational(0)) == 2);
    CHECK(S.factors.at(Rational(1)) == -1);
    CHECK(S.factors.at(Rational(3)) == 1);
    CHECK((S * S.reciprocal()).is_identity());
    const SlopeZeta ss = slope_zeta({{P({1, 0, 125}), 1}}, 5);
    CHECK(ss.factors.at(Rational(3, 2)) == 2);
}

TEST_CASE("congruence scan") {
    std::map<int, BigInt> M = {{1, 1}, {2, 2}, {3, 5}, {4, 6}, {5, 9}};
    const auto rep = congruence_scan(M, 2, 2, {1, 2, 3});
    // mod 2: d1 = d2 mod 1 fails (1 vs 2); D = 2: 1,5,9 and 2,6 agree mod 2; mod 4 for d = d' mod 4: 1,9 and 2,6
    REQUIRE(rep.smallest_passing);
    CHECK(*rep.smallest_passing == 2);
    CHECK(!rep.candidates[0].violations.empty());
    // a modulus with no pairs never passes
    const auto none = congruence_scan({{1, 0}, {2, 1}}, 2, 1, {5});
    CHECK(!none.smallest_passing);
    CHECK(none.candidates[0].pairs == 0);
}

}
