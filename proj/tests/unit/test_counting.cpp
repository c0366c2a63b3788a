#include <doctest.h>

#include "oracles.hpp"

#include "zetamill/counting.hpp"

#include <random>
#include <set>

using namespace zetamill;

namespace {

LaurentPoly random_on(const std::vector<Point>& pts, const FieldDesc& F, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> unit(1, F.size() - 1);
    LaurentPoly f{static_cast<int>(pts[0].size()), {}, F};
    for (const auto& u : pts) f = add_term(std::move(f), u, from_index(unit(rng), F));
    return f;
}

}  // namespace

TEST_SUITE("counting") {

TEST_CASE("kernel counts equal direct evaluation on the battery") {
    std::mt19937_64 rng(99);
    for (const auto& b : oracle::battery()) {
        const int n = static_cast<int>(b.points[0].size());
        for (std::uint64_t p : {2, 3, 5}) {
            const FieldDesc F = make_field(p, 1);
            const LaurentPoly f = random_on(b.points, F, rng);
            const int kmax = n >= 4 ? 1 : (n == 3 ? 2 : 3);
            for (int k = 1; k <= kmax; ++k) {
                CAPTURE(b.name);
                CAPTURE(p);
                CAPTURE(k);
                CHECK(count_points(f, k) == count_points_naive(f, k));
            }
        }
    }
}

TEST_CASE("thread count does not change results") {
    const FieldDesc F = make_field(7, 1);
    const LaurentPoly f = parse_laurent("x1 + 3*x2 + x1^-1*x2^-1 + 2*x3 + x1*x2*x3 - 1", 3, F);
    limits().threads = 1;
    const BigInt one_thread = count_points(f, 2);
    limits().threads = 3;
    const BigInt three = count_points(f, 2);
    limits().threads = 1;
    CHECK(one_thread == three);
}

TEST_CASE("linear torus count has a closed form") {
    // #{a1 x1 + ... + an xn = c, xi != 0} = ((q-1)^n - (-1)^n) / q for c != 0
    const FieldDesc F = make_field(5, 1);
    const LaurentPoly f = parse_laurent("x1 + 2*x2 + 3*x3 + 1", 3, F);
    for (int k = 1; k <= 2; ++k) {
        const BigInt q = big_pow(BigInt(5), k);
        const BigInt want = (big_pow(q - 1, 3) + 1) / q;
        CHECK(count_points(f, k) == want);
    }
}

TEST_CASE("moments agree with direct enumeration") {
    for (std::uint64_t p : {5, 7}) {
        const Family fam = cy_family(2, make_field(p, 1));
        const auto M = moment_sequence(fam, 2, 2);
        CHECK(M[0] == moment_naive(fam, 2, 1));
        CHECK(moment_sequence(fam, 1, 2)[1] == moment_naive(fam, 1, 2));
        CHECK(moment_sequence(fam, 1, 1)[0] == BigInt((p - 1) * (p - 1)));
    }
    const FieldDesc F = make_field(3, 1);
    const Family gen = make_family(parse_laurent("x1^2 + x1*x2 + y*x2^-1 + 1", 2, F, {"y"}));
    for (int d = 1; d <= 2; ++d) CHECK(moment_sequence(gen, d, 2)[1] == moment_naive(gen, d, 2));
}

TEST_CASE("partial moments agree with direct enumeration") {
    for (std::uint64_t p : {3, 5}) {
        const PartialSpec S = toric_curve_surface(make_field(p, 1));
        for (std::vector<int> deg : {std::vector<int>{1, 1, 1}, {2, 1, 1}, {2, 2, 1}, {1, 1, 2}, {1, 2, 3}}) {
            CAPTURE(p);
            CHECK(partial_moment(S, deg, 1) == partial_moment_naive(S, deg, 1));
        }
        CHECK(partial_moment(S, {1, 1, 1}, 2) == partial_moment_naive(S, {1, 1, 1}, 2));
    }
}

TEST_CASE("partial moment with all degrees equal is a point count") {
    const FieldDesc F = make_field(5, 1);
    const PartialSpec S = toric_curve_surface(F);
    // x3 is determined by x1, x2 in the torus
    for (int k = 1; k <= 2; ++k) CHECK(partial_moment(S, {1, 1, 1}, k) == big_pow(big_pow(BigInt(5), k) - 1, 2));
}

TEST_CASE("trace-condition moments agree with direct enumeration") {
    const FieldDesc F = make_field(3, 1);
    const LaurentPoly g = parse_laurent("x1^2 + x1*x2 + 2*x2^2 + x2", 2, F);
    for (int d = 1; d <= 2; ++d)
        for (int k = 1; k <= 2; ++k) CHECK(artin_schreier_moment(g, 1, 1, d, k) == artin_schreier_naive(g, 1, 1, d, k));
    const FieldDesc G = make_field(5, 1);
    const LaurentPoly h = parse_laurent("x1^3 + 2*x2^2 + x1*x2", 2, G);
    CHECK(artin_schreier_moment(h, 1, 1, 2, 1) == artin_schreier_naive(h, 1, 1, 2, 1));
}

TEST_CASE("fibered sums copy the x block") {
    const FieldDesc F = make_field(5, 1);
    const LaurentPoly g = parse_laurent("x1^2 + x1*x2 + x2", 2, F);
    const LaurentPoly s = fibered_sum(g, 1, 1, 3);
    CHECK(s.n == 4);
    CHECK(s == parse_laurent("x1^2 + x1*x4 + x2^2 + x2*x4 + x3^2 + x3*x4 + 3*x4", 4, F));
}

TEST_CASE("leading forms and the Deligne hypotheses") {
    const FieldDesc F = make_field(7, 1);
    const LaurentPoly g = parse_laurent("x1^3 + x2^3 + x1 + 5", 2, F);
    CHECK(leading_form(g, 3) == parse_laurent("x1^3 + x2^3", 2, F));
    const auto ok = deligne_polynomial_check(g, 3, 2);
    CHECK(ok.smooth);
    CHECK(!ok.p_divides_m);
    const auto bad = deligne_polynomial_check(parse_laurent("x1^3 + x1^2*x2", 2, F), 3, 2);
    CHECK(!bad.smooth);
    CHECK(bad.witness);
    const auto pm = deligne_polynomial_check(parse_laurent("x1^7 + x2^7", 2, F), 7, 1);
    CHECK(pm.p_divides_m);
}

TEST_CASE("enumeration caps are enforced") {
    const FieldDesc F = make_field(7, 1);
    const LaurentPoly f = parse_laurent("x1 + x2 + x3 + x4 + 1", 4, F);
    const auto saved = limits().enumeration_cap;
    limits().enumeration_cap = 1000;
    CHECK_THROWS_AS(count_points(f, 2), CapExceeded);
    limits().enumeration_cap = saved;
}

}
