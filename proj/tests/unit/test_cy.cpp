#include <doctest.h>

#include "zetamill/cy.hpp"

using namespace zetamill;

TEST_SUITE("cy") {

TEST_CASE("fibre zetas reproduce the moments") {
    for (std::uint64_t p : {5, 7}) {
        const Family fam = cy_family(2, make_field(p, 1));
        const auto rec = fibre_zetas(fam, 1);
        for (int d = 1; d <= 3; ++d) {
            CAPTURE(p);
            CAPTURE(d);
            CHECK(moment_from_fibres(rec, d, 1) == moment_sequence(fam, d, 1)[0]);
        }
    }
}

TEST_CASE("closed points are counted once per orbit") {
    const Family fam = cy_family(2, make_field(2, 1));
    const auto rec = fibre_zetas(fam, 2);
    // 2 degree-one points and (4 - 2) / 2 degree-two points
    int deg1 = 0, deg2 = 0, singular = 0;
    for (const auto& r : rec) {
        (r.degree == 1 ? deg1 : deg2) += 1;
        singular += r.singular;
    }
    CHECK(deg1 == 2);
    CHECK(deg2 == 1);
    // y^3 = 1 has the root 1 over F_2 and a conjugate pair over F_4
    CHECK(singular == 2);
    CHECK(moment_from_fibres(rec, 2, 2) == moment_sequence(fam, 2, 2)[1]);
}

TEST_CASE("R_2 is stable under extra moments") {
    const auto a = cy2_R(2, 5), b = cy2_R(2, 5, 4);
    CHECK(a.R == b.R);
    CHECK(a.R == IntPolynomial(std::vector<BigInt>{1, 0, 125}));
    CHECK(b.counts_used == 4);
    const auto r3 = cy2_R(3, 7);
    CHECK(r3.R.degree() == 4);
    CHECK(r3.weights.pure);
    CHECK(r3.functional_equation);
    CHECK_THROWS_AS(cy2_R(2, 3), UsageError);
}

TEST_CASE("euler table skips bad input") {
    const auto rows = euler_factor_table(2, {3, 4, 7});
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].skipped);
    CHECK(rows[1].skipped);
    CHECK(!rows[2].skipped);
    CHECK(rows[2].factor == IntPolynomial(std::vector<BigInt>{1, -20, 343}));
    const auto one = euler_factor_table(1, {5});
    REQUIRE(one.size() == 1);
    REQUIRE(one[0].zeta);
    CHECK(one[0].moments.size() == 6);
}

}
