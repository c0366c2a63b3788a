#include <doctest.h>

#include "zetamill/counting.hpp"
#include "zetamill/regularity.hpp"

using namespace zetamill;

TEST_SUITE("regularity") {

TEST_CASE("singular cubic fibre has a verified witness") {
    const FieldDesc F = make_field(7, 1);
    const LaurentPoly f = parse_laurent("x1 + x2 + x1^-1*x2^-1 - 3", 2, F);
    const auto V = is_delta_regular(f, 1);
    REQUIRE(!V.regular);
    REQUIRE(V.point.size() == 2);
    CHECK(is_zero(evaluate(f, V.point, V.field)));
    for (int i = 1; i <= 2; ++i) CHECK(is_zero(evaluate(toric_partial(f, i), V.point, V.field)));
    CHECK(V.face_vertices.size() == 3);
    CHECK(V.point[0] == one(F));
    CHECK(V.point[1] == one(F));
}

TEST_CASE("search agrees with the parameter locus") {
    for (auto [p, k] : {std::pair<std::uint64_t, int>{7, 1}, {5, 2}, {2, 2}, {13, 1}}) {
        const FieldDesc F = make_field(p, k);
        const Family fam = cy_family(2, F);
        for (std::uint64_t i = 0; i < F.size(); ++i) {
            const FieldElem y = from_index(i, F);
            const bool sing = cy_parameter_singular(2, y, F);
            CAPTURE(p);
            CAPTURE(i);
            CHECK(sing == !is_delta_regular(fibre(fam, y, F, F), 1).regular);
        }
    }
    const FieldDesc G = make_field(5, 1);
    const Family fam3 = cy_family(3, G);
    for (std::uint64_t i = 0; i < 5; ++i) {
        const FieldElem y = from_index(i, G);
        CHECK(cy_parameter_singular(3, y, G) == !is_delta_regular(fibre(fam3, y, G, G), 1).regular);
    }
}

TEST_CASE("witnesses over an extension need a larger bound") {
    // (x^2 - 2)^2 over F_5 has double roots in F_25 only
    const FieldDesc F = make_field(5, 1);
    const LaurentPoly f = parse_laurent("x1^4 - 4*x1^2 + 4", 1, F);
    CHECK(is_delta_regular(f, 1).regular);
    const auto V = is_delta_regular(f, 2);
    CHECK(!V.regular);
    CHECK(V.field.k == 2);
}

TEST_CASE("faces at infinity are checked") {
    // (x1 + x2)^2 + 1 has no torus points over F_3, but its top edge is a square
    const FieldDesc F = make_field(3, 1);
    const LaurentPoly f = parse_laurent("x1^2 + 2*x1*x2 + x2^2 + 1", 2, F);
    const auto V = is_delta_regular(f, 1);
    CHECK(!V.regular);
    REQUIRE(V.face);
    CHECK(V.face->dim == 1);
}

TEST_CASE("independent exponents settle faces structurally") {
    const FieldDesc F = make_field(7, 1);
    const auto V = is_delta_regular(parse_laurent("1 + x1 + x2 + x3", 3, F), 1);
    CHECK(V.regular);
    CHECK(V.structural == V.faces);
}

}
