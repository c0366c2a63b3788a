#include <doctest.h>

#include "zetamill/ffield.hpp"
#include "zetamill/field_tables.hpp"

#include <random>
#include <set>

using namespace zetamill;

TEST_SUITE("ffield") {

TEST_CASE("field axioms on small fields") {
    for (auto [p, k] : {std::pair<std::uint64_t, int>{2, 3}, {3, 2}, {5, 2}, {7, 1}, {2, 5}}) {
        const FieldDesc F = make_field(p, k);
        const std::uint64_t q = F.size();
        std::mt19937_64 rng(p * 100 + k);
        std::uniform_int_distribution<std::uint64_t> any(0, q - 1);
        for (int t = 0; t < 200; ++t) {
            FieldElem a = from_index(any(rng), F), b = from_index(any(rng), F), c = from_index(any(rng), F);
            CHECK(mul(a, add(b, c, F), F) == add(mul(a, b, F), mul(a, c, F), F));
            CHECK(add(a, neg(a, F), F) == zero(F));
            CHECK(sub(add(a, b, F), b, F) == a);
            if (!is_zero(a)) CHECK(mul(a, invert(a, F), F) == one(F));
            CHECK(pow(a, BigInt(q), F) == a);
        }
    }
}

TEST_CASE("index round trip is a bijection in lex order") {
    const FieldDesc F = make_field(3, 3);
    std::set<FieldElem> seen;
    for (std::uint64_t i = 0; i < F.size(); ++i) {
        FieldElem x = from_index(i, F);
        CHECK(index_of(x, F) == i);
        if (i > 0) CHECK(from_index(i - 1, F) < x);
        seen.insert(x);
    }
    CHECK(seen.size() == 27);
}

TEST_CASE("primitive elements number phi(q - 1)") {
    const FieldDesc F = make_field(2, 4);  // phi(15) = 8
    int prim = 0;
    for (std::uint64_t i = 1; i < F.size(); ++i) prim += is_primitive(from_index(i, F), F);
    CHECK(prim == 8);
    const FieldDesc G = make_field(7, 2);  // phi(48) = 16
    prim = 0;
    for (std::uint64_t i = 1; i < G.size(); ++i) prim += is_primitive(from_index(i, G), G);
    CHECK(prim == 16);
}

TEST_CASE("embedding is a ring homomorphism onto the fixed field") {
    const FieldDesc S = make_field(3, 2), E = make_field(3, 4);
    std::set<FieldElem> image;
    for (std::uint64_t i = 0; i < S.size(); ++i) {
        FieldElem a = from_index(i, S);
        FieldElem ea = embed(a, S, E);
        CHECK(in_subfield(ea, E, 3, 2));
        image.insert(ea);
        for (std::uint64_t j = 0; j < S.size(); j += 2) {
            FieldElem b = from_index(j, S);
            CHECK(embed(mul(a, b, S), S, E) == mul(ea, embed(b, S, E), E));
            CHECK(embed(add(a, b, S), S, E) == add(ea, embed(b, S, E), E));
        }
    }
    CHECK(image.size() == 9);
    int fixed = 0;
    for (std::uint64_t i = 0; i < E.size(); ++i) fixed += in_subfield(from_index(i, E), E, 3, 2);
    CHECK(fixed == 9);
}

TEST_CASE("frobenius power agrees with exponentiation") {
    const FieldDesc F = make_field(5, 3);
    for (std::uint64_t i = 0; i < F.size(); i += 7) {
        FieldElem x = from_index(i, F);
        CHECK(frobenius_power(x, F, 5, 1) == pow(x, BigInt(5), F));
        CHECK(frobenius_power(x, F, 5, 2) == pow(x, BigInt(25), F));
        CHECK(frobenius_power(x, F, 5, 3) == x);
    }
}

TEST_CASE("absolute trace is the sum of conjugates") {
    const FieldDesc F = make_field(2, 4);
    int zeros = 0;
    for (std::uint64_t i = 0; i < F.size(); ++i) {
        FieldElem x = from_index(i, F), s = zero(F), c = x;
        for (int j = 0; j < 4; ++j) {
            s = add(s, c, F);
            c = pow(c, BigInt(2), F);
        }
        REQUIRE(s.coeffs[0] == trace_to_prime(x, F));
        zeros += trace_to_prime(x, F) == 0;
    }
    CHECK(zeros == 8);
}

TEST_CASE("roots in field match brute force") {
    const FieldDesc F = make_field(7, 2);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::uint64_t> any(0, F.size() - 1);
    for (int t = 0; t < 30; ++t) {
        std::vector<FieldElem> poly;
        for (int i = 0; i < 5; ++i) poly.push_back(from_index(any(rng), F));
        if (is_zero(poly.back())) poly.back() = one(F);
        std::vector<FieldElem> brute;
        for (std::uint64_t i = 0; i < F.size(); ++i) {
            FieldElem x = from_index(i, F), v = zero(F), pw = one(F);
            for (const auto& c : poly) {
                v = add(v, mul(c, pw, F), F);
                pw = mul(pw, x, F);
            }
            if (is_zero(v)) brute.push_back(x);
        }
        CHECK(roots_in_field(poly, F) == brute);
    }
}

TEST_CASE("log tables agree with polynomial arithmetic") {
    const FieldDesc F = make_field(3, 4);
    FieldTables T(F);
    for (std::uint64_t i = 0; i < F.size(); i += 3)
        for (std::uint64_t j = 1; j < F.size(); j += 11) {
            FieldElem a = from_index(i, F), b = from_index(j, F);
            auto la = T.from_elem(a), lb = T.from_elem(b);
            CHECK(T.to_elem(T.add(la, lb)) == add(a, b, F));
            CHECK(T.to_elem(T.mul(la, lb)) == mul(a, b, F));
            CHECK(T.to_elem(T.sub(la, lb)) == sub(a, b, F));
        }
}

TEST_CASE("sizes past 64 bits are refused") {
    const FieldDesc F = make_field(2, 70);
    CHECK_THROWS_AS(F.size(), CapExceeded);
    CHECK(F.big_size() == big_pow(BigInt(2), 70));
}

}
