#include <doctest.h>

#include "oracles.hpp"

#include "zetamill/lattice.hpp"

using namespace zetamill;

TEST_SUITE("lattice") {

TEST_CASE("cube hull and face lattice") {
    const LatticePolytope C = convex_hull(
        {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}, {0, 0, 0}});
    CHECK(C.vertices.size() == 8);
    CHECK(C.halfspaces.size() == 6);
    const auto faces = enumerate_faces(C);
    std::map<int, int> by_dim;
    for (const auto& f : faces) ++by_dim[f.dim];
    CHECK(by_dim[0] == 8);
    CHECK(by_dim[1] == 12);
    CHECK(by_dim[2] == 6);
    CHECK(by_dim[3] == 1);
}

TEST_CASE("interior points are pruned and lower dimensional hulls keep equations") {
    const LatticePolytope P = convex_hull({{0, 0}, {2, 0}, {0, 2}, {1, 1}, {1, 0}, {0, 1}});
    CHECK(P.vertices.size() == 3);
    const LatticePolytope S = convex_hull({{0, 0, 1}, {1, 1, 1}, {2, 2, 1}});
    CHECK(S.dim == 1);
    CHECK(S.vertices.size() == 2);
    CHECK(!S.equations.empty());
    CHECK(S.contains({1, 1, 1}));
    CHECK(!S.contains({1, 1, 0}));
}

TEST_CASE("dilate counts match a box scan") {
    for (const auto& b : oracle::battery()) {
        const LatticePolytope P = convex_hull(b.points);
        if (P.n > 3) continue;
        for (int k = 0; k <= 3; ++k) {
            CAPTURE(b.name);
            CAPTURE(k);
            const auto pts = dilate_lattice_points(P, k);
            CHECK(BigInt(pts.size()) == dilate_lattice_count(P, k));
            for (const auto& x : pts) CHECK(P.contains_dilate(x, k));
        }
    }
}

TEST_CASE("normalized volume matches the Ehrhart leading term") {
    for (const auto& b : oracle::battery()) {
        CAPTURE(b.name);
        const LatticePolytope P = convex_hull(b.points);
        CHECK(normalized_volume(P) == oracle::ehrhart_volume(P));
    }
}

TEST_CASE("hodge numbers of standard shapes") {
    auto h = [](std::vector<Point> pts) {
        std::vector<long> v;
        for (const auto& x : hodge_numbers(convex_hull(pts)).h) v.push_back(static_cast<long>(x));
        return v;
    };
    CHECK(h({{1, 0}, {0, 1}, {-1, -1}}) == std::vector<long>{1, 1, 1});
    CHECK(h({{0, 0}, {1, 0}, {0, 1}, {1, 1}}) == std::vector<long>{1, 1, 0});
    CHECK(h({{0}, {2}}) == std::vector<long>{1, 1});
    CHECK(h({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}) == std::vector<long>{1, 1, 1, 1});
    // hexagon: d = 6, one interior point
    CHECK(h({{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}) == std::vector<long>{1, 4, 1});
}

TEST_CASE("hodge polygon ends at (d - 1, sum of (k-1) h(k))") {
    const auto H = hodge_numbers(convex_hull({{0, 0}, {3, 0}, {0, 2}}));
    BigInt sum = 0, area = 0;
    for (std::size_t k = 0; k < H.h.size(); ++k) {
        sum += H.h[k];
        if (k > 0) area += BigInt(k - 1) * H.h[k];
    }
    CHECK(sum == H.d);
    CHECK(H.HP.width() == Rational(H.d - H.h[0]));
    CHECK(H.HP.end_height() == Rational(area));
    CHECK(hodge_polygon(H) == H.HP);
}

TEST_CASE("polar duals and reflexivity") {
    const auto tri = polar_dual(convex_hull({{1, 0}, {0, 1}, {-1, -1}}));
    CHECK(tri.reflexive);
    CHECK(tri.vertices.size() == 3);
    CHECK(polar_dual(convex_hull({{1, 0}, {0, 1}, {-1, 0}, {0, -1}})).reflexive);
    CHECK(polar_dual(convex_hull({{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}})).reflexive);
    const auto big = polar_dual(convex_hull({{2, 0}, {0, 2}, {-2, -2}}));
    CHECK(!big.reflexive);
    CHECK_THROWS_AS(polar_dual(convex_hull({{0, 0}, {1, 0}, {0, 1}})), UsageError);
}

TEST_CASE("semigroup exponents") {
    const auto simplex = semigroup_exponents(convex_hull({{0, 0}, {1, 0}, {0, 1}}), 4);
    CHECK(simplex.holes == 0);
    REQUIRE(simplex.I);
    CHECK(*simplex.I == 1);
    CHECK(simplex.threshold == 2);
    const auto reeve = semigroup_exponents(convex_hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 2}}), 4);
    CHECK(reeve.holes > 0);
    REQUIRE(reeve.I);
    CHECK(*reeve.I > 1);
}

TEST_CASE("convex triangulation certificates") {
    const LatticePolytope sq = convex_hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    const std::vector<Point> pts = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    const std::vector<std::vector<int>> cells = {{0, 1, 3}, {0, 2, 3}};
    auto ok = verify_convex_triangulation(sq, pts, cells, {0, 0, 0, 1});
    // heights (0,0,0,1) fold along the other diagonal
    CHECK(!ok.pass);
    auto good = verify_convex_triangulation(sq, pts, cells, {0, 1, 1, 0});
    CHECK(good.pass);
    CHECK(good.volume_sum == 2);
    auto flat = verify_convex_triangulation(sq, pts, cells, {0, 0, 0, 0});
    CHECK(!flat.pass);
    auto missing = verify_convex_triangulation(sq, pts, {{0, 1, 3}}, {0, 1, 1, 0});
    CHECK(!missing.pass);
    CHECK(!missing.witness.empty());
}

TEST_CASE("ordinarity prediction from simplex volumes") {
    const auto s3 = convex_hull({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, 1, 1}});
    CHECK(normalized_volume(s3) == 3);
    CHECK(ordinarity_prediction({s3}, 7).predicted_ordinary);
    CHECK(!ordinarity_prediction({s3}, 5).predicted_ordinary);
    CHECK(ordinarity_prediction({s3}, 13).lcm == 3);
}

TEST_CASE("simplex volume is the absolute determinant") {
    CHECK(simplex_volume({{0, 0}, {3, 0}, {0, 2}}) == 6);
    CHECK(simplex_volume({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 3}}) == 3);
    CHECK(simplex_volume({{0, 0}, {1, 1}, {2, 2}}) == 0);
}

}
