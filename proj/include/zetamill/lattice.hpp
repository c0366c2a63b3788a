#pragma once

#include "zetamill/numeric.hpp"
#include "zetamill/polygon.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace zetamill {

using Point = std::vector<std::int64_t>;

// a . x >= b   (or a . x = b for equations)
struct Halfspace {
    std::vector<std::int64_t> a;
    std::int64_t b = 0;
    bool operator==(const Halfspace& o) const { return a == o.a && b == o.b; }
    bool operator<(const Halfspace& o) const { return a < o.a || (a == o.a && b < o.b); }
};

struct LatticePolytope {
    int n = 0;
    int dim = 0;
    std::vector<Point> vertices;        // extreme points, lex sorted
    std::vector<Halfspace> halfspaces;  // facets relative to the affine hull
    std::vector<Halfspace> equations;   // affine hull, empty when dim == n

    bool contains(const Point& x) const;
    bool contains_dilate(const Point& x, std::int64_t k) const;  // x in k*Delta
};

struct Face {
    std::vector<int> halfspaces;  // indices into Delta.halfspaces
    std::vector<int> vertices;    // indices into Delta.vertices
    int dim = 0;
};

struct HodgeData {
    int n = 0;
    std::vector<BigInt> W;  // W(0..n+1)
    std::vector<BigInt> h;  // h(0..n)
    BigInt d;
    ConvexPolygonQ HP;
};

LatticePolytope convex_hull(const std::vector<Point>& points);
std::vector<Face> enumerate_faces(const LatticePolytope& P);  // by dimension, then vertex lists
Face whole_face(const LatticePolytope& P);
bool on_face(const LatticePolytope& P, const Face& F, const Point& x);

BigInt dilate_lattice_count(const LatticePolytope& P, std::int64_t k);
std::vector<Point> dilate_lattice_points(const LatticePolytope& P, std::int64_t k);
BigInt normalized_volume(const LatticePolytope& P);
HodgeData hodge_numbers(const LatticePolytope& P);
ConvexPolygonQ hodge_polygon(const HodgeData& H);

struct DualResult {
    std::vector<std::vector<Rational>> vertices;  // lex sorted
    bool reflexive = false;
};
DualResult polar_dual(const LatticePolytope& P);

struct SemigroupResult {
    std::optional<int> I;      // nullopt = unresolved within bound
    std::optional<int> I_inf;
    int bound = 0;
    int threshold = 0;         // weight threshold used for I_inf
    int holes = 0;             // non-decomposable u found with weight <= bound
};
SemigroupResult semigroup_exponents(const LatticePolytope& P, int search_bound);

struct TriangulationVerdict {
    bool pass = false;
    std::string condition;  // "a", "b", "c" on failure
    std::string witness;
    BigInt volume_sum;
};
TriangulationVerdict verify_convex_triangulation(const LatticePolytope& P, const std::vector<Point>& points,
                                                 const std::vector<std::vector<int>>& cells,
                                                 const std::vector<Rational>& heights);

struct OrdinarityPrediction {
    BigInt lcm;
    bool predicted_ordinary = false;
};
OrdinarityPrediction ordinarity_prediction(const std::vector<LatticePolytope>& simplices, std::uint64_t p);

// |det| of the edge-vector matrix of an n-simplex given by n+1 points in Z^n
BigInt simplex_volume(const std::vector<Point>& pts);

std::string to_string(const Point& x);

}  // namespace zetamill
