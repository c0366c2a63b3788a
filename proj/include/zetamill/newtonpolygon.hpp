#pragma once

#include "zetamill/intpoly.hpp"
#include "zetamill/laurent.hpp"
#include "zetamill/lattice.hpp"
#include "zetamill/polygon.hpp"

#include <optional>
#include <string>
#include <vector>

namespace zetamill {

// q-adic Newton polygon of P with P(0) = 1, q = p^a
ConvexPolygonQ newton_polygon_of(const IntPolynomial& P, std::uint64_t q);

// (slope, horizontal length), slopes increasing
std::vector<std::pair<Rational, Rational>> slope_multiset(const ConvexPolygonQ& NP);

struct AboveVerdict {
    bool above = false;
    bool endpoints_match = false;
    std::optional<PointQ> first_gap;  // abscissa and NP - HP there
};
AboveVerdict lies_above(const ConvexPolygonQ& NP, const ConvexPolygonQ& HP);

struct OrdinaryVerdict {
    bool ordinary = false;
    IntPolynomial P;
    ConvexPolygonQ NP, HP;
    std::string regularity;  // "regular up to j=..."
};
// f over F_q, q = |f.field|; counts N_1.. over F_{q^k}; computed when empty
OrdinaryVerdict is_ordinary(const LaurentPoly& f, std::vector<BigInt> counts = {}, int regularity_bound = 1);

struct GnpSample {
    ConvexPolygonQ gnp;   // lowest sampled polygon
    ConvexPolygonQ hp;
    int requested = 0;
    int regular = 0;      // samples that passed the regularity check
    int attaining = 0;    // samples whose NP equals the reported minimum
    std::vector<ConvexPolygonQ> polygons;
};
struct GnpOptions {
    int trials = 20;
    std::uint64_t seed = 1;
    int sample_degree = 1;       // coefficients drawn from F_{p^sample_degree}
    int regularity_bound = 1;
};
GnpSample gnp_sample(const LatticePolytope& D, std::uint64_t p, const GnpOptions& opt);

// pointwise lower envelope of two polygons of equal width (both lower convex)
ConvexPolygonQ lower_envelope(const ConvexPolygonQ& a, const ConvexPolygonQ& b);

std::string polygon_svg(const ConvexPolygonQ& NP, const ConvexPolygonQ& HP, const std::string& title);

}  // namespace zetamill
