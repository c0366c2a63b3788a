#pragma once

#include "zetamill/laurent.hpp"

#include <optional>
#include <string>
#include <vector>

namespace zetamill {

// F_{q^k} for q = |F|
FieldDesc extension(const FieldDesc& F, int k);

// #{x in (E^*)^n : g(x) = 0}; coefficients of g live in a subfield of E
BigInt count_torus(const LaurentPoly& g, const FieldDesc& E);
// N_k = #U_f(F_{q^k})
BigInt count_points(const LaurentPoly& f, int k);
// direct evaluation at every torus point
BigInt count_points_naive(const LaurentPoly& f, int k);

// f in n + 1 symbols, the last one is the parameter y
struct Family {
    LaurentPoly f;
    int n = 0;
    int cy_n = 0;  // n when f is the built-in family below, else 0
};
// x1 + ... + xn + 1/(x1...xn) - y over F
Family cy_family(int n, const FieldDesc& F);
Family make_family(const LaurentPoly& f);

// fibre over y in Ey, with coefficients moved to E (Ey a subfield of E)
LaurentPoly fibre(const Family& fam, const FieldElem& y, const FieldDesc& Ey, const FieldDesc& E);
// torus points of f(., y) over the degree-d extension of Ey
BigInt count_fibre(const Family& fam, const FieldElem& y, const FieldDesc& Ey, int d);
// M_d(f (x) F_{q^k}), k = 1..K; fibres grouped by Frobenius orbits of y
std::vector<BigInt> moment_sequence(const Family& fam, int d, int K);
BigInt moment_naive(const Family& fam, int d, int k);

// Coordinate projections x -> x_j; coordinate j is a torus coordinate unless affine[j].
struct PartialSpec {
    LaurentPoly f;                // hypersurface f = 0 in the coordinates
    std::vector<int> projections; // map i is the projection to coordinate projections[i]
    std::vector<bool> affine;     // per coordinate
};
PartialSpec toric_curve_surface(const FieldDesc& F);
BigInt partial_moment(const PartialSpec& spec, const std::vector<int>& degrees, int k);
BigInt partial_moment_naive(const PartialSpec& spec, const std::vector<int>& degrees, int k);

// g a polynomial in n x-variables followed by n_prime y-variables
BigInt artin_schreier_moment(const LaurentPoly& g, int n, int n_prime, int d, int k);
BigInt artin_schreier_naive(const LaurentPoly& g, int n, int n_prime, int d, int k);

// d copies of the x-block, shared y-block: variables x_{11..1n}, ..., x_{d1..dn}, y_1..y_{n'}
LaurentPoly fibered_sum(const LaurentPoly& g, int n, int n_prime, int d);

struct DeligneVerdict {
    bool p_divides_m = false;
    bool smooth = false;          // no singular point found up to bound
    int bound = 0;
    std::optional<std::vector<FieldElem>> witness;
    FieldDesc witness_field;
};
DeligneVerdict deligne_polynomial_check(const LaurentPoly& g, int m, int extension_bound);

// homogeneous degree-m part
LaurentPoly leading_form(const LaurentPoly& g, int m);

}  // namespace zetamill
