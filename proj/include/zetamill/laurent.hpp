#pragma once

#include "zetamill/ffield.hpp"

#include <map>
#include <string>
#include <vector>

namespace zetamill {

using Exponent = std::vector<std::int64_t>;

struct LatticePolytope;
struct Face;

struct LaurentPoly {
    int n = 0;
    std::map<Exponent, FieldElem> terms;  // no zero coefficients
    FieldDesc field;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const LaurentPoly& o) const {
        return n == o.n && field == o.field && terms == o.terms;
    }
};

// Extra named symbols (e.g. a family parameter "y") take indices n+1, n+2, ...
LaurentPoly parse_laurent(const std::string& text, int n, const FieldDesc& F,
                          const std::vector<std::string>& extra_symbols = {});

// point coordinates live in E, an extension of f.field
FieldElem evaluate(const LaurentPoly& f, const std::vector<FieldElem>& point, const FieldDesc& E);

LatticePolytope newton_polytope(const LaurentPoly& f);
// face of P = newton_polytope(f)
LaurentPoly face_restrict(const LaurentPoly& f, const LatticePolytope& P, const Face& face);
LaurentPoly toric_partial(const LaurentPoly& f, int i);  // 1-based index

LaurentPoly scale(const LaurentPoly& f, const FieldElem& c);
LaurentPoly add_term(LaurentPoly f, const Exponent& u, const FieldElem& c);
std::vector<Exponent> exponents(const LaurentPoly& f);

// base change of coefficients into an extension field
LaurentPoly extend_scalars(const LaurentPoly& f, const FieldDesc& E);

// substitute variable `var` (0-based) by value in E; result has n-1 variables over E
LaurentPoly substitute(const LaurentPoly& f, int var, const FieldElem& value, const FieldDesc& E);

std::string to_string(const LaurentPoly& f, const std::vector<std::string>& names = {});

}  // namespace zetamill
