#pragma once

#include "zetamill/laurent.hpp"
#include "zetamill/lattice.hpp"

#include <optional>
#include <vector>

namespace zetamill {

struct RegularityVerdict {
    bool regular = false;  // no witness up to the bound (not a proof)
    int bound = 0;
    std::optional<Face> face;
    std::vector<Point> face_vertices;
    std::vector<FieldElem> point;
    FieldDesc field;
    int faces = 0;
    int structural = 0;  // faces settled by independence of the (1, u) mod p
};

// searches (F_{q^j}^*)^n for j = 1..extension_bound, q = |f.field|
RegularityVerdict is_delta_regular(const LaurentPoly& f, int extension_bound);

// y^(n+1) = (n+1)^(n+1) for the family x1 + ... + xn + 1/(x1...xn) - y
bool cy_parameter_singular(int n, const FieldElem& y, const FieldDesc& F);

}  // namespace zetamill
