#pragma once

#include "zetamill/counting.hpp"
#include "zetamill/lattice.hpp"
#include "zetamill/zeta.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace zetamill::io {

using json = nlohmann::ordered_json;

json read_json(const std::string& path);

struct Problem {
    FieldDesc field;
    int nvars = 0;
    std::string poly;
    std::optional<std::string> parameter;
    json partial;  // {"projections": [...], "affine": [...]} when present
};
// q, when given, replaces the field of the file (same characteristic)
Problem load_problem(const std::string& path, std::optional<std::uint64_t> q = std::nullopt);
LaurentPoly problem_poly(const Problem& pr);
Family problem_family(const Problem& pr);

LatticePolytope load_polytope(const std::string& path);

struct Triangulation {
    std::vector<Point> points;
    std::vector<std::vector<int>> cells;
    std::vector<Rational> heights;
};
Triangulation load_triangulation(const std::string& path);

// exact integers: JSON numbers within int64, decimal strings beyond
json big(const BigInt& x);
json poly(const IntPolynomial& P);
IntPolynomial parse_poly(const std::string& csv);
json polygon(const ConvexPolygonQ& P);
json factors(const FactorList& F);
json elem(const FieldElem& x);
json field(const FieldDesc& F);

}  // namespace zetamill::io
