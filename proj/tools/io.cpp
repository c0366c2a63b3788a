#include "io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace zetamill::io {

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw UsageError(path + ": " + e.what());
    }
}

namespace {

template <class T>
T field_of(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key)) throw UsageError(where + ": missing \"" + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw UsageError(where + ": bad \"" + key + "\"");
    }
}

}  // namespace

Problem load_problem(const std::string& path, std::optional<std::uint64_t> q) {
    const json j = read_json(path);
    Problem pr;
    if (!j.contains("field")) throw UsageError(path + ": missing \"field\"");
    auto p = field_of<std::uint64_t>(j["field"], "p", path);
    int k = j["field"].contains("k") ? field_of<int>(j["field"], "k", path) : 1;
    if (!is_prime(p)) throw UsageError(path + ": p is not prime");
    if (q) {
        if (prime_of(*q) != p) throw UsageError("--q is not a power of the characteristic of " + path);
        k = log_base(*q, p);
    }
    pr.field = make_field(p, k);
    pr.nvars = field_of<int>(j, "nvars", path);
    pr.poly = field_of<std::string>(j, "poly", path);
    if (j.contains("family")) pr.parameter = field_of<std::string>(j["family"], "parameter", path);
    if (j.contains("partial")) pr.partial = j["partial"];
    return pr;
}

LaurentPoly problem_poly(const Problem& pr) {
    if (pr.parameter) throw UsageError("this command takes a single polynomial, not a family");
    return parse_laurent(pr.poly, pr.nvars, pr.field);
}

Family problem_family(const Problem& pr) {
    if (!pr.parameter) throw UsageError("problem file has no \"family\" block");
    return make_family(parse_laurent(pr.poly, pr.nvars, pr.field, {*pr.parameter}));
}

LatticePolytope load_polytope(const std::string& path) {
    const json j = read_json(path);
    const int n = field_of<int>(j, "n", path);
    auto pts = field_of<std::vector<Point>>(j, "vertices", path);
    if (pts.empty()) throw UsageError(path + ": no vertices");
    for (const auto& v : pts)
        if (static_cast<int>(v.size()) != n) throw UsageError(path + ": vertex of wrong length");
    return convex_hull(pts);
}

Triangulation load_triangulation(const std::string& path) {
    const json j = read_json(path);
    Triangulation t;
    t.points = field_of<std::vector<Point>>(j, "points", path);
    t.cells = field_of<std::vector<std::vector<int>>>(j, "cells", path);
    for (const auto& h : field_of<std::vector<std::string>>(j, "heights", path)) t.heights.push_back(parse_rational(h));
    return t;
}

json big(const BigInt& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(x);
    return to_string(x);
}

json poly(const IntPolynomial& P) {
    json a = json::array();
    for (const auto& c : P.c) a.push_back(big(c));
    return a;
}

IntPolynomial parse_poly(const std::string& csv) {
    std::vector<BigInt> c;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            c.emplace_back(tok);
        } catch (const std::exception&) {
            throw UsageError("bad coefficient \"" + tok + "\"");
        }
    }
    return IntPolynomial(c);
}

json polygon(const ConvexPolygonQ& P) {
    json v = json::array();
    for (const auto& x : P.vertices) v.push_back({to_string(x.x), to_string(x.y)});
    return {{"vertices", v}};
}

json factors(const FactorList& F) {
    json a = json::array();
    for (const auto& [P, m] : F) a.push_back({{"factor", poly(P)}, {"exponent", m}});
    return a;
}

json elem(const FieldElem& x) { return x.coeffs; }

json field(const FieldDesc& F) { return {{"p", F.p}, {"k", F.k}, {"modulus", F.modulus}}; }

}  // namespace zetamill::io
