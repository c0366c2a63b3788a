#include "zetamill/newtonpolygon.hpp"

#include "zetamill/counting.hpp"
#include "zetamill/regularity.hpp"
#include "zetamill/zeta.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace zetamill {

ConvexPolygonQ newton_polygon_of(const IntPolynomial& P, std::uint64_t q) {
    if (!P.in_one_plus_TZ()) throw UsageError("Newton polygon needs P(0) = 1");
    const std::uint64_t p = prime_of(q);
    if (p == 0) throw UsageError("q must be a prime power");
    const int a = log_base(q, p);
    std::vector<PointQ> pts;
    for (int k = 0; k <= P.degree(); ++k)
        if (P.c[k] != 0) pts.push_back(PointQ{Rational(k), Rational(ord_p(P.c[k], p), a)});
    return lower_hull(pts);
}

std::vector<std::pair<Rational, Rational>> slope_multiset(const ConvexPolygonQ& NP) { return NP.slopes(); }

AboveVerdict lies_above(const ConvexPolygonQ& NP, const ConvexPolygonQ& HP) {
    AboveVerdict V;
    V.endpoints_match = NP.width() == HP.width() && NP.end_height() == HP.end_height();
    const Rational w = std::min(NP.width(), HP.width());
    std::set<Rational> xs;
    for (const auto& v : NP.vertices)
        if (v.x <= w) xs.insert(v.x);
    for (const auto& v : HP.vertices)
        if (v.x <= w) xs.insert(v.x);
    V.above = true;
    for (const auto& x : xs) {
        Rational gap = NP.value_at(x) - HP.value_at(x);
        if (gap < 0) V.above = false;
        if (gap > 0 && !V.first_gap) V.first_gap = PointQ{x, gap};
    }
    return V;
}

OrdinaryVerdict is_ordinary(const LaurentPoly& f, std::vector<BigInt> counts, int regularity_bound) {
    OrdinaryVerdict V;
    auto reg = is_delta_regular(f, regularity_bound);
    if (!reg.regular) throw UsageError("polynomial is not Delta-regular: witness found over " + to_string(reg.field));
    V.regularity = "regular up to extension degree " + std::to_string(regularity_bound);
    const LatticePolytope D = newton_polytope(f);
    if (D.dim != D.n) throw UsageError("Newton polytope is not full-dimensional");
    const auto H = hodge_numbers(D);
    const int r = static_cast<int>(H.d) - 1;
    for (int k = static_cast<int>(counts.size()) + 1; k <= r; ++k) counts.push_back(count_points(f, k));
    const std::uint64_t q = f.field.size();
    V.P = nontrivial_factor(D, counts, q);
    V.NP = newton_polygon_of(V.P, q);
    V.HP = H.HP;
    V.ordinary = V.NP == V.HP;
    return V;
}

ConvexPolygonQ lower_envelope(const ConvexPolygonQ& a, const ConvexPolygonQ& b) {
    std::vector<PointQ> pts = a.vertices;
    pts.insert(pts.end(), b.vertices.begin(), b.vertices.end());
    return lower_hull(pts);
}

GnpSample gnp_sample(const LatticePolytope& D, std::uint64_t p, const GnpOptions& opt) {
    if (opt.trials < 1) throw UsageError("at least one trial required");
    if (D.dim != D.n) throw UsageError("GNP sampling needs a full-dimensional polytope");
    GnpSample G;
    G.requested = opt.trials;
    const FieldDesc S = make_field(p, opt.sample_degree);
    const auto H = hodge_numbers(D);
    G.hp = H.HP;
    const auto points = dilate_lattice_points(D, 1);
    std::set<Point> vertex_set(D.vertices.begin(), D.vertices.end());
    const int r = static_cast<int>(H.d) - 1;
    for (int trial = 0; trial < opt.trials; ++trial) {
        std::seed_seq seq{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32),
                          static_cast<std::uint32_t>(trial)};
        std::mt19937_64 rng(seq);
        std::uniform_int_distribution<std::uint64_t> any(0, S.size() - 1), unit(1, S.size() - 1);
        LaurentPoly f{D.n, {}, S};
        for (const auto& u : points) {
            std::uint64_t idx = vertex_set.count(u) ? unit(rng) : any(rng);
            f = add_term(std::move(f), u, from_index(idx, S));
        }
        if (!is_delta_regular(f, opt.regularity_bound).regular) continue;
        std::vector<BigInt> counts;
        for (int k = 1; k <= r; ++k) counts.push_back(count_points(f, k));
        IntPolynomial P;
        try {
            P = nontrivial_factor(D, counts, S.size());
        } catch (const MathInconsistency&) {
            continue;  // irregular over a larger extension
        }
        ++G.regular;
        auto NP = newton_polygon_of(P, S.size());
        G.polygons.push_back(NP);
        G.gnp = G.regular == 1 ? NP : lower_envelope(G.gnp, NP);
    }
    if (G.regular == 0) throw UsageError("every sampled polynomial was irregular");
    for (const auto& NP : G.polygons) G.attaining += NP == G.gnp;
    return G;
}

std::string polygon_svg(const ConvexPolygonQ& NP, const ConvexPolygonQ& HP, const std::string& title) {
    const double W = 480, Hh = 360, m = 40;
    double xmax = 1, ymax = 1;
    for (const auto* P : {&NP, &HP})
        for (const auto& v : P->vertices) {
            xmax = std::max(xmax, static_cast<double>(v.x));
            ymax = std::max(ymax, static_cast<double>(v.y));
        }
    auto X = [&](const Rational& x) { return m + static_cast<double>(x) / xmax * (W - 2 * m); };
    auto Y = [&](const Rational& y) { return Hh - m - static_cast<double>(y) / ymax * (Hh - 2 * m); };
    auto path = [&](const ConvexPolygonQ& P) {
        std::ostringstream os;
        for (std::size_t i = 0; i < P.vertices.size(); ++i)
            os << (i ? " L " : "M ") << X(P.vertices[i].x) << ' ' << Y(P.vertices[i].y);
        return os.str();
    };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << Hh << "\">\n";
    os << "<text x=\"" << m << "\" y=\"20\" font-family=\"monospace\" font-size=\"12\">" << title << "</text>\n";
    os << "<line x1=\"" << m << "\" y1=\"" << Hh - m << "\" x2=\"" << W - m << "\" y2=\"" << Hh - m
       << "\" stroke=\"#888\"/>\n";
    os << "<line x1=\"" << m << "\" y1=\"" << m << "\" x2=\"" << m << "\" y2=\"" << Hh - m << "\" stroke=\"#888\"/>\n";
    // gap shading between the polygons
    if (!NP.vertices.empty() && !HP.vertices.empty()) {
        std::ostringstream gap;
        gap << path(NP);
        for (auto it = HP.vertices.rbegin(); it != HP.vertices.rend(); ++it) gap << " L " << X(it->x) << ' ' << Y(it->y);
        os << "<path d=\"" << gap.str() << " Z\" fill=\"#f4c27a\" fill-opacity=\"0.5\" stroke=\"none\"/>\n";
    }
    os << "<path d=\"" << path(HP) << "\" fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"2\"/>\n";
    os << "<path d=\"" << path(NP) << "\" fill=\"none\" stroke=\"#b3261e\" stroke-width=\"2\" stroke-dasharray=\"6 3\"/>\n";
    for (const auto& v : NP.vertices)
        os << "<circle cx=\"" << X(v.x) << "\" cy=\"" << Y(v.y) << "\" r=\"3\" fill=\"#b3261e\"/>\n";
    os << "<text x=\"" << W - 120 << "\" y=\"40\" font-family=\"monospace\" font-size=\"11\" fill=\"#1f5fa8\">HP</text>\n";
    os << "<text x=\"" << W - 120 << "\" y=\"55\" font-family=\"monospace\" font-size=\"11\" fill=\"#b3261e\">NP</text>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace zetamill
