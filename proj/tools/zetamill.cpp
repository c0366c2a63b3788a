// zetamill: point counts, zeta functions and Newton polygons of toric hypersurfaces

#include "io.hpp"

#include "zetamill/cy.hpp"
#include "zetamill/newtonpolygon.hpp"
#include "zetamill/regularity.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <sstream>

using namespace zetamill;
using io::json;

namespace {

struct Global {
    std::uint64_t seed = 1;
    int threads = 1;
    std::string out, svg, format = "json";
    bool force = false;
};

std::ostream* sink = &std::cout;

void emit(const json& j) { *sink << j.dump() << '\n'; }

void write_svg(const std::string& path, const std::string& body) {
    if (path.empty()) return;
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write " + path);
    f << body;
}

// refuse work above the enumeration cap unless forced
void precheck(const BigInt& cost, const Global& g, const std::string& what) {
    if (g.force) return;
    if (cost > BigInt(limits().enumeration_cap))
        throw CapExceeded(what + ": estimated " + to_string(cost) + " evaluations exceed the cap " +
                          std::to_string(limits().enumeration_cap) + " (use --force)");
}

BigInt count_cost(int n, std::uint64_t q, int k) {
    return big_pow(big_pow(BigInt(q), static_cast<unsigned>(k)) - 1, static_cast<unsigned>(std::max(n - 1, 0)));
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto dash = tok.find('-', 1);
        try {
            if (dash != std::string::npos) {
                int a = std::stoi(tok.substr(0, dash)), b = std::stoi(tok.substr(dash + 1));
                for (int i = a; i <= b; ++i) v.push_back(i);
            } else {
                v.push_back(std::stoi(tok));
            }
        } catch (const std::exception&) {
            throw UsageError("bad integer list \"" + s + "\"");
        }
    }
    return v;
}

// "1,-7:-1;1,-20,343:1"
FactorList parse_factor_list(const std::string& s) {
    FactorList F;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ';')) {
        auto colon = tok.rfind(':');
        if (colon == std::string::npos) throw UsageError("factor \"" + tok + "\" lacks an exponent");
        F.emplace_back(io::parse_poly(tok.substr(0, colon)), std::stoi(tok.substr(colon + 1)));
    }
    return F;
}

void emit_count(const std::string& op, std::uint64_t q, int k, std::optional<int> d, const BigInt& v,
                const Global& g) {
    if (g.format == "csv") {
        *sink << op << ',' << q << ',' << k << ',' << (d ? std::to_string(*d) : "") << ',' << to_string(v) << '\n';
        return;
    }
    emit({{"op", op}, {"q", q}, {"k", k}, {"d", d ? json(*d) : json(nullptr)}, {"value", io::big(v)}});
}

json zeta_json(const ZetaFactorization& Z) {
    return {{"numerator", io::poly(Z.numerator)},
            {"denominator", io::poly(Z.denominator)},
            {"factors", io::factors(Z.factors)},
            {"provenance", Z.provenance},
            {"order", Z.order},
            {"tight", Z.tight}};
}

json weil_json(const WeilVerdict& W) {
    json rel = json::array();
    for (double e : W.rel_error) rel.push_back(e);
    return {{"pure", W.pure}, {"weights", W.weights}, {"rel_error", rel}, {"detail", W.detail}};
}

std::uint64_t field_size(const LaurentPoly& f) { return f.field.size(); }

// zeta of U_f from N_1..N_kmax
std::pair<ZetaFactorization, std::string> compute_zeta(const LaurentPoly& f, int kmax, std::optional<int> max_order,
                                                        const Global& g) {
    precheck(count_cost(f.n, field_size(f), kmax), g, "count");
    std::vector<BigInt> counts;
    for (int k = 1; k <= kmax; ++k) counts.push_back(count_points(f, k));
    const LatticePolytope D = newton_polytope(f);
    if (!max_order && D.dim == D.n && is_delta_regular(f, 1).regular &&
        BigInt(kmax) >= normalized_volume(D) - 1)
        return {toric_zeta(D, counts, field_size(f)), "toric"};
    const int B = max_order ? *max_order : kmax / 2;
    return {recurrence_reconstruct(counts, B), "recurrence"};
}

Family family_from(const std::string& poly_path, int cy, std::optional<std::uint64_t> q) {
    if (cy > 0) {
        if (!q) throw UsageError("--cy needs --q");
        const std::uint64_t p = prime_of(*q);
        if (p == 0) throw UsageError("--q must be a prime power");
        return cy_family(cy, make_field(p, log_base(*q, p)));
    }
    if (poly_path.empty()) throw UsageError("give --poly or --cy");
    return io::problem_family(io::load_problem(poly_path, q));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zetamill: point counts, zeta functions and Newton polygons over finite fields"};
    app.require_subcommand(1);
    app.fallthrough();
    Global g;
    app.add_option("--seed", g.seed, "seed for all sampling");
    app.add_option("--threads", g.threads, "worker threads for the counting kernels")->check(CLI::PositiveNumber);
    app.add_option("--out", g.out, "write JSON lines here instead of stdout");
    app.add_option("--svg", g.svg, "SVG polygon overlay path (np, ordinary, gnp)");
    app.add_option("--format", g.format, "json or csv (count, moment)")->check(CLI::IsMember({"json", "csv"}));
    app.add_flag("--force", g.force, "run past the cost cap");

    std::string poly_path, polytope_path, tri_path, factor_str, factors_str, degrees_str, primes_str = "5,7,11,13",
                                                                                        dcands_str = "1-60";
    std::optional<std::uint64_t> q;
    std::optional<int> max_order;
    int kmax = 0, d = 1, k = 1, dilate = 0, bound = 1, trials = 20, sample_degree = 1, cy = 0, dmax = 9, counts = 0;
    std::uint64_t p = 0, l = 2;
    bool naive = false, with_zeta = false, example = false;

    auto* c_count = app.add_subcommand("count", "N_k = #U_f(F_{q^k}) for k = 1..kmax");
    c_count->add_option("--poly", poly_path, "problem file")->required();
    c_count->add_option("--q", q, "field size (overrides the file)");
    c_count->add_option("--kmax", kmax, "largest extension degree")->required();
    c_count->add_flag("--naive", naive, "cross-check by direct evaluation");

    auto* c_zeta = app.add_subcommand("zeta", "Z(U_f, T) from N_1..N_kmax");
    c_zeta->add_option("--poly", poly_path, "problem file")->required();
    c_zeta->add_option("--q", q, "field size");
    c_zeta->add_option("--kmax", kmax, "number of counts")->required();
    c_zeta->add_option("--max-order", max_order, "force recurrence reconstruction with this order bound");

    auto* c_moment = app.add_subcommand("moment", "moments M_d(f (x) F_{q^k}) of a family");
    c_moment->add_option("--poly", poly_path, "family problem file");
    c_moment->add_option("--cy", cy, "use the built-in family x1+..+xn+1/(x1..xn)-y in dimension n");
    c_moment->add_option("--q", q, "field size");
    c_moment->add_option("--d", d, "moment degree")->required();
    c_moment->add_option("--kmax", kmax, "k = 1..kmax")->required();
    c_moment->add_flag("--zeta", with_zeta, "also reconstruct Z_d");
    c_moment->add_option("--max-order", max_order, "order bound for --zeta (default kmax/2)");

    auto* c_partial = app.add_subcommand("partial", "partial moment with per-map extension degrees");
    c_partial->add_option("--poly", poly_path, "problem file with a \"partial\" block");
    c_partial->add_flag("--example", example, "the surface x1 + x2 + 1/(x1 x2) - x3 with x3 affine");
    c_partial->add_option("--q", q, "field size");
    c_partial->add_option("--degrees", degrees_str, "comma separated degrees, one per map")->required();
    c_partial->add_option("--k", k, "base extension degree")->required();
    c_partial->add_flag("--naive", naive, "cross-check by direct evaluation");

    auto* c_hodge = app.add_subcommand("hodge", "W, h, d and HP of a polytope");
    c_hodge->add_option("--polytope", polytope_path, "polytope file")->required();

    auto* c_volume = app.add_subcommand("volume", "normalized volume and dilate lattice counts");
    c_volume->add_option("--polytope", polytope_path, "polytope file")->required();
    c_volume->add_option("--dilate", dilate, "report #(k Delta cap Z^n) for k = 0..dilate");

    auto* c_dual = app.add_subcommand("dual", "polar dual and reflexivity");
    c_dual->add_option("--polytope", polytope_path, "polytope file")->required();

    auto* c_np = app.add_subcommand("np", "q-adic Newton polygon of an integer polynomial");
    c_np->add_option("--factor", factor_str, "ascending coefficients, e.g. 1,-20,343")->required();
    c_np->add_option("--q", q, "q")->required();
    c_np->add_option("--polytope", polytope_path, "compare against HP of this polytope");

    auto* c_ord = app.add_subcommand("ordinary", "ordinarity verdict for a Delta-regular f");
    c_ord->add_option("--poly", poly_path, "problem file")->required();
    c_ord->add_option("--q", q, "field size");
    c_ord->add_option("--regularity-bound", bound, "extension degrees searched for singular points");

    auto* c_gnp = app.add_subcommand("gnp", "sampled generic Newton polygon");
    c_gnp->add_option("--polytope", polytope_path, "polytope file")->required();
    c_gnp->add_option("--p", p, "characteristic")->required();
    c_gnp->add_option("--trials", trials, "samples drawn");
    c_gnp->add_option("--sample-degree", sample_degree, "coefficients drawn from F_{p^j}");
    c_gnp->add_option("--regularity-bound", bound, "extension degrees searched for singular points");

    auto* c_reg = app.add_subcommand("regular", "Delta-regularity search");
    c_reg->add_option("--poly", poly_path, "problem file")->required();
    c_reg->add_option("--q", q, "field size");
    c_reg->add_option("--bound", bound, "largest extension degree searched");

    auto* c_tri = app.add_subcommand("triangulate-verify", "check a convex triangulation certificate");
    c_tri->add_option("--polytope", polytope_path, "polytope file")->required();
    c_tri->add_option("--triangulation", tri_path, "triangulation file")->required();

    auto* c_euler = app.add_subcommand("euler-table", "R_d factors of the built-in n = 2 family");
    c_euler->add_option("--d", d, "moment degree")->required();
    c_euler->add_option("--primes", primes_str, "comma separated primes or ranges");
    c_euler->add_option("--counts", counts, "moments used per prime (0: minimal)");

    auto* c_cong = app.add_subcommand("congruence", "scan moduli D for M_d1 = M_d2 mod l^k");
    c_cong->add_option("--poly", poly_path, "family problem file");
    c_cong->add_option("--cy", cy, "use the built-in family in dimension n");
    c_cong->add_option("--q", q, "field size");
    c_cong->add_option("--l", l, "prime l");
    c_cong->add_option("--kmax", kmax, "largest power of l")->required();
    c_cong->add_option("--dmax", dmax, "moments d = 1..dmax");
    c_cong->add_option("--candidates", dcands_str, "candidate moduli, e.g. 1-60");

    auto* c_slope = app.add_subcommand("slope", "slope zeta function");
    c_slope->add_option("--poly", poly_path, "problem file");
    c_slope->add_option("--factors", factors_str, "factor list like 1,-7:-1;1,-20,343:1");
    c_slope->add_option("--q", q, "field size");
    c_slope->add_option("--kmax", kmax, "counts used with --poly");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    std::unique_ptr<std::ofstream> file;
    try {
        limits().threads = g.threads;
        if (g.force) limits().enumeration_cap = std::numeric_limits<std::uint64_t>::max();
        if (!g.out.empty()) {
            file = std::make_unique<std::ofstream>(g.out);
            if (!*file) throw UsageError("cannot write " + g.out);
            sink = file.get();
        }

        if (*c_count) {
            const LaurentPoly f = io::problem_poly(io::load_problem(poly_path, q));
            precheck(count_cost(f.n, field_size(f), kmax), g, "count");
            for (int j = 1; j <= kmax; ++j) {
                BigInt N = count_points(f, j);
                if (naive && N != count_points_naive(f, j))
                    throw MathInconsistency("kernel and direct counts differ at k = " + std::to_string(j));
                emit_count("count", field_size(f), j, std::nullopt, N, g);
            }
        } else if (*c_zeta) {
            const LaurentPoly f = io::problem_poly(io::load_problem(poly_path, q));
            auto [Z, method] = compute_zeta(f, kmax, max_order, g);
            json j = {{"op", "zeta"}, {"q", field_size(f)}, {"method", method}, {"counts", json::array()}};
            for (const auto& N : Z.counts(kmax)) j["counts"].push_back(io::big(N));
            j.update(zeta_json(Z));
            emit(j);
        } else if (*c_moment) {
            const Family fam = family_from(poly_path, cy, q);
            const std::uint64_t qq = fam.f.field.size();
            BigInt cost = 0;
            for (int j = 1; j <= kmax; ++j) cost += big_pow(BigInt(qq), j) * count_cost(fam.n, qq, d * j);
            precheck(cost, g, "moment");
            auto M = moment_sequence(fam, d, kmax);
            for (int j = 1; j <= kmax; ++j) emit_count("moment", qq, j, d, M[j - 1], g);
            if (with_zeta) {
                auto Z = moment_zeta(M, max_order ? *max_order : kmax / 2);
                json j = {{"op", "moment-zeta"}, {"q", qq}, {"d", d}};
                j.update(zeta_json(Z));
                emit(j);
            }
        } else if (*c_partial) {
            PartialSpec spec;
            if (example) {
                if (!q) throw UsageError("--example needs --q");
                const std::uint64_t pp = prime_of(*q);
                if (pp == 0) throw UsageError("--q must be a prime power");
                spec = toric_curve_surface(make_field(pp, log_base(*q, pp)));
            } else {
                if (poly_path.empty()) throw UsageError("give --poly or --example");
                auto pr = io::load_problem(poly_path, q);
                spec.f = io::problem_poly(pr);
                if (pr.partial.is_null()) throw UsageError("problem file has no \"partial\" block");
                spec.projections = pr.partial.value("projections", std::vector<int>{});
                spec.affine.assign(spec.f.n, false);
                for (int a : pr.partial.value("affine", std::vector<int>{})) {
                    if (a < 0 || a >= spec.f.n) throw UsageError("affine coordinate out of range");
                    spec.affine[a] = true;
                }
            }
            const auto degs = parse_ints(degrees_str);
            BigInt M = partial_moment(spec, degs, k);
            if (naive && M != partial_moment_naive(spec, degs, k))
                throw MathInconsistency("kernel and direct partial moments differ");
            emit({{"op", "partial"}, {"q", spec.f.field.size()}, {"k", k}, {"d", degs}, {"value", io::big(M)}});
        } else if (*c_hodge) {
            const auto H = hodge_numbers(io::load_polytope(polytope_path));
            json W = json::array(), h = json::array();
            for (const auto& x : H.W) W.push_back(io::big(x));
            for (const auto& x : H.h) h.push_back(io::big(x));
            emit({{"op", "hodge"}, {"n", H.n}, {"W", W}, {"h", h}, {"d", io::big(H.d)}, {"HP", io::polygon(H.HP)}});
        } else if (*c_volume) {
            const auto P = io::load_polytope(polytope_path);
            json L = json::array();
            for (int j = 0; j <= dilate; ++j) L.push_back(io::big(dilate_lattice_count(P, j)));
            emit({{"op", "volume"}, {"dim", P.dim}, {"normalized_volume", io::big(normalized_volume(P))},
                  {"dilate_counts", L}});
        } else if (*c_dual) {
            const auto D = polar_dual(io::load_polytope(polytope_path));
            json v = json::array();
            for (const auto& x : D.vertices) {
                json row = json::array();
                for (const auto& c : x) row.push_back(to_string(c));
                v.push_back(row);
            }
            emit({{"op", "dual"}, {"vertices", v}, {"reflexive", D.reflexive}});
        } else if (*c_np) {
            const IntPolynomial P = io::parse_poly(factor_str);
            const auto NP = newton_polygon_of(P, *q);
            json slopes = json::array();
            for (const auto& [s, len] : slope_multiset(NP)) slopes.push_back({to_string(s), to_string(len)});
            json j = {{"op", "np"}, {"q", *q}, {"polygon", io::polygon(NP)}, {"slopes", slopes}};
            ConvexPolygonQ HP;
            if (!polytope_path.empty()) {
                HP = hodge_numbers(io::load_polytope(polytope_path)).HP;
                const auto A = lies_above(NP, HP);
                j["hodge"] = io::polygon(HP);
                j["above"] = A.above;
                j["endpoints_match"] = A.endpoints_match;
            }
            emit(j);
            write_svg(g.svg, polygon_svg(NP, HP, "NP over HP"));
        } else if (*c_ord) {
            const LaurentPoly f = io::problem_poly(io::load_problem(poly_path, q));
            const int r = static_cast<int>(normalized_volume(newton_polytope(f))) - 1;
            precheck(count_cost(f.n, field_size(f), r), g, "ordinary");
            const auto V = is_ordinary(f, {}, bound);
            const auto A = lies_above(V.NP, V.HP);
            emit({{"op", "ordinary"},
                  {"q", field_size(f)},
                  {"ordinary", V.ordinary},
                  {"P", io::poly(V.P)},
                  {"NP", io::polygon(V.NP)},
                  {"HP", io::polygon(V.HP)},
                  {"above", A.above},
                  {"endpoints_match", A.endpoints_match},
                  {"regularity", V.regularity}});
            write_svg(g.svg, polygon_svg(V.NP, V.HP, "NP and HP"));
        } else if (*c_gnp) {
            GnpOptions opt;
            opt.trials = trials;
            opt.seed = g.seed;
            opt.sample_degree = sample_degree;
            opt.regularity_bound = bound;
            const auto S = gnp_sample(io::load_polytope(polytope_path), p, opt);
            emit({{"op", "gnp"},
                  {"p", p},
                  {"seed", g.seed},
                  {"trials", S.requested},
                  {"regular", S.regular},
                  {"attaining", S.attaining},
                  {"gnp", io::polygon(S.gnp)},
                  {"hp", io::polygon(S.hp)},
                  {"ordinary", S.gnp == S.hp}});
            write_svg(g.svg, polygon_svg(S.gnp, S.hp, "GNP and HP, p = " + std::to_string(p)));
        } else if (*c_reg) {
            const LaurentPoly f = io::problem_poly(io::load_problem(poly_path, q));
            const auto V = is_delta_regular(f, bound);
            json j = {{"op", "regular"},
                      {"regular", V.regular},
                      {"bound", V.bound},
                      {"faces", V.faces},
                      {"structural", V.structural}};
            if (!V.regular) {
                j["face"] = V.face_vertices;
                json w = json::array();
                for (const auto& x : V.point) w.push_back(io::elem(x));
                j["witness"] = w;
                j["field"] = io::field(V.field);
            }
            emit(j);
        } else if (*c_tri) {
            const auto P = io::load_polytope(polytope_path);
            const auto T = io::load_triangulation(tri_path);
            const auto V = verify_convex_triangulation(P, T.points, T.cells, T.heights);
            emit({{"op", "triangulate-verify"},
                  {"pass", V.pass},
                  {"condition", V.condition},
                  {"witness", V.witness},
                  {"volume_sum", io::big(V.volume_sum)}});
        } else if (*c_euler) {
            std::vector<std::uint64_t> primes;
            for (int x : parse_ints(primes_str)) {
                if (x < 2) throw UsageError("primes must be at least 2");
                primes.push_back(static_cast<std::uint64_t>(x));
            }
            for (const auto& row : euler_factor_table(d, primes, counts)) {
                json v = {{"skipped", row.skipped}};
                if (row.skipped) v["reason"] = row.reason;
                if (row.rd) {
                    v["weil"] = weil_json(row.rd->weights);
                    v["functional_equation"] = row.rd->functional_equation;
                    v["fe_sign"] = row.rd->fe_sign;
                    v["counts_used"] = row.rd->counts_used;
                    v["completed_by_fe"] = row.rd->completed_by_fe;
                }
                if (row.zeta) {
                    v["zeta"] = zeta_json(*row.zeta);
                    json m = json::array();
                    for (const auto& x : row.moments) m.push_back(io::big(x));
                    v["moments"] = m;
                }
                emit({{"p", row.p}, {"d", row.d}, {"factor", io::poly(row.factor)}, {"verdicts", v}});
            }
        } else if (*c_cong) {
            const Family fam = family_from(poly_path, cy, q);
            const auto records = fibre_zetas(fam, 1);
            std::map<int, BigInt> M;
            for (int j = 1; j <= dmax; ++j) M[j] = moment_from_fibres(records, j, 1);
            const auto rep = congruence_scan(M, l, kmax, parse_ints(dcands_str));
            for (const auto& c : rep.candidates) {
                json v = json::array();
                for (const auto& x : c.violations) v.push_back({{"k", x.k}, {"d1", x.d1}, {"d2", x.d2}});
                emit({{"op", "congruence"}, {"D", c.D}, {"pairs", c.pairs}, {"violations", v}});
            }
            json mom = json::object();
            for (const auto& [dd, x] : M) mom[std::to_string(dd)] = io::big(x);
            emit({{"op", "congruence-summary"},
                  {"l", l},
                  {"kmax", kmax},
                  {"moments", mom},
                  {"smallest_passing", rep.smallest_passing ? json(*rep.smallest_passing) : json(nullptr)}});
        } else if (*c_slope) {
            FactorList F;
            std::uint64_t qq = 0;
            if (!factors_str.empty()) {
                if (!q) throw UsageError("--factors needs --q");
                F = parse_factor_list(factors_str);
                qq = *q;
            } else {
                if (poly_path.empty()) throw UsageError("give --poly or --factors");
                const LaurentPoly f = io::problem_poly(io::load_problem(poly_path, q));
                F = compute_zeta(f, kmax, std::nullopt, g).first.factors;
                qq = field_size(f);
            }
            const auto S = slope_zeta(F, qq);
            json a = json::array();
            for (const auto& [s, e] : S.factors) a.push_back({{"slope", to_string(s)}, {"exponent", e}});
            emit({{"op", "slope"}, {"q", qq}, {"factors", a}, {"text", to_string(S)}});
        }
    } catch (const CapExceeded& e) {
        std::cerr << "zetamill: " << e.what() << '\n';
        return 3;
    } catch (const MathInconsistency& e) {
        std::cerr << "zetamill: inconsistency: " << e.what() << '\n';
        return 4;
    } catch (const UsageError& e) {
        std::cerr << "zetamill: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "zetamill: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
