#include "zetamill/regularity.hpp"

#include <algorithm>

namespace zetamill {

namespace {

using EPoly = std::vector<FieldElem>;  // constant first

void trim(EPoly& a) {
    while (!a.empty() && is_zero(a.back())) a.pop_back();
}

EPoly poly_mod(EPoly a, const EPoly& b, const FieldDesc& E) {
    trim(a);
    const FieldElem inv = invert(b.back(), E);
    while (a.size() >= b.size()) {
        FieldElem f = mul(a.back(), inv, E);
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = sub(a[shift + i], mul(f, b[i], E), E);
        a.pop_back();
        trim(a);
    }
    return a;
}

EPoly poly_gcd(EPoly a, EPoly b, const FieldDesc& E) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        EPoly r = poly_mod(a, b, E);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// rank over F_p of the vectors (1, u) for the given exponents
int rank_mod_p(const std::vector<Exponent>& us, std::uint64_t p) {
    if (us.empty()) return 0;
    const std::size_t cols = us[0].size() + 1;
    std::vector<std::vector<std::uint64_t>> M;
    const auto P = static_cast<std::int64_t>(p);
    for (const auto& u : us) {
        std::vector<std::uint64_t> row{1};
        for (auto e : u) row.push_back(static_cast<std::uint64_t>(((e % P) + P) % P));
        M.push_back(row);
    }
    int rank = 0;
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(M.size()); ++c) {
        std::size_t sel = rank;
        while (sel < M.size() && M[sel][c] == 0) ++sel;
        if (sel == M.size()) continue;
        std::swap(M[rank], M[sel]);
        std::uint64_t inv = powmod(M[rank][c], p - 2, p);
        for (auto& x : M[rank]) x = mulmod(x, inv, p);
        for (std::size_t r = 0; r < M.size(); ++r) {
            if (r == static_cast<std::size_t>(rank) || M[r][c] == 0) continue;
            std::uint64_t f = M[r][c];
            for (std::size_t j = 0; j < cols; ++j) M[r][j] = (M[r][j] + p - mulmod(f, M[rank][j], p)) % p;
        }
        ++rank;
    }
    return rank;
}

// first torus zero common to g and all its toric partials over E, if any
std::optional<std::vector<FieldElem>> search(const LaurentPoly& g, const FieldDesc& E) {
    const int n = g.n;
    const std::uint64_t q = E.size();
    BigInt prefixes = big_pow(BigInt(q - 1), static_cast<unsigned>(n - 1));
    if (prefixes > BigInt(limits().enumeration_cap))
        throw CapExceeded("regularity search over " + to_string(E) + " exceeds the cap");
    std::int64_t lo = INT64_MAX, hi = INT64_MIN;
    for (const auto& t : g.terms) {
        lo = std::min(lo, t.first.back());
        hi = std::max(hi, t.first.back());
    }
    const int len = static_cast<int>(hi - lo + 1);
    const auto P = static_cast<std::int64_t>(g.field.p);
    std::vector<FieldElem> coef;
    std::vector<Exponent> exps;
    for (const auto& [u, a] : g.terms) {
        coef.push_back(embed(a, g.field, E));
        exps.push_back(u);
    }
    const BigInt ord = BigInt(q - 1);
    std::vector<std::uint64_t> idx(std::max(n - 1, 0), 1);
    std::vector<FieldElem> x(n);
    while (true) {
        for (int i = 0; i + 1 < n; ++i) x[i] = from_index(idx[i], E);
        // h_0 = g, h_i = x_i d/dx_i g, as polynomials in the last variable
        std::vector<EPoly> h(n + 1, EPoly(len, zero(E)));
        for (std::size_t t = 0; t < coef.size(); ++t) {
            FieldElem m = coef[t];
            for (int i = 0; i + 1 < n; ++i) {
                std::int64_t e = exps[t][i];
                BigInt r = BigInt(e) % ord;
                if (r < 0) r += ord;
                if (r != 0) m = mul(m, pow(x[i], r, E), E);
            }
            const int s = static_cast<int>(exps[t][n - 1] - lo);
            h[0][s] = add(h[0][s], m, E);
            for (int i = 0; i < n; ++i) {
                std::int64_t c = ((exps[t][i] % P) + P) % P;
                if (c) h[i + 1][s] = add(h[i + 1][s], mul(m, constant(c, E), E), E);
            }
        }
        EPoly G;
        for (auto& hi_ : h) G = poly_gcd(G, hi_, E);
        if (G.empty()) {
            x[n - 1] = one(E);
            return x;
        }
        for (const auto& r : roots_in_field(G, E)) {
            if (is_zero(r)) continue;
            x[n - 1] = r;
            return x;
        }
        int i = n - 2;
        while (i >= 0 && idx[i] == q - 1) idx[i--] = 1;
        if (i < 0) break;
        ++idx[i];
    }
    return std::nullopt;
}

}  // namespace

RegularityVerdict is_delta_regular(const LaurentPoly& f, int extension_bound) {
    if (f.is_zero()) throw UsageError("regularity of the zero polynomial");
    if (extension_bound < 1) throw UsageError("extension bound must be positive");
    RegularityVerdict V;
    V.bound = extension_bound;
    V.field = f.field;
    const LatticePolytope P = newton_polytope(f);
    const auto faces = enumerate_faces(P);
    std::vector<std::pair<Face, LaurentPoly>> pending;
    for (const auto& F : faces) {
        ++V.faces;
        LaurentPoly g = face_restrict(f, P, F);
        if (rank_mod_p(exponents(g), f.field.p) == static_cast<int>(g.terms.size())) {
            ++V.structural;
            continue;
        }
        pending.emplace_back(F, std::move(g));
    }
    for (int j = 1; j <= extension_bound; ++j) {
        FieldDesc E = make_field(f.field.p, f.field.k * j);
        for (const auto& [F, g] : pending) {
            auto w = search(g, E);
            if (!w) continue;
            // re-verify with direct evaluation
            if (!is_zero(evaluate(g, *w, E))) throw MathInconsistency("regularity witness fails the face equation");
            for (int i = 1; i <= g.n; ++i)
                if (!is_zero(evaluate(toric_partial(g, i), *w, E)))
                    throw MathInconsistency("regularity witness fails a toric partial");
            V.regular = false;
            V.face = F;
            for (int v : F.vertices) V.face_vertices.push_back(P.vertices[v]);
            V.point = *w;
            V.field = E;
            return V;
        }
    }
    V.regular = true;
    return V;
}

bool cy_parameter_singular(int n, const FieldElem& y, const FieldDesc& F) {
    FieldElem lhs = pow(y, BigInt(n + 1), F);
    FieldElem rhs = pow(constant(n + 1, F), BigInt(n + 1), F);
    return lhs == rhs;
}

}  // namespace zetamill
