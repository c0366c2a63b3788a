#include "zetamill/counting.hpp"

#include "zetamill/field_tables.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

namespace zetamill {

namespace {

std::uint64_t checked_count(std::uint64_t base, int exp) {
    BigInt c = big_pow(BigInt(base), static_cast<unsigned>(std::max(exp, 0)));
    if (c > BigInt(limits().enumeration_cap))
        throw CapExceeded("enumeration of " + c.str() + " tuples exceeds the cap of " +
                          std::to_string(limits().enumeration_cap));
    return static_cast<std::uint64_t>(c);
}

// polynomial in the last variable with coefficients given by sums of monomials in the others
struct Compiled {
    int n = 0;    // enumerated coordinates (all but the last)
    int len = 0;  // length of the coefficient vector in the last variable
    std::vector<std::vector<std::int64_t>> u;  // exponents of enumerated coordinates per term
    std::vector<int> slot;                      // power of the last variable, shifted
    std::vector<std::uint32_t> coef;            // log of coefficient
};

Compiled compile(const LaurentPoly& g, const FieldTables& T) {
    Compiled c;
    c.n = g.n - 1;
    std::int64_t lo = INT64_MAX, hi = INT64_MIN;
    for (const auto& t : g.terms) {
        lo = std::min(lo, t.first.back());
        hi = std::max(hi, t.first.back());
    }
    c.len = static_cast<int>(hi - lo + 1);
    for (const auto& [u, a] : g.terms) {
        c.u.emplace_back(u.begin(), u.end() - 1);
        c.slot.push_back(static_cast<int>(u.back() - lo));
        c.coef.push_back(T.from_elem(embed(a, g.field, T.field())));
    }
    return c;
}

std::uint64_t run_parallel(std::uint64_t chunks, const std::function<std::uint64_t(std::uint64_t)>& work) {
    const int threads = std::max(1, limits().threads);
    if (threads == 1 || chunks < 2) {
        std::uint64_t s = 0;
        for (std::uint64_t i = 0; i < chunks; ++i) s += work(i);
        return s;
    }
    std::atomic<std::uint64_t> next{0}, total{0};
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::mutex err_mu;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            try {
                std::uint64_t local = 0;
                for (std::uint64_t i; (i = next++) < chunks;) local += work(i);
                total += local;
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mu);
                err = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
    return total;
}

FieldElem eval_poly(const LaurentPoly& g, const std::vector<FieldElem>& x, const FieldDesc& E) {
    FieldElem s = zero(E);
    for (const auto& [u, a] : g.terms) {
        FieldElem t = embed(a, g.field, E);
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (u[i] < 0) throw UsageError("negative exponent on an affine coordinate");
            if (u[i] > 0) t = mul(t, pow(x[i], BigInt(u[i]), E), E);
        }
        s = add(s, t, E);
    }
    return s;
}

// all elements (or units) of the subfield of E with the given degree, embedded into E
std::vector<FieldElem> subfield_elements(const FieldDesc& E, int deg, bool with_zero) {
    FieldDesc S = make_field(E.p, deg);
    std::vector<FieldElem> out;
    for (std::uint64_t i = with_zero ? 0 : 1; i < S.size(); ++i) out.push_back(embed(from_index(i, S), S, E));
    return out;
}

}  // namespace

FieldDesc extension(const FieldDesc& F, int k) {
    if (k < 1) throw UsageError("extension degree must be positive");
    return make_field(F.p, F.k * k);
}

BigInt count_torus(const LaurentPoly& g, const FieldDesc& E) {
    if (g.n == 0) return g.is_zero() ? 1 : 0;
    auto Tp = tables_for(E);
    const FieldTables& T = *Tp;
    const std::uint32_t ord = T.order();
    if (g.is_zero()) return big_pow(BigInt(ord), static_cast<unsigned>(g.n));
    const Compiled c = compile(g, T);
    checked_count(ord, c.n);
    const std::size_t nt = c.coef.size();
    const std::uint32_t Z = FieldTables::kZero;

    if (c.n == 0) {
        std::vector<std::uint32_t> h(c.len, Z);
        for (std::size_t t = 0; t < nt; ++t) h[c.slot[t]] = T.add(h[c.slot[t]], c.coef[t]);
        RootCounter rc(T);
        return rc.nonzero_roots(h.data(), c.len);
    }
    // suffix[t][i] = sum_{j >= i} u_j (mod ord), applied when coordinates i.. all step by one
    std::vector<std::vector<std::uint32_t>> suffix(nt, std::vector<std::uint32_t>(c.n + 1, 0));
    for (std::size_t t = 0; t < nt; ++t)
        for (int i = c.n - 1; i >= 1; --i) suffix[t][i] = T.reduce(static_cast<std::int64_t>(suffix[t][i + 1]) + c.u[t][i]);
    const std::uint64_t inner = checked_count(ord, c.n - 1);

    auto work = [&](std::uint64_t t0) -> std::uint64_t {
        RootCounter rc(T);
        std::vector<std::uint32_t> logs(nt), h(c.len);
        for (std::size_t t = 0; t < nt; ++t)
            logs[t] = T.mul(c.coef[t], T.reduce(c.u[t][0] * static_cast<std::int64_t>(t0)));
        std::vector<std::uint32_t> ctr(c.n, 0);
        std::uint64_t total = 0;
        for (std::uint64_t step = 0; step < inner; ++step) {
            std::fill(h.begin(), h.end(), Z);
            for (std::size_t t = 0; t < nt; ++t) h[c.slot[t]] = T.add(h[c.slot[t]], logs[t]);
            total += rc.nonzero_roots(h.data(), c.len);
            // odometer over coordinates 1..n-1, last one fastest
            int i = c.n - 1;
            while (i >= 1 && ctr[i] == ord - 1) ctr[i--] = 0;
            if (i < 1) break;
            ++ctr[i];
            for (std::size_t t = 0; t < nt; ++t) logs[t] = T.mul(logs[t], suffix[t][i]);
        }
        return total;
    };
    return BigInt(run_parallel(ord, work));
}

BigInt count_points(const LaurentPoly& f, int k) {
    if (f.is_zero()) throw UsageError("point count of the zero polynomial");
    return count_torus(f, extension(f.field, k));
}

BigInt count_points_naive(const LaurentPoly& f, int k) {
    FieldDesc E = extension(f.field, k);
    const std::uint64_t q = E.size();
    checked_count(q - 1, f.n);
    std::vector<std::uint64_t> idx(f.n, 1);
    std::vector<FieldElem> x(f.n);
    std::uint64_t total = 0;
    if (f.n == 0) return f.is_zero() ? 1 : 0;
    while (true) {
        for (int i = 0; i < f.n; ++i) x[i] = from_index(idx[i], E);
        if (is_zero(evaluate(f, x, E))) ++total;
        int i = f.n - 1;
        while (i >= 0 && idx[i] == q - 1) idx[i--] = 1;
        if (i < 0) break;
        ++idx[i];
    }
    return total;
}

Family cy_family(int n, const FieldDesc& F) {
    if (n < 1) throw UsageError("family dimension must be positive");
    Family fam;
    fam.n = n;
    fam.cy_n = n;
    fam.f = LaurentPoly{n + 1, {}, F};
    for (int i = 0; i < n; ++i) {
        Exponent u(n + 1, 0);
        u[i] = 1;
        fam.f = add_term(std::move(fam.f), u, one(F));
    }
    Exponent inv(n + 1, -1);
    inv[n] = 0;
    fam.f = add_term(std::move(fam.f), inv, one(F));
    Exponent y(n + 1, 0);
    y[n] = 1;
    fam.f = add_term(std::move(fam.f), y, neg(one(F), F));
    return fam;
}

Family make_family(const LaurentPoly& f) {
    if (f.n < 2) throw UsageError("a family needs at least one fibre variable and the parameter");
    bool has_y = false;
    for (const auto& t : f.terms) {
        if (t.first.back() < 0) throw UsageError("negative power of the parameter");
        has_y |= t.first.back() != 0;
    }
    if (!has_y) throw UsageError("the parameter does not appear in the family");
    return Family{f, f.n - 1, 0};
}

LaurentPoly fibre(const Family& fam, const FieldElem& y, const FieldDesc& Ey, const FieldDesc& E) {
    return substitute(fam.f, fam.n, embed(y, Ey, E), E);
}

BigInt count_fibre(const Family& fam, const FieldElem& y, const FieldDesc& Ey, int d) {
    FieldDesc E = make_field(Ey.p, Ey.k * d);
    return count_torus(fibre(fam, y, Ey, E), E);
}

std::vector<BigInt> moment_sequence(const Family& fam, int d, int K) {
    const FieldDesc& F = fam.f.field;
    std::vector<BigInt> out;
    for (int k = 1; k <= K; ++k) {
        FieldDesc Ey = extension(F, k);
        FieldDesc E = extension(F, d * k);
        const std::uint64_t Qy = Ey.size();
        checked_count(Qy, 1);
        std::vector<char> seen(Qy, 0);
        BigInt total = 0;
        const BigInt qbase = BigInt(F.size());
        for (std::uint64_t i = 0; i < Qy; ++i) {
            if (seen[i]) continue;
            FieldElem y = from_index(i, Ey);
            // Frobenius orbit of y over F
            int orbit = 0;
            FieldElem z = y;
            do {
                seen[index_of(z, Ey)] = 1;
                ++orbit;
                z = pow(z, qbase, Ey);
            } while (z != y);
            total += orbit * count_torus(fibre(fam, y, Ey, E), E);
        }
        out.push_back(total);
    }
    return out;
}

BigInt moment_naive(const Family& fam, int d, int k) {
    FieldDesc Ey = extension(fam.f.field, k);
    FieldDesc E = extension(fam.f.field, d * k);
    BigInt total = 0;
    for (std::uint64_t i = 0; i < Ey.size(); ++i) {
        FieldElem y = from_index(i, Ey);
        LaurentPoly g = fibre(fam, y, Ey, E);
        if (g.is_zero()) {
            total += big_pow(BigInt(E.size() - 1), static_cast<unsigned>(fam.n));
            continue;
        }
        LaurentPoly gE = g;
        // count over E itself: g already has coefficients in E
        total += count_points_naive(gE, 1);
    }
    return total;
}

PartialSpec toric_curve_surface(const FieldDesc& F) {
    PartialSpec s;
    s.f = parse_laurent("x1 + x2 + x1^-1*x2^-1 - x3", 3, F);
    s.projections = {0, 1, 2};
    s.affine = {false, false, true};
    return s;
}

namespace {

struct PartialPlan {
    std::vector<int> deg;  // per coordinate, in units of the base field degree
    int lcm_deg = 1;
    int last = 0;
};

PartialPlan plan_partial(const PartialSpec& spec, const std::vector<int>& degrees, int k) {
    const int N = spec.f.n;
    if (static_cast<int>(spec.affine.size()) != N) throw UsageError("affine flags must cover every coordinate");
    if (degrees.size() != spec.projections.size()) throw UsageError("one degree per map required");
    PartialPlan P;
    P.deg.assign(N, 0);
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        int j = spec.projections[i];
        if (j < 0 || j >= N) throw UsageError("projection index out of range");
        if (degrees[i] < 1) throw UsageError("degrees must be positive");
        P.deg[j] = P.deg[j] == 0 ? degrees[i] * k : std::gcd(P.deg[j], degrees[i] * k);
    }
    for (int j = 0; j < N; ++j) {
        if (P.deg[j] == 0)
            throw UsageError("coordinate x" + std::to_string(j + 1) + " is not covered by a projection map");
        P.lcm_deg = std::lcm(P.lcm_deg, P.deg[j]);
    }
    for (const auto& t : spec.f.terms)
        for (int j = 0; j < N; ++j)
            if (spec.affine[j] && t.first[j] < 0) throw UsageError("negative exponent on an affine coordinate");
    P.last = static_cast<int>(std::max_element(P.deg.begin(), P.deg.end()) - P.deg.begin());
    return P;
}

}  // namespace

BigInt partial_moment(const PartialSpec& spec, const std::vector<int>& degrees, int k) {
    const PartialPlan plan = plan_partial(spec, degrees, k);
    const FieldDesc& F = spec.f.field;
    const int N = spec.f.n;
    FieldDesc E = make_field(F.p, F.k * plan.lcm_deg);
    auto Tp = tables_for(E);
    const FieldTables& T = *Tp;
    const std::uint32_t Z = FieldTables::kZero;

    // enumeration order: every coordinate but the last one, subfield elements as logs in E
    std::vector<int> free;
    for (int j = 0; j < N; ++j)
        if (j != plan.last) free.push_back(j);
    std::vector<std::vector<std::uint32_t>> values;
    BigInt tuples = 1;
    for (int j : free) {
        std::vector<std::uint32_t> v;
        for (const auto& x : subfield_elements(E, F.k * plan.deg[j], spec.affine[j])) v.push_back(T.from_elem(x));
        tuples *= v.size();
        values.push_back(std::move(v));
    }
    if (tuples > BigInt(limits().enumeration_cap)) throw CapExceeded("partial moment enumeration exceeds the cap");

    std::int64_t lo = INT64_MAX, hi = INT64_MIN;
    for (const auto& t : spec.f.terms) {
        lo = std::min(lo, t.first[plan.last]);
        hi = std::max(hi, t.first[plan.last]);
    }
    const int len = static_cast<int>(hi - lo + 1);
    std::vector<std::uint32_t> coef;
    std::vector<Exponent> exps;
    for (const auto& [u, a] : spec.f.terms) {
        coef.push_back(T.from_elem(embed(a, F, E)));
        exps.push_back(u);
    }
    const std::uint64_t sub_q = ipow(F.size(), static_cast<unsigned>(plan.deg[plan.last]));
    const bool last_affine = spec.affine[plan.last];

    RootCounter rc(T);
    std::vector<std::size_t> idx(free.size(), 0);
    std::vector<std::uint32_t> h(len);
    std::uint64_t total = 0;
    while (true) {
        std::fill(h.begin(), h.end(), Z);
        for (std::size_t t = 0; t < coef.size(); ++t) {
            std::uint32_t v = coef[t];
            for (std::size_t m = 0; m < free.size() && v != Z; ++m) {
                std::int64_t e = exps[t][free[m]];
                if (e == 0) continue;
                std::uint32_t x = values[m][idx[m]];
                v = x == Z ? Z : T.mul(v, T.reduce(static_cast<std::int64_t>(x) * e));
            }
            if (v != Z) {
                int s = static_cast<int>(exps[t][plan.last] - lo);
                h[s] = T.add(h[s], v);
            }
        }
        total += rc.nonzero_roots(h.data(), len, sub_q);
        if (last_affine && h[0] == Z) ++total;  // root x_last = 0 (lo = 0 for affine coordinates)
        std::size_t m = free.size();
        while (m > 0 && idx[m - 1] + 1 == values[m - 1].size()) idx[--m] = 0;
        if (m == 0) break;
        ++idx[m - 1];
    }
    return BigInt(total);
}

BigInt partial_moment_naive(const PartialSpec& spec, const std::vector<int>& degrees, int k) {
    const PartialPlan plan = plan_partial(spec, degrees, k);
    const FieldDesc& F = spec.f.field;
    const int N = spec.f.n;
    FieldDesc E = make_field(F.p, F.k * plan.lcm_deg);
    std::vector<std::vector<FieldElem>> values;
    BigInt tuples = 1;
    for (int j = 0; j < N; ++j) {
        values.push_back(subfield_elements(E, F.k * plan.deg[j], spec.affine[j]));
        tuples *= values.back().size();
    }
    if (tuples > BigInt(limits().enumeration_cap)) throw CapExceeded("partial moment enumeration exceeds the cap");
    std::vector<std::size_t> idx(N, 0);
    std::vector<FieldElem> x(N);
    std::uint64_t total = 0;
    while (true) {
        for (int j = 0; j < N; ++j) x[j] = values[j][idx[j]];
        FieldElem s = zero(E);
        for (const auto& [u, a] : spec.f.terms) {
            FieldElem t = embed(a, F, E);
            for (int j = 0; j < N; ++j) {
                if (u[j] > 0) t = mul(t, pow(x[j], BigInt(u[j]), E), E);
                if (u[j] < 0) t = mul(t, pow(invert(x[j], E), BigInt(-u[j]), E), E);
            }
            s = add(s, t, E);
        }
        if (is_zero(s)) ++total;
        int m = N;
        while (m > 0 && idx[m - 1] + 1 == values[m - 1].size()) idx[--m] = 0;
        if (m == 0) break;
        ++idx[m - 1];
    }
    return BigInt(total);
}

BigInt artin_schreier_moment(const LaurentPoly& g, int n, int n_prime, int d, int k) {
    if (g.n != n + n_prime) throw UsageError("variable count does not match the blocks");
    for (const auto& t : g.terms)
        for (auto e : t.first)
            if (e < 0) throw UsageError("Artin-Schreier data must be a polynomial");
    const FieldDesc& F = g.field;
    FieldDesc E = extension(F, d * k);
    FieldDesc Ey = extension(F, k);
    auto Tp = tables_for(E);
    const FieldTables& T = *Tp;
    const std::uint32_t Z = FieldTables::kZero;
    std::vector<std::vector<std::uint32_t>> values;
    BigInt tuples = 1;
    for (int i = 0; i < n + n_prime; ++i) {
        std::vector<std::uint32_t> v;
        const FieldDesc& S = i < n ? E : Ey;
        for (std::uint64_t j = 0; j < S.size(); ++j) v.push_back(T.from_elem(embed(from_index(j, S), S, E)));
        tuples *= v.size();
        values.push_back(std::move(v));
    }
    if (tuples > BigInt(limits().enumeration_cap)) throw CapExceeded("Artin-Schreier enumeration exceeds the cap");
    std::vector<std::uint32_t> coef;
    std::vector<Exponent> exps;
    for (const auto& [u, a] : g.terms) {
        coef.push_back(T.from_elem(embed(a, F, E)));
        exps.push_back(u);
    }
    const int N = n + n_prime;
    std::vector<std::size_t> idx(N, 0);
    std::uint64_t zeros = 0;
    while (true) {
        std::uint32_t s = Z;
        for (std::size_t t = 0; t < coef.size(); ++t) {
            std::uint32_t v = coef[t];
            for (int m = 0; m < N && v != Z; ++m) {
                if (exps[t][m] == 0) continue;
                std::uint32_t x = values[m][idx[m]];
                v = x == Z ? Z : T.mul(v, T.reduce(static_cast<std::int64_t>(x) * exps[t][m]));
            }
            s = T.add(s, v);
        }
        if (T.trace(s) == 0) ++zeros;
        int m = N;
        while (m > 0 && idx[m - 1] + 1 == values[m - 1].size()) idx[--m] = 0;
        if (m == 0) break;
        ++idx[m - 1];
    }
    return BigInt(zeros) * F.p;
}

BigInt artin_schreier_naive(const LaurentPoly& g, int n, int n_prime, int d, int k) {
    if (g.n != n + n_prime) throw UsageError("variable count does not match the blocks");
    const FieldDesc& F = g.field;
    FieldDesc E = extension(F, d * k);
    FieldDesc Ey = extension(F, k);
    const int N = n + n_prime;
    BigInt tuples = BigInt(E.size());
    for (int i = 0; i < N; ++i) tuples *= (i < n ? E : Ey).size();
    if (tuples > BigInt(limits().enumeration_cap)) throw CapExceeded("Artin-Schreier enumeration exceeds the cap");
    // x0^p - x0 for every x0, as a histogram over E
    std::map<FieldElem, std::uint64_t> as_values;
    for (std::uint64_t i = 0; i < E.size(); ++i) {
        FieldElem x0 = from_index(i, E);
        ++as_values[sub(pow(x0, BigInt(F.p), E), x0, E)];
    }
    std::vector<std::uint64_t> idx(N, 0);
    std::vector<FieldElem> x(N);
    std::uint64_t total = 0;
    while (true) {
        for (int i = 0; i < N; ++i) x[i] = i < n ? from_index(idx[i], E) : embed(from_index(idx[i], Ey), Ey, E);
        auto it = as_values.find(eval_poly(g, x, E));
        if (it != as_values.end()) total += it->second;
        int m = N;
        while (m > 0 && idx[m - 1] + 1 == (m - 1 < n ? E : Ey).size()) idx[--m] = 0;
        if (m == 0) break;
        ++idx[m - 1];
    }
    return BigInt(total);
}

LaurentPoly fibered_sum(const LaurentPoly& g, int n, int n_prime, int d) {
    if (d < 1) throw UsageError("fibered sum needs d >= 1");
    if (g.n != n + n_prime) throw UsageError("variable count does not match the blocks");
    LaurentPoly out{d * n + n_prime, {}, g.field};
    for (int c = 0; c < d; ++c)
        for (const auto& [u, a] : g.terms) {
            Exponent v(d * n + n_prime, 0);
            for (int i = 0; i < n; ++i) v[c * n + i] = u[i];
            for (int j = 0; j < n_prime; ++j) v[d * n + j] = u[n + j];
            out = add_term(std::move(out), v, a);
        }
    return out;
}

LaurentPoly leading_form(const LaurentPoly& g, int m) {
    LaurentPoly out{g.n, {}, g.field};
    for (const auto& [u, a] : g.terms) {
        std::int64_t s = 0;
        for (auto e : u) {
            if (e < 0) throw UsageError("leading form of a Laurent polynomial");
            s += e;
        }
        if (s == m) out.terms.emplace(u, a);
    }
    return out;
}

DeligneVerdict deligne_polynomial_check(const LaurentPoly& g, int m, int extension_bound) {
    if (g.is_zero()) throw UsageError("zero polynomial");
    DeligneVerdict V;
    V.bound = extension_bound;
    if (m % static_cast<std::int64_t>(g.field.p) == 0) {
        V.p_divides_m = true;
        return V;
    }
    LaurentPoly gm = leading_form(g, m);
    if (gm.is_zero()) throw UsageError("no terms of degree m");
    const int N = g.n;
    // ordinary partial derivatives of the leading form
    std::vector<LaurentPoly> partials;
    for (int i = 0; i < N; ++i) {
        LaurentPoly d{N, {}, g.field};
        for (const auto& [u, a] : gm.terms) {
            if (u[i] == 0) continue;
            Exponent v = u;
            --v[i];
            d = add_term(std::move(d), v, mul(a, constant(u[i] % static_cast<std::int64_t>(g.field.p), g.field), g.field));
        }
        partials.push_back(std::move(d));
    }
    for (int j = 1; j <= extension_bound; ++j) {
        FieldDesc E = extension(g.field, j);
        const std::uint64_t q = E.size();
        checked_count(q, N - 1);
        // projective points: first nonzero coordinate equal to one
        for (int lead = 0; lead < N; ++lead) {
            std::vector<std::uint64_t> idx(N, 0);
            idx[lead] = 1;
            std::vector<FieldElem> x(N);
            while (true) {
                for (int i = 0; i < N; ++i) x[i] = from_index(idx[i], E);
                bool sing = is_zero(eval_poly(gm, x, E));
                for (int i = 0; i < N && sing; ++i) sing = is_zero(eval_poly(partials[i], x, E));
                if (sing) {
                    V.witness = x;
                    V.witness_field = E;
                    return V;
                }
                int i = N - 1;
                while (i > lead && idx[i] == q - 1) idx[i--] = 0;
                if (i <= lead) break;
                ++idx[i];
            }
        }
    }
    V.smooth = true;
    return V;
}

}  // namespace zetamill
