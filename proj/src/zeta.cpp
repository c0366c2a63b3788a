#include "zetamill/zeta.hpp"

#include "zetamill/newtonpolygon.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace zetamill {

namespace {

using QPoly = std::vector<Rational>;  // ascending

void trim(QPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly qmod(QPoly a, const QPoly& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

// gcd normalized to constant term 1 (inputs have nonzero constant terms in our use)
QPoly qgcd(QPoly a, QPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        QPoly r = qmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    if (a[0] == 0) throw MathInconsistency("reciprocal root at zero");
    Rational c = a[0];
    for (auto& x : a) x /= c;
    return a;
}

IntPolynomial to_int(const QPoly& a) {
    std::vector<BigInt> c;
    for (const auto& x : a) {
        if (denominator(x) != 1) throw MathInconsistency("reconstructed factor is not integral");
        c.push_back(numerator(x));
    }
    return IntPolynomial(std::move(c));
}

// minimal connection polynomial C (C[0] = 1) with sum_i C_i a_{n-i} = 0
QPoly berlekamp_massey(const std::vector<BigInt>& a) {
    QPoly C{1}, B{1};
    int L = 0, m = 1;
    Rational b = 1;
    for (std::size_t n = 0; n < a.size(); ++n) {
        Rational d = Rational(a[n]);
        for (int i = 1; i <= L && i < static_cast<int>(C.size()); ++i) d += C[i] * Rational(a[n - i]);
        if (d == 0) {
            ++m;
            continue;
        }
        QPoly Tm = C;
        Rational f = d / b;
        if (C.size() < B.size() + m) C.resize(B.size() + m, 0);
        for (std::size_t i = 0; i < B.size(); ++i) C[i + m] -= f * B[i];
        if (2 * L <= static_cast<int>(n)) {
            L = static_cast<int>(n) + 1 - L;
            B = Tm;
            b = d;
            m = 1;
        } else {
            ++m;
        }
    }
    C.resize(L + 1, 0);
    return C;
}

BigInt signed_binomial_power(int n, int i, std::uint64_t q, int k) {
    // (-1)^(n-i) C(n, i+1) q^(ik)
    BigInt v = binomial(n, i + 1) * big_pow(BigInt(q), static_cast<unsigned>(i * k));
    return ((n - i) % 2 == 0) ? v : BigInt(-v);
}

void add_factor(std::map<IntPolynomial, int>& acc, const IntPolynomial& F, int m) {
    if (m == 0) return;
    acc[F] += m;
}

FactorList collect(const std::map<IntPolynomial, int>& acc) {
    FactorList out;
    for (const auto& [F, m] : acc)
        if (m != 0) out.emplace_back(F, m);
    return out;
}

}  // namespace

std::vector<BigInt> factor_counts(const FactorList& factors, int K) {
    std::vector<BigInt> N(K, 0);
    for (const auto& [F, m] : factors) {
        auto s = power_sums(F, K);
        for (int k = 0; k < K; ++k) N[k] -= m * s[k];
    }
    return N;
}

std::vector<BigInt> ZetaFactorization::counts(int K) const { return factor_counts(factors, K); }

ZetaFactorization from_factors(FactorList factors, std::string provenance) {
    ZetaFactorization Z;
    for (const auto& [F, m] : factors) {
        if (!F.in_one_plus_TZ()) throw UsageError("zeta factor outside 1 + T Z[T]");
        if (m > 0) Z.numerator = Z.numerator * pow(F, static_cast<unsigned>(m));
        if (m < 0) Z.denominator = Z.denominator * pow(F, static_cast<unsigned>(-m));
    }
    Z.factors = std::move(factors);
    Z.provenance = std::move(provenance);
    return Z;
}

ZetaFactorization recurrence_reconstruct(const std::vector<BigInt>& counts, int max_order) {
    if (max_order < 0) throw UsageError("negative order bound");
    const int L = static_cast<int>(counts.size());
    if (L < 2 * max_order)
        throw UsageError("need at least " + std::to_string(2 * max_order) + " counts for order bound " +
                         std::to_string(max_order) + ", got " + std::to_string(L));
    QPoly C = berlekamp_massey(counts);
    const int ell = static_cast<int>(C.size()) - 1;
    if (ell > max_order)
        throw MathInconsistency("minimal recurrence has order " + std::to_string(ell) + " above the bound " +
                                std::to_string(max_order));
    QPoly Ct = C;
    trim(Ct);
    if (static_cast<int>(Ct.size()) - 1 != ell) throw MathInconsistency("counts are not a sum of power sequences");

    // A = (S * C) mod T^(ell+1), S = sum_{k>=1} N_k T^k
    QPoly A(ell + 1, 0);
    for (int j = 1; j <= ell; ++j)
        for (int i = 0; i < j; ++i) A[j] += C[i] * Rational(counts[j - i - 1]);
    QPoly TdC(ell + 1, 0);  // T C'
    for (int i = 1; i <= ell; ++i) TdC[i] = C[i] * i;

    std::map<IntPolynomial, int> acc;
    int found = 0;
    for (int a = 1; a <= 4096 && found < ell; ++a)
        for (int m : {a, -a}) {
            QPoly G = A;
            G.resize(ell + 1, 0);
            for (int i = 0; i <= ell; ++i) G[i] += TdC[i] * m;
            QPoly g = qgcd(C, G);
            if (g.size() <= 1) continue;
            found += static_cast<int>(g.size()) - 1;
            // N_k = m * sum gamma^k  <=>  Z contains (prod (1 - gamma T))^(-m)
            add_factor(acc, to_int(g), -m);
        }
    if (found != ell) throw MathInconsistency("reciprocal root multiplicities are not integers");

    ZetaFactorization Z = from_factors(collect(acc), "recurrence from " + std::to_string(L) + " counts");
    Z.order = ell;
    Z.tight = ell == max_order && max_order > 0;
    if (Z.counts(L) != counts) throw MathInconsistency("reconstruction does not reproduce the counts");
    return Z;
}

FactorList toric_trivial_factors(int n, std::uint64_t q) {
    FactorList out;
    for (int i = 0; i < n; ++i) {
        int e = static_cast<int>(binomial(n, i + 1));
        if ((n - i) % 2) e = -e;
        out.emplace_back(IntPolynomial::linear(big_pow(BigInt(q), static_cast<unsigned>(i))), e);
    }
    return out;
}

IntPolynomial nontrivial_factor(const LatticePolytope& D, const std::vector<BigInt>& counts, std::uint64_t q) {
    const int n = D.n;
    const BigInt d = normalized_volume(D);
    const int r = static_cast<int>(d) - 1;
    const int L = static_cast<int>(counts.size());
    if (L < r) throw UsageError("need " + std::to_string(r) + " counts, got " + std::to_string(L));
    std::vector<BigInt> s(L);
    for (int k = 1; k <= L; ++k) {
        BigInt v = counts[k - 1];
        for (int i = 0; i < n; ++i) v += signed_binomial_power(n, i, q, k);
        s[k - 1] = (n % 2 == 1) ? v : BigInt(-v);
    }
    IntPolynomial P = from_power_sums(s, r);
    if (P.degree() != r)
        throw MathInconsistency("nontrivial factor has degree " + std::to_string(P.degree()) + ", expected " +
                                std::to_string(r));
    if (power_sums(P, L) != s) throw MathInconsistency("extra counts disagree with the degree-" +
                                                        std::to_string(r) + " nontrivial factor");
    return P;
}

ZetaFactorization toric_zeta(const LatticePolytope& D, const std::vector<BigInt>& counts, std::uint64_t q) {
    IntPolynomial P = nontrivial_factor(D, counts, q);
    FactorList F = toric_trivial_factors(D.n, q);
    if (P.degree() > 0) F.emplace_back(P, D.n % 2 == 0 ? 1 : -1);
    auto Z = from_factors(std::move(F), "toric factorization from " + std::to_string(counts.size()) + " counts");
    Z.order = -1;
    return Z;
}

IntPolynomial reconstruct_with_known(const std::vector<BigInt>& counts, const std::vector<BigInt>& known,
                                     int unknown_degree, int exponent) {
    if (exponent != 1 && exponent != -1) throw UsageError("unknown factor exponent must be +1 or -1");
    const int L = static_cast<int>(counts.size());
    if (L < unknown_degree) throw UsageError("fewer counts than the unknown degree");
    if (static_cast<int>(known.size()) < L) throw UsageError("known contributions shorter than counts");
    std::vector<BigInt> s(L);
    for (int k = 0; k < L; ++k) s[k] = -exponent * (counts[k] - known[k]);
    IntPolynomial U = from_power_sums(s, unknown_degree);
    if (power_sums(U, L) != s) throw MathInconsistency("residual counts are not the power sums of a degree-" +
                                                        std::to_string(unknown_degree) + " factor");
    return U;
}

WeilVerdict weil_weights(const IntPolynomial& P, std::uint64_t q, double tolerance) {
    using Real = boost::multiprecision::cpp_bin_float_50;
    using Cx = boost::multiprecision::cpp_complex_50;
    if (!P.in_one_plus_TZ()) throw UsageError("weights need P(0) = 1");
    WeilVerdict V;
    const int r = P.degree();
    if (r == 0) {
        V.pure = true;
        return V;
    }
    // monic z^r + c_1 z^(r-1) + ... + c_r, roots are the reciprocal roots of P
    std::vector<Real> a(r + 1);
    for (int i = 0; i <= r; ++i) a[i] = Real(P.coeff(i).str());
    auto eval = [&](const Cx& z, Cx& dp) {
        Cx v = Cx(a[0]);
        dp = Cx(0);
        for (int i = 1; i <= r; ++i) {
            dp = dp * z + v;
            v = v * z + Cx(a[i]);
        }
        return v;
    };
    Real R = boost::multiprecision::pow(boost::multiprecision::abs(a[r]), Real(1) / r);
    if (R == 0) R = 1;
    std::vector<Cx> z(r);
    const Real pi = boost::math::constants::pi<Real>();
    for (int i = 0; i < r; ++i) {
        Real ang = 2 * pi * i / r + Real(0.4);
        Real rad = R * (1 + Real(i) / (10 * r));
        z[i] = Cx(rad * cos(ang), rad * sin(ang));
    }
    const Real eps = Real("1e-45");
    for (int it = 0; it < 5000; ++it) {
        Real worst = 0;
        for (int i = 0; i < r; ++i) {
            Cx dp;
            Cx v = eval(z[i], dp);
            if (v == Cx(0)) continue;
            Cx ratio = v / dp;
            Cx sum = 0;
            for (int j = 0; j < r; ++j)
                if (j != i) sum += Cx(1) / (z[i] - z[j]);
            Cx w = ratio / (Cx(1) - ratio * sum);
            z[i] -= w;
            Real rel = abs(w) / std::max(Real(1), Real(abs(z[i])));
            worst = std::max(worst, rel);
        }
        if (worst < eps) break;
    }
    // inclusion radii
    std::vector<Real> rho(r);
    for (int i = 0; i < r; ++i) {
        Cx dp;
        Cx v = eval(z[i], dp);
        Cx prod = 1;
        for (int j = 0; j < r; ++j)
            if (j != i) prod *= z[i] - z[j];
        Real den = abs(prod);
        rho[i] = den == 0 ? Real(1e300) : Real(r) * abs(v) / den;
    }
    std::vector<int> comp(r);
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            if (abs(z[i] - z[j]) <= rho[i] + rho[j]) comp[find(i)] = find(j);
    const Real logq = log(Real(q));
    V.pure = true;
    std::vector<int> weights(r);
    V.rel_error.assign(r, 0);
    for (int i = 0; i < r; ++i) {
        Real lo = abs(z[i]) - rho[i], hi = abs(z[i]) + rho[i];
        for (int j = 0; j < r; ++j)
            if (find(j) == find(i)) {
                lo = std::min(lo, Real(abs(z[j]) - rho[j]));
                hi = std::max(hi, Real(abs(z[j]) + rho[j]));
            }
        Real mod = abs(z[i]);
        int w = static_cast<int>(std::lround(static_cast<double>(2 * log(mod) / logq)));
        Real target = exp(Real(w) * logq / 2);
        Real err = std::max(abs(lo - target), abs(hi - target)) / target;
        weights[i] = w;
        V.rel_error[i] = static_cast<double>(err);
        V.moduli.push_back(static_cast<double>(mod));
        V.roots.emplace_back(static_cast<double>(z[i].real()), static_cast<double>(z[i].imag()));
        if (err > tolerance || w < 0) {
            V.pure = false;
            std::ostringstream os;
            os << "root " << i << " modulus " << static_cast<double>(mod) << " is not q^(w/2) within tolerance";
            if (V.detail.empty()) V.detail = os.str();
        }
    }
    if (V.pure) {
        std::sort(weights.begin(), weights.end());
        V.weights = weights;
    }
    return V;
}

std::optional<int> functional_equation_sign(const IntPolynomial& P, std::uint64_t q, int w, int r) {
    if (P.degree() != r || !P.in_one_plus_TZ()) return std::nullopt;
    BigInt sq = boost::multiprecision::sqrt(BigInt(q));
    bool square = sq * sq == BigInt(q);
    std::optional<int> sign;
    for (int j = 0; j <= r; ++j) {
        const BigInt& cj = P.c[j];
        const BigInt& cr = P.c[r - j];
        long e = static_cast<long>(w) * (2 * j - r);  // lhs_j = c_{r-j} q^(e/2)
        if (cr == 0 || cj == 0) {
            if (cr != cj) return std::nullopt;
            continue;
        }
        BigInt base = BigInt(q);
        long half = e / 2;
        if (e % 2 != 0) {
            if (!square) return std::nullopt;
            base = sq;
            half = e;
        }
        Rational lhs = Rational(cr);
        if (half >= 0)
            lhs *= Rational(big_pow(base, static_cast<unsigned>(half)));
        else
            lhs /= Rational(big_pow(base, static_cast<unsigned>(-half)));
        int s;
        if (lhs == Rational(cj))
            s = 1;
        else if (lhs == -Rational(cj))
            s = -1;
        else
            return std::nullopt;
        if (sign && *sign != s) return std::nullopt;
        sign = s;
    }
    return sign;
}

bool functional_equation_check(const IntPolynomial& P, std::uint64_t q, int w, int r) {
    return functional_equation_sign(P, q, w, r).has_value();
}

ZetaFactorization moment_zeta(const std::vector<BigInt>& moments, int max_order) {
    auto Z = recurrence_reconstruct(moments, max_order);
    Z.provenance = "moment " + Z.provenance;
    return Z;
}

CYTrivialFactors cy_trivial_factors(int n, int d, std::uint64_t q) {
    if (n < 2 || d < 1) throw UsageError("trivial factors need n >= 2 and d >= 1");
    auto lin = [&](long e) { return IntPolynomial::linear(big_pow(BigInt(q), static_cast<unsigned>(e))); };
    CYTrivialFactors out;
    const bool ne = n % 2 == 0, de = d % 2 == 0;
    if (ne && de) {
        out.A = {{lin(d * (n - 1) / 2), 1}, {lin(d * (n - 1) / 2 + 1), 1}, {lin(d * (n - 2) / 2 + 1), 1}};
    } else if (ne) {
        out.A = {{lin(d * (n - 2) / 2 + 1), 1}};
    } else if (!de) {
        out.A = {{lin(d * (n - 1) / 2), 1}};
    } else {
        out.A = {{lin(d * (n - 1) / 2 + 1), -1}};
    }
    std::map<IntPolynomial, int> acc;
    for (int k = 0; k <= (n - 2) / 2; ++k) {
        add_factor(acc, lin(static_cast<long>(d) * k), 1);
        add_factor(acc, lin(static_cast<long>(d) * k + 1), -1);
    }
    for (int i = 0; i < n; ++i) {
        int e = static_cast<int>(binomial(n, i + 1));
        add_factor(acc, lin(static_cast<long>(d) * i + 1), (i % 2 == 0) ? -e : e);
    }
    out.S = collect(acc);
    return out;
}

FactorList cy2_known_factor(int d, std::uint64_t q) {
    if (d < 1) throw UsageError("d must be positive");
    if (q % 3 == 0) throw UsageError("the n = 2 family needs p != 3");
    const BigInt Q(q);
    std::map<IntPolynomial, int> acc;
    add_factor(acc, IntPolynomial::linear(big_pow(Q, static_cast<unsigned>(d + 1))), 1);
    add_factor(acc, IntPolynomial::linear(1), 1);
    add_factor(acc, IntPolynomial::linear(Q), -2);
    if (d == 2) add_factor(acc, IntPolynomial::linear(Q * Q), 1);
    if (d >= 3) add_factor(acc, IntPolynomial::linear(Q), -1);
    if (d >= 2) {
        // stalks at the singular fibres
        if (q % 3 == 1) {
            add_factor(acc, IntPolynomial::linear(Q), -3);
        } else if (d % 2 == 0) {
            add_factor(acc, IntPolynomial::linear(Q), -2);
            add_factor(acc, IntPolynomial::linear(-Q), -1);
        } else {
            add_factor(acc, IntPolynomial::linear(Q), -1);
            add_factor(acc, IntPolynomial::linear(-Q), -2);
        }
    }
    return collect(acc);
}

RdResult extract_R_d(int d, std::uint64_t q, const std::vector<BigInt>& moments, const IntPolynomial& R_dm2) {
    RdResult res;
    res.d = d;
    if (d <= 1) {
        res.R = IntPolynomial::one();
        res.weights.pure = true;
        res.functional_equation = true;
        res.fe_sign = 1;
        return res;
    }
    if (q % 3 == 0) throw UsageError("R_d extraction needs p != 3");
    const int r = 2 * (d - 1);
    const int w = d + 1;
    const int L = static_cast<int>(moments.size());
    if (L < d - 1) throw UsageError("need at least " + std::to_string(d - 1) + " moments for d = " + std::to_string(d));
    // N_k of everything except R_d: Z = K^{-1} R_{d-2}(qT) R_d^{-1}
    std::vector<BigInt> known = factor_counts(cy2_known_factor(d, q), L);
    for (auto& x : known) x = -x;
    auto sR = power_sums(R_dm2, L);
    BigInt qk = 1;
    for (int k = 0; k < L; ++k) {
        qk *= q;
        known[k] -= qk * sR[k];
    }
    res.counts_used = L;
    if (L >= r) {
        res.R = reconstruct_with_known(moments, known, r, -1);
    } else {
        std::vector<BigInt> s(L);
        for (int k = 0; k < L; ++k) s[k] = moments[k] - known[k];
        IntPolynomial head = from_power_sums(s, L);
        std::vector<BigInt> c(r + 1, 0);
        for (int j = 0; j <= L; ++j) c[j] = head.coeff(j);
        // c_{r-j} = eps q^{w(r-2j)/2} c_j
        auto scale = [&](int j) { return big_pow(BigInt(q), static_cast<unsigned>(w * (r - 2 * j) / 2)); };
        int eps = 0;
        for (int j = 0; j <= L && !eps; ++j) {
            if (r - j > L || r - j <= j || c[j] == 0) continue;
            BigInt v = scale(j) * c[j];
            if (c[r - j] == v)
                eps = 1;
            else if (c[r - j] == -v)
                eps = -1;
            else
                throw MathInconsistency("moments violate the functional equation of R_" + std::to_string(d));
        }
        if (!eps && L >= d - 1 && c[d - 1] != 0) eps = 1;
        if (!eps) throw UsageError("sign of the functional equation undetermined; supply more moments");
        for (int j = 0; r - j > L; ++j) c[r - j] = eps * scale(j) * c[j];
        res.R = IntPolynomial(std::move(c));
        res.completed_by_fe = true;
        if (power_sums(res.R, L) != s) throw MathInconsistency("completed R_d does not reproduce the moments");
    }
    if (res.R.degree() != r)
        throw MathInconsistency("R_" + std::to_string(d) + " has degree " + std::to_string(res.R.degree()) +
                                ", expected " + std::to_string(r) + ": " + to_string(res.R));
    res.weights = weil_weights(res.R, q);
    if (!res.weights.pure || res.weights.weights.front() != w || res.weights.weights.back() != w)
        throw MathInconsistency("R_" + std::to_string(d) + " = " + to_string(res.R) + " is not pure of weight " +
                                std::to_string(w));
    auto sgn = functional_equation_sign(res.R, q, w, r);
    res.functional_equation = sgn.has_value();
    res.fe_sign = sgn.value_or(0);
    return res;
}

SlopeZeta SlopeZeta::operator*(const SlopeZeta& o) const {
    SlopeZeta r = *this;
    for (const auto& [s, m] : o.factors) {
        r.factors[s] += m;
        if (r.factors[s] == 0) r.factors.erase(s);
    }
    return r;
}

SlopeZeta SlopeZeta::reciprocal() const {
    SlopeZeta r;
    for (const auto& [s, m] : factors) r.factors[s] = -m;
    return r;
}

SlopeZeta slope_zeta(const FactorList& factors, std::uint64_t q) {
    SlopeZeta S;
    for (const auto& [F, m] : factors) {
        SlopeZeta part;
        for (const auto& [slope, len] : slope_multiset(newton_polygon_of(F, q))) {
            if (denominator(len) != 1) throw MathInconsistency("fractional side length");
            part.factors[slope] += m * static_cast<int>(numerator(len));
        }
        S = S * part;
    }
    return S;
}

std::string to_string(const SlopeZeta& S) {
    if (S.factors.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, m] : S.factors) {
        if (!first) os << ' ';
        first = false;
        os << "(1 - ";
        if (s == 0)
            os << "T";
        else if (s == 1)
            os << "U T";
        else
            os << "U^" << (denominator(s) == 1 ? numerator(s).str() : to_string(s)) << " T";
        os << ')';
        if (m != 1) os << '^' << m;
    }
    return os.str();
}

CongruenceReport congruence_scan(const std::map<int, BigInt>& moments, std::uint64_t l, int k_max,
                                 const std::vector<int>& D_candidates) {
    if (!is_prime(l)) throw UsageError("l must be prime");
    CongruenceReport rep;
    for (int D : D_candidates) {
        if (D < 1) throw UsageError("candidate moduli must be positive");
        CongruenceCandidate c;
        c.D = D;
        for (int k = 1; k <= k_max; ++k) {
            BigInt lk = big_pow(BigInt(l), static_cast<unsigned>(k));
            BigInt step = BigInt(D) * big_pow(BigInt(l), static_cast<unsigned>(k - 1));
            for (auto i = moments.begin(); i != moments.end(); ++i)
                for (auto j = std::next(i); j != moments.end(); ++j) {
                    if (BigInt(j->first - i->first) % step != 0) continue;
                    ++c.pairs;
                    BigInt diff = j->second - i->second;
                    if (diff % lk != 0) c.violations.push_back({D, k, i->first, j->first});
                }
        }
        if (!rep.smallest_passing && c.violations.empty() && c.pairs > 0) rep.smallest_passing = D;
        rep.candidates.push_back(std::move(c));
    }
    return rep;
}

std::string to_string(const FactorList& factors) {
    if (factors.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [F, m] : factors) {
        if (!first) os << ' ';
        first = false;
        os << '(' << to_string(F) << ')';
        if (m != 1) os << '^' << m;
    }
    return os.str();
}

}  // namespace zetamill
