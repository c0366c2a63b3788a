#include "zetamill/ffield.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <tuple>

namespace zetamill {

namespace {

using Poly = std::vector<std::uint64_t>;  // over F_p, constant first

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod_p(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

Poly poly_mod(Poly a, const Poly& m, std::uint64_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint64_t lead_inv = inv_mod_p(m.back(), p);
    while (a.size() >= m.size()) {
        std::uint64_t c = mulmod(a.back(), lead_inv, p);
        std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i)
            a[shift + i] = (a[shift + i] + p - mulmod(c, m[i], p)) % p;
        trim(a);
    }
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    }
    trim(r);
    return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
    Poly r{1};
    base = poly_mod(base, m, p);
    while (e) {
        if (e & 1) r = poly_mod(poly_mul(r, base, p), m, p);
        base = poly_mod(poly_mul(base, base, p), m, p);
        e >>= 1;
    }
    return r;
}

bool irreducible(const Poly& m, std::uint64_t p) {
    const int k = static_cast<int>(m.size()) - 1;
    if (k <= 1) return k == 1;
    if (m[0] == 0) return false;
    Poly xp{0, 1};
    for (int i = 1; i <= k / 2; ++i) {
        xp = poly_powmod(xp, p, m, p);
        Poly d = xp;
        d.resize(std::max<std::size_t>(d.size(), 2), 0);
        d[1] = (d[1] + p - 1) % p;
        trim(d);
        if (poly_gcd(m, d, p).size() > 1) return false;
    }
    return true;
}

// polynomials over F with FieldElem coefficients, for root finding
using EPoly = std::vector<FieldElem>;

void etrim(EPoly& a) {
    while (!a.empty() && is_zero(a.back())) a.pop_back();
}

EPoly emod(EPoly a, const EPoly& m, const FieldDesc& F) {
    etrim(a);
    const std::size_t dm = m.size() - 1;
    const FieldElem lead_inv = invert(m.back(), F);
    while (a.size() >= m.size()) {
        FieldElem c = mul(a.back(), lead_inv, F);
        std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = sub(a[shift + i], mul(c, m[i], F), F);
        etrim(a);
    }
    return a;
}

EPoly emul(const EPoly& a, const EPoly& b, const FieldDesc& F) {
    if (a.empty() || b.empty()) return {};
    EPoly r(a.size() + b.size() - 1, zero(F));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = add(r[i + j], mul(a[i], b[j], F), F);
    }
    etrim(r);
    return r;
}

EPoly emonic(EPoly a, const FieldDesc& F) {
    etrim(a);
    if (a.empty()) return a;
    FieldElem li = invert(a.back(), F);
    for (auto& c : a) c = mul(c, li, F);
    return a;
}

EPoly egcd(EPoly a, EPoly b, const FieldDesc& F) {
    etrim(a);
    etrim(b);
    while (!b.empty()) {
        EPoly r = emod(a, b, F);
        a = std::move(b);
        b = std::move(r);
    }
    return emonic(a, F);
}

EPoly ediv(EPoly a, const EPoly& b, const FieldDesc& F) {
    etrim(a);
    if (a.size() < b.size()) return {};
    EPoly q(a.size() - b.size() + 1, zero(F));
    const FieldElem li = invert(b.back(), F);
    while (a.size() >= b.size()) {
        FieldElem c = mul(a.back(), li, F);
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = sub(a[shift + i], mul(c, b[i], F), F);
        etrim(a);
    }
    return q;
}

EPoly epowmod(EPoly base, const BigInt& e, const EPoly& m, const FieldDesc& F) {
    EPoly r{one(F)};
    base = emod(base, m, F);
    const unsigned bits = e == 0 ? 0 : static_cast<unsigned>(msb(e)) + 1;
    for (unsigned i = bits; i-- > 0;) {
        r = emod(emul(r, r, F), m, F);
        if (bit_test(e, i)) r = emod(emul(r, base, F), m, F);
    }
    return r;
}

// equal-degree splitting of a squarefree product of linear factors
void split_linear(const EPoly& f, const FieldDesc& F, std::vector<FieldElem>& out) {
    const std::size_t deg = f.size() - 1;
    if (deg == 0) return;
    if (deg == 1) {
        out.push_back(neg(mul(f[0], invert(f[1], F), F), F));
        return;
    }
    const BigInt Q = F.big_size();
    for (std::uint64_t ci = 0;; ++ci) {
        if (ci >= Q) throw MathInconsistency("root splitting failed");
        FieldElem c = from_index(ci, F);
        EPoly g;
        if (F.p == 2) {
            EPoly y = emod(EPoly{zero(F), c}, f, F);
            EPoly tr = y;
            for (int i = 1; i < F.k; ++i) {
                y = emod(emul(y, y, F), f, F);
                tr.resize(std::max(tr.size(), y.size()), zero(F));
                for (std::size_t j = 0; j < y.size(); ++j) tr[j] = add(tr[j], y[j], F);
            }
            g = egcd(f, tr, F);
        } else {
            EPoly h = epowmod(EPoly{c, one(F)}, (Q - 1) / 2, f, F);
            if (h.empty()) h = {zero(F)};
            h[0] = sub(h[0], one(F), F);
            g = egcd(f, h, F);
        }
        if (g.size() > 1 && g.size() < f.size()) {
            split_linear(g, F, out);
            split_linear(emonic(ediv(f, g, F), F), F, out);
            return;
        }
    }
}

}  // namespace

std::uint64_t FieldDesc::size() const { return ipow(p, static_cast<unsigned>(k)); }

BigInt FieldDesc::big_size() const { return big_pow(BigInt(p), static_cast<unsigned>(k)); }

FieldDesc make_field(std::uint64_t p, int k) {
    if (!is_prime(p)) throw UsageError("field characteristic " + std::to_string(p) + " is not prime");
    if (p >= (1ULL << 32)) throw UsageError("characteristic too large");
    if (k < 1) throw UsageError("extension degree must be >= 1");
    FieldDesc F;
    F.p = p;
    F.k = k;
    if (k == 1) {
        F.modulus = {0, 1};
        return F;
    }
    // candidates (c0, ..., c_{k-1}) in lex order, c0 most significant
    Poly m(k + 1, 0);
    m[k] = 1;
    // c0 = 0 is divisible by x, so the lex-first irreducible has c0 >= 1
    std::vector<std::uint64_t> digits(k, 0);
    digits[0] = 1;
    while (true) {
        for (int i = 0; i < k; ++i) m[i] = digits[i];
        if (irreducible(m, p)) break;
        int pos = k - 1;
        while (pos >= 0 && ++digits[pos] == p) digits[pos--] = 0;
        if (pos < 0) throw MathInconsistency("no irreducible polynomial found");
    }
    F.modulus = m;
    return F;
}

FieldElem zero(const FieldDesc& F) { return FieldElem{std::vector<std::uint64_t>(F.k, 0)}; }

FieldElem one(const FieldDesc& F) { return constant(1, F); }

FieldElem constant(std::int64_t c, const FieldDesc& F) {
    FieldElem x = zero(F);
    std::int64_t r = c % static_cast<std::int64_t>(F.p);
    if (r < 0) r += static_cast<std::int64_t>(F.p);
    x.coeffs[0] = static_cast<std::uint64_t>(r);
    return x;
}

FieldElem generator_t(const FieldDesc& F) {
    if (F.k == 1) return zero(F);  // t = 0 mod t
    FieldElem x = zero(F);
    x.coeffs[1] = 1;
    return x;
}

bool is_zero(const FieldElem& x) {
    return std::all_of(x.coeffs.begin(), x.coeffs.end(), [](std::uint64_t c) { return c == 0; });
}

FieldElem from_index(std::uint64_t index, const FieldDesc& F) {
    FieldElem x = zero(F);
    for (int i = F.k - 1; i >= 0; --i) {
        x.coeffs[i] = index % F.p;
        index /= F.p;
    }
    return x;
}

std::uint64_t index_of(const FieldElem& x, const FieldDesc& F) {
    std::uint64_t r = 0;
    for (int i = 0; i < F.k; ++i) r = r * F.p + x.coeffs[i];
    return r;
}

FieldElem add(const FieldElem& x, const FieldElem& y, const FieldDesc& F) {
    FieldElem r = x;
    for (int i = 0; i < F.k; ++i) {
        r.coeffs[i] += y.coeffs[i];
        if (r.coeffs[i] >= F.p) r.coeffs[i] -= F.p;
    }
    return r;
}

FieldElem neg(const FieldElem& x, const FieldDesc& F) {
    FieldElem r = x;
    for (auto& c : r.coeffs) c = c ? F.p - c : 0;
    return r;
}

FieldElem sub(const FieldElem& x, const FieldElem& y, const FieldDesc& F) { return add(x, neg(y, F), F); }

FieldElem mul(const FieldElem& x, const FieldElem& y, const FieldDesc& F) {
    const int k = F.k;
    const std::uint64_t p = F.p;
    if (k == 1) return FieldElem{{mulmod(x.coeffs[0], y.coeffs[0], p)}};
    std::vector<std::uint64_t> prod(2 * k - 1, 0);
    for (int i = 0; i < k; ++i) {
        if (!x.coeffs[i]) continue;
        for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + mulmod(x.coeffs[i], y.coeffs[j], p)) % p;
    }
    for (int d = 2 * k - 2; d >= k; --d) {
        std::uint64_t c = prod[d];
        if (!c) continue;
        prod[d] = 0;
        for (int i = 0; i < k; ++i)
            prod[d - k + i] = (prod[d - k + i] + p - mulmod(c, F.modulus[i], p)) % p;
    }
    prod.resize(k);
    return FieldElem{std::move(prod)};
}

FieldElem pow(const FieldElem& x, const BigInt& e, const FieldDesc& F) {
    if (e < 0) throw UsageError("negative exponent");
    FieldElem r = one(F);
    const unsigned bits = e == 0 ? 0 : static_cast<unsigned>(msb(e)) + 1;
    for (unsigned i = bits; i-- > 0;) {
        r = mul(r, r, F);
        if (bit_test(e, i)) r = mul(r, x, F);
    }
    return r;
}

FieldElem invert(const FieldElem& x, const FieldDesc& F) {
    if (is_zero(x)) throw UsageError("division by zero in " + to_string(F));
    return pow(x, F.big_size() - 2, F);
}

FieldElem frobenius_power(const FieldElem& x, const FieldDesc& F, std::uint64_t base_q, unsigned j) {
    if (log_base(base_q, F.p) == 0) throw UsageError("base q is not a power of the characteristic");
    FieldElem r = x;
    for (unsigned i = 0; i < j; ++i) r = pow(r, BigInt(base_q), F);
    return r;
}

bool in_subfield(const FieldElem& x, const FieldDesc& F, std::uint64_t q, unsigned d) {
    int a = log_base(q, F.p);
    if (a == 0 || d == 0 || F.k % (a * static_cast<int>(d)) != 0)
        throw UsageError("incompatible degrees for subfield test");
    return frobenius_power(x, F, q, d) == x;
}

bool is_primitive(const FieldElem& x, const FieldDesc& F) {
    if (is_zero(x)) return false;
    const std::uint64_t order = F.size() - 1;
    if (order == 0) return false;
    if (order == 1) return x == one(F);
    for (std::uint64_t r : prime_factors(order))
        if (pow(x, BigInt(order / r), F) == one(F)) return false;
    return true;
}

std::vector<FieldElem> roots_in_field(std::vector<FieldElem> poly, const FieldDesc& F) {
    etrim(poly);
    if (poly.empty()) throw UsageError("roots of the zero polynomial");
    std::vector<FieldElem> out;
    EPoly f = emonic(poly, F);
    if (f.size() == 1) return out;
    // distinct roots: gcd with X^Q - X
    EPoly xq = epowmod(EPoly{zero(F), one(F)}, F.big_size(), f, F);
    xq.resize(std::max<std::size_t>(xq.size(), 2), zero(F));
    xq[1] = sub(xq[1], one(F), F);
    EPoly g = egcd(f, xq, F);
    if (g.size() > 1) {
        // drop root 0 into the list separately to keep splitting on units
        if (is_zero(g[0])) {
            out.push_back(zero(F));
            g = emonic(ediv(g, EPoly{zero(F), one(F)}, F), F);
        }
        split_linear(g, F, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Embedding::Embedding(const FieldDesc& from, const FieldDesc& into) : from_(from), into_(into) {
    if (from.p != into.p || into.k % from.k != 0)
        throw UsageError("cannot embed " + to_string(from) + " into " + to_string(into));
    FieldElem theta;
    if (from.k == 1) {
        theta = zero(into);
    } else {
        EPoly m;
        for (auto c : from.modulus) m.push_back(constant(static_cast<std::int64_t>(c), into));
        auto roots = roots_in_field(m, into);
        if (roots.empty()) throw MathInconsistency("modulus has no root in the target field");
        theta = roots.front();
    }
    powers_.push_back(one(into));
    for (int i = 1; i < from.k; ++i) powers_.push_back(mul(powers_.back(), theta, into));
    if (from.k == 1) powers_.push_back(theta);
}

FieldElem Embedding::operator()(const FieldElem& x) const {
    FieldElem r = zero(into_);
    for (int i = 0; i < from_.k; ++i) {
        if (!x.coeffs[i]) continue;
        FieldElem c = constant(static_cast<std::int64_t>(x.coeffs[i]), into_);
        r = add(r, mul(c, powers_[i], into_), into_);
    }
    return r;
}

const Embedding& canonical_embedding(const FieldDesc& from, const FieldDesc& into) {
    static std::mutex mu;
    static std::map<std::tuple<std::uint64_t, int, int>, std::unique_ptr<Embedding>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(from.p, from.k, into.k);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, std::make_unique<Embedding>(from, into)).first;
    return *it->second;
}

FieldElem embed(const FieldElem& x, const FieldDesc& from, const FieldDesc& into) {
    if (from == into) return x;
    return canonical_embedding(from, into)(x);
}

std::uint64_t trace_to_prime(const FieldElem& x, const FieldDesc& F) {
    FieldElem s = x, y = x;
    for (int i = 1; i < F.k; ++i) {
        y = pow(y, BigInt(F.p), F);
        s = add(s, y, F);
    }
    for (int i = 1; i < F.k; ++i)
        if (s.coeffs[i]) throw MathInconsistency("trace left the prime field");
    return s.coeffs[0];
}

std::string to_string(const FieldElem& x) {
    if (x.coeffs.size() == 1) return std::to_string(x.coeffs[0]);
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < x.coeffs.size(); ++i) os << (i ? "," : "") << x.coeffs[i];
    os << ']';
    return os.str();
}

std::string to_string(const FieldDesc& F) {
    std::ostringstream os;
    os << "F_" << F.p;
    if (F.k > 1) {
        os << '^' << F.k << " mod ";
        bool first = true;
        for (int i = F.k; i >= 0; --i) {
            if (!F.modulus[i]) continue;
            if (!first) os << '+';
            first = false;
            if (F.modulus[i] != 1 || i == 0) os << F.modulus[i];
            if (i >= 1) os << 't';
            if (i >= 2) os << '^' << i;
        }
    }
    return os.str();
}

}  // namespace zetamill
