#include "zetamill/numeric.hpp"

#include <boost/integer/common_factor.hpp>

namespace zetamill {

Limits& limits() {
    static Limits l;
    return l;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (b != 0 && r > UINT64_MAX / b) throw CapExceeded("integer power overflows 64 bits");
        r *= b;
    }
    return r;
}

BigInt big_pow(const BigInt& b, unsigned e) {
    BigInt r = 1;
    for (unsigned i = 0; i < e; ++i) r *= b;
    return r;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

int log_base(std::uint64_t q, std::uint64_t p) {
    if (p < 2 || q < p) return 0;
    int a = 0;
    while (q % p == 0) {
        q /= p;
        ++a;
    }
    return q == 1 ? a : 0;
}

std::uint64_t prime_of(std::uint64_t q) {
    if (q < 2) return 0;
    auto f = prime_factors(q);
    return f.size() == 1 ? f[0] : 0;
}

int ord_p(BigInt x, std::uint64_t p) {
    if (x == 0) throw UsageError("ord_p of zero");
    if (x < 0) x = -x;
    int v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

std::string to_string(const BigInt& x) { return x.str(); }

std::string to_string(const Rational& x) {
    return numerator(x).str() + "/" + denominator(x).str();
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw UsageError("zero denominator in rational '" + s + "'");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw UsageError("malformed rational '" + s + "'");
    }
}

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
    if (a == 0 || b == 0) return 0;
    return boost::integer::lcm(a, b);
}

}  // namespace zetamill
