#include "zetamill/intpoly.hpp"

#include <sstream>

namespace zetamill {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : c(std::move(coeffs)) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> r(a.c.size() + b.c.size() - 1);
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    return IntPolynomial(std::move(r));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> r(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return IntPolynomial(std::move(r));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> r(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return IntPolynomial(std::move(r));
}

IntPolynomial pow(const IntPolynomial& a, unsigned e) {
    IntPolynomial r = IntPolynomial::one();
    for (unsigned i = 0; i < e; ++i) r = r * a;
    return r;
}

IntPolynomial scale_variable(const IntPolynomial& P, const BigInt& a) {
    std::vector<BigInt> r = P.c;
    BigInt m = 1;
    for (auto& x : r) {
        x *= m;
        m *= a;
    }
    return IntPolynomial(std::move(r));
}

std::vector<BigInt> power_sums(const IntPolynomial& P, int K) {
    if (!P.in_one_plus_TZ()) throw UsageError("power sums need constant term 1");
    std::vector<BigInt> s(K + 1, 0);
    for (int k = 1; k <= K; ++k) {
        BigInt v = -BigInt(k) * P.coeff(k);
        for (int j = 1; j < k; ++j) v -= s[j] * P.coeff(k - j);
        s[k] = v;
    }
    s.erase(s.begin());
    return s;
}

IntPolynomial from_power_sums(const std::vector<BigInt>& s, int r) {
    if (static_cast<int>(s.size()) < r) throw UsageError("not enough power sums");
    std::vector<BigInt> c(r + 1, 0);
    c[0] = 1;
    for (int k = 1; k <= r; ++k) {
        BigInt v = 0;
        for (int j = 1; j <= k; ++j) v += s[j - 1] * c[k - j];
        if (v % k != 0)
            throw MathInconsistency("non-integral coefficient at T^" + std::to_string(k) + " (" + v.str() + "/" +
                                    std::to_string(k) + ")");
        c[k] = -v / k;
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial reversed(const IntPolynomial& P) {
    std::vector<BigInt> r(P.c.rbegin(), P.c.rend());
    return IntPolynomial(std::move(r));
}

std::string to_string(const IntPolynomial& P, const std::string& var) {
    if (P.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= P.degree(); ++i) {
        const BigInt& a = P.c[i];
        if (a == 0) continue;
        BigInt m = a < 0 ? BigInt(-a) : a;
        if (first)
            os << (a < 0 ? "-" : "");
        else
            os << (a < 0 ? " - " : " + ");
        first = false;
        if (i == 0 || m != 1) os << m;
        if (i > 0) os << var;
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

std::vector<std::string> to_strings(const IntPolynomial& P) {
    std::vector<std::string> out;
    for (const auto& x : P.c) out.push_back(x.str());
    return out;
}

}  // namespace zetamill
