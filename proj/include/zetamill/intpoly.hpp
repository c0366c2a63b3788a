#pragma once

#include "zetamill/numeric.hpp"

#include <string>
#include <vector>

namespace zetamill {

// integer polynomial, ascending coefficients, trailing zeros trimmed
struct IntPolynomial {
    std::vector<BigInt> c;

    IntPolynomial() = default;
    IntPolynomial(std::vector<BigInt> coeffs);
    static IntPolynomial one() { return IntPolynomial({BigInt(1)}); }
    // 1 - a T
    static IntPolynomial linear(const BigInt& a) { return IntPolynomial({BigInt(1), BigInt(-a)}); }

    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c.empty(); }
    BigInt coeff(int i) const { return i >= 0 && i < static_cast<int>(c.size()) ? c[i] : BigInt(0); }
    bool in_one_plus_TZ() const { return !c.empty() && c[0] == 1; }
    bool operator==(const IntPolynomial& o) const { return c == o.c; }
    bool operator!=(const IntPolynomial& o) const { return c != o.c; }
    bool operator<(const IntPolynomial& o) const { return c < o.c; }
};

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial pow(const IntPolynomial& a, unsigned e);
// P(aT)
IntPolynomial scale_variable(const IntPolynomial& P, const BigInt& a);

// P = prod (1 - alpha T): s_k = sum alpha^k for k = 1..K
std::vector<BigInt> power_sums(const IntPolynomial& P, int K);
// inverse of power_sums: the unique degree <= r polynomial in 1 + T Q[T] with these
// first r power sums; throws MathInconsistency if a coefficient is not integral
IntPolynomial from_power_sums(const std::vector<BigInt>& s, int r);

// T^deg P(1/T)
IntPolynomial reversed(const IntPolynomial& P);

std::string to_string(const IntPolynomial& P, const std::string& var = "T");
std::vector<std::string> to_strings(const IntPolynomial& P);

}  // namespace zetamill
