#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace zetamill {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// bad arguments, malformed input
struct UsageError : Error {
    using Error::Error;
};

struct ParseError : UsageError {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : UsageError(msg + " at position " + std::to_string(pos)), position(pos) {}
};

// an enumeration or table would exceed the configured budget
struct CapExceeded : Error {
    using Error::Error;
};

// exact data failed a consistency check (non-integral reconstruction etc.)
struct MathInconsistency : Error {
    using Error::Error;
};

struct Limits {
    std::uint64_t enumeration_cap = 1000000000ULL;  // evaluated tuples per kernel call
    std::uint64_t table_cap = 1ULL << 23;           // largest field with log tables
    int max_dimension = 6;
    std::int64_t exponent_bound = 1 << 20;
    int threads = 1;
};

Limits& limits();

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);  // distinct, ascending
std::uint64_t ipow(std::uint64_t b, unsigned e);             // throws on overflow
BigInt big_pow(const BigInt& b, unsigned e);
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

// q = p^a; returns a, or 0 if q is not a power of p
int log_base(std::uint64_t q, std::uint64_t p);
// q = p^a with p prime; returns p or 0
std::uint64_t prime_of(std::uint64_t q);

// p-adic valuation of a nonzero integer
int ord_p(BigInt x, std::uint64_t p);

std::string to_string(const BigInt& x);
std::string to_string(const Rational& x);  // "a/b", denominator always present
Rational parse_rational(const std::string& s);

BigInt binomial(int n, int k);
BigInt lcm(const BigInt& a, const BigInt& b);

}  // namespace zetamill
