#pragma once

#include "zetamill/numeric.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace zetamill {

// F_{p^k} = F_p[t]/(modulus)
struct FieldDesc {
    std::uint64_t p = 0;
    int k = 0;
    std::vector<std::uint64_t> modulus;  // constant term first, monic, length k+1

    std::uint64_t size() const;  // p^k, throws CapExceeded past 64 bits
    BigInt big_size() const;
    bool operator==(const FieldDesc& o) const { return p == o.p && k == o.k; }
    bool operator!=(const FieldDesc& o) const { return !(*this == o); }
};

struct FieldElem {
    std::vector<std::uint64_t> coeffs;  // length k, coefficient of t^i at i

    bool operator==(const FieldElem& o) const { return coeffs == o.coeffs; }
    bool operator!=(const FieldElem& o) const { return coeffs != o.coeffs; }
    bool operator<(const FieldElem& o) const { return coeffs < o.coeffs; }  // lex order
};

FieldDesc make_field(std::uint64_t p, int k);

FieldElem zero(const FieldDesc& F);
FieldElem one(const FieldDesc& F);
FieldElem constant(std::int64_t c, const FieldDesc& F);
FieldElem generator_t(const FieldDesc& F);  // the class of t
bool is_zero(const FieldElem& x);

// index = sum c_i p^(k-1-i): ascending index is lex order on coefficient vectors
FieldElem from_index(std::uint64_t index, const FieldDesc& F);
std::uint64_t index_of(const FieldElem& x, const FieldDesc& F);

FieldElem add(const FieldElem& x, const FieldElem& y, const FieldDesc& F);
FieldElem sub(const FieldElem& x, const FieldElem& y, const FieldDesc& F);
FieldElem neg(const FieldElem& x, const FieldDesc& F);
FieldElem mul(const FieldElem& x, const FieldElem& y, const FieldDesc& F);
FieldElem pow(const FieldElem& x, const BigInt& e, const FieldDesc& F);  // e >= 0
FieldElem invert(const FieldElem& x, const FieldDesc& F);

FieldElem frobenius_power(const FieldElem& x, const FieldDesc& F, std::uint64_t base_q, unsigned j);
bool in_subfield(const FieldElem& x, const FieldDesc& F, std::uint64_t q, unsigned d);
FieldElem embed(const FieldElem& x, const FieldDesc& from, const FieldDesc& into);
std::uint64_t trace_to_prime(const FieldElem& x, const FieldDesc& F);

// multiplicative order divides size-1; true iff x generates F^*
bool is_primitive(const FieldElem& x, const FieldDesc& F);

// canonical embedding F_{p^a} -> F_{p^b}, a | b; images of t^i cached
class Embedding {
public:
    Embedding(const FieldDesc& from, const FieldDesc& into);
    FieldElem operator()(const FieldElem& x) const;
    const FieldElem& root() const { return powers_.at(1 % powers_.size()); }
    const FieldDesc& from() const { return from_; }
    const FieldDesc& into() const { return into_; }

private:
    FieldDesc from_, into_;
    std::vector<FieldElem> powers_;
};

const Embedding& canonical_embedding(const FieldDesc& from, const FieldDesc& into);

// roots in F of a polynomial with coefficients in F (constant first), sorted lex
std::vector<FieldElem> roots_in_field(std::vector<FieldElem> poly, const FieldDesc& F);

std::string to_string(const FieldElem& x);
std::string to_string(const FieldDesc& F);  // "F_p^k[t]/(...)"

}  // namespace zetamill
