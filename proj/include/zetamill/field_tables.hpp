#pragma once

#include "zetamill/ffield.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

namespace zetamill {

// Log/antilog/Zech tables for a field small enough to tabulate.
// Elements are represented by discrete logs to a fixed primitive element g
// (the lex-least one); kZero stands for 0.
class FieldTables {
public:
    static constexpr std::uint32_t kZero = 0xffffffffu;

    explicit FieldTables(const FieldDesc& F);

    const FieldDesc& field() const { return F_; }
    std::uint64_t size() const { return q_; }
    std::uint32_t order() const { return ord_; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (a == kZero || b == kZero) return kZero;
        std::uint32_t s = a + b;  // a, b < ord_ < 2^31
        return s >= ord_ ? s - ord_ : s;
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        if (a == kZero) return b;
        if (b == kZero) return a;
        std::uint32_t d = b >= a ? b - a : b + ord_ - a;
        std::uint32_t z = zech_[d];
        if (z == kZero) return kZero;
        std::uint32_t s = a + z;
        return s >= ord_ ? s - ord_ : s;
    }
    std::uint32_t neg(std::uint32_t a) const {
        if (a == kZero) return kZero;
        std::uint32_t s = a + neg_one_;
        return s >= ord_ ? s - ord_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
    std::uint32_t inv(std::uint32_t a) const { return a == 0 ? 0 : ord_ - a; }
    std::uint32_t pow(std::uint32_t a, std::int64_t e) const;
    // reduce an arbitrary integer exponent multiple of a log into range
    std::uint32_t reduce(std::int64_t e) const {
        std::int64_t r = e % static_cast<std::int64_t>(ord_);
        return static_cast<std::uint32_t>(r < 0 ? r + ord_ : r);
    }
    bool is_square(std::uint32_t a) const { return a == kZero || (q_ % 2 == 0) || (a % 2 == 0); }

    std::uint32_t from_elem(const FieldElem& x) const { return log_[index_of(x, F_)]; }
    std::uint32_t from_int(std::int64_t c) const { return from_elem(constant(c, F_)); }
    FieldElem to_elem(std::uint32_t a) const { return from_index(a == kZero ? 0 : exp_[a], F_); }
    std::uint32_t log_of_index(std::uint64_t idx) const { return log_[idx]; }
    std::uint64_t index_of_log(std::uint32_t a) const { return a == kZero ? 0 : exp_[a]; }

    // absolute trace into F_p as an integer in [0, p)
    std::uint32_t trace(std::uint32_t a) const;

private:
    FieldDesc F_;
    std::uint64_t q_;
    std::uint32_t ord_;
    std::uint32_t neg_one_;
    std::vector<std::uint32_t> exp_;   // log -> index
    std::vector<std::uint32_t> log_;   // index -> log
    std::vector<std::uint32_t> zech_;  // n -> log(1 + g^n)
    mutable std::once_flag trace_once_;
    mutable std::vector<std::uint32_t> trace_;
};

// shared, lazily built; throws CapExceeded above limits().table_cap
std::shared_ptr<const FieldTables> tables_for(const FieldDesc& F);

// Counts distinct roots of univariate polynomials over a tabulated field.
class RootCounter {
public:
    explicit RootCounter(const FieldTables& T) : T_(T) {}

    // c[0..] log coefficients (constant first). Counts distinct roots in the
    // subfield of size sub_q (default: whole field), excluding 0.
    // A polynomial with every coefficient zero has every unit as a root.
    std::uint64_t nonzero_roots(const std::uint32_t* c, int len, std::uint64_t sub_q = 0);

private:
    std::uint64_t gcd_count(int lo, int hi, std::uint64_t sub_q);
    void mulmod(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                std::vector<std::uint32_t>& out);

    const FieldTables& T_;
    std::vector<std::uint32_t> h_, r_, tmp_, prod_, ga_, gb_;
    const std::uint32_t* src_ = nullptr;
};

}  // namespace zetamill
