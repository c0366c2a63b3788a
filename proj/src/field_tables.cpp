#include "zetamill/field_tables.hpp"

#include <map>
#include <utility>

namespace zetamill {

FieldTables::FieldTables(const FieldDesc& F) : F_(F) {
    q_ = F.size();
    if (q_ > limits().table_cap || q_ >= (1ULL << 31))
        throw CapExceeded("field of size " + std::to_string(q_) + " exceeds the table cap " +
                          std::to_string(limits().table_cap));
    ord_ = static_cast<std::uint32_t>(q_ - 1);
    neg_one_ = (F.p == 2) ? 0 : ord_ / 2;

    FieldElem g;
    for (std::uint64_t i = 1; i < q_; ++i) {
        FieldElem c = from_index(i, F);
        if (is_primitive(c, F)) {
            g = c;
            break;
        }
    }
    if (q_ == 2) g = one(F);

    exp_.assign(ord_, 0);
    log_.assign(q_, kZero);
    const int k = F.k;
    const std::uint64_t p = F.p;
    std::vector<std::uint64_t> cur(k, 0), prod(2 * k, 0);
    cur[0] = 1;
    for (std::uint32_t i = 0; i < ord_; ++i) {
        std::uint64_t idx = 0;
        for (int j = 0; j < k; ++j) idx = idx * p + cur[j];
        if (log_[idx] != kZero) throw MathInconsistency("primitive element has short order");
        exp_[i] = static_cast<std::uint32_t>(idx);
        log_[idx] = i;
        std::fill(prod.begin(), prod.end(), 0);
        for (int a = 0; a < k; ++a) {
            if (!cur[a]) continue;
            for (int b = 0; b < k; ++b) prod[a + b] = (prod[a + b] + cur[a] * g.coeffs[b]) % p;
        }
        for (int d = 2 * k - 2; d >= k; --d) {
            std::uint64_t c = prod[d];
            if (!c) continue;
            prod[d] = 0;
            for (int j = 0; j < k; ++j) prod[d - k + j] = (prod[d - k + j] + (p - c) * F.modulus[j]) % p;
        }
        for (int j = 0; j < k; ++j) cur[j] = prod[j];
    }

    zech_.assign(ord_, kZero);
    const std::uint64_t top = q_ / p;  // place value of the constant coefficient
    for (std::uint32_t n = 0; n < ord_; ++n) {
        std::uint64_t idx = exp_[n];
        std::uint64_t c0 = idx / top;
        std::uint64_t idx1 = idx - c0 * top + ((c0 + 1) % p) * top;
        zech_[n] = log_[idx1];
    }
}

std::uint32_t FieldTables::pow(std::uint32_t a, std::int64_t e) const {
    if (a == kZero) {
        if (e < 0) throw UsageError("zero to a negative power");
        return e == 0 ? 0 : kZero;
    }
    unsigned __int128 prod = static_cast<unsigned __int128>(a) *
                             static_cast<std::uint64_t>(e < 0 ? -e : e) % ord_;
    std::uint32_t r = static_cast<std::uint32_t>(prod);
    return (e < 0 && r) ? ord_ - r : r;
}

std::uint32_t FieldTables::trace(std::uint32_t a) const {
    std::call_once(trace_once_, [this] {
        trace_.assign(q_, 0);
        const std::uint64_t top = q_ / F_.p;
        for (std::uint64_t idx = 1; idx < q_; ++idx) {
            std::uint32_t x = log_[idx], s = x;
            for (int i = 1; i < F_.k; ++i) {
                x = static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * F_.p % ord_);
                s = add(s, x);
            }
            std::uint64_t sidx = s == kZero ? 0 : exp_[s];
            trace_[idx] = static_cast<std::uint32_t>(sidx / top);
        }
    });
    return a == kZero ? 0 : trace_[exp_[a]];
}

std::shared_ptr<const FieldTables> tables_for(const FieldDesc& F) {
    static std::mutex mu;
    static std::map<std::pair<std::uint64_t, int>, std::shared_ptr<const FieldTables>> cache;
    if (F.big_size() > BigInt(limits().table_cap))
        throw CapExceeded("field " + to_string(F) + " exceeds the table cap");
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(F.p, F.k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto t = std::make_shared<const FieldTables>(F);
    cache.emplace(key, t);
    return t;
}

std::uint64_t RootCounter::nonzero_roots(const std::uint32_t* c, int len, std::uint64_t sub_q) {
    const std::uint32_t Z = FieldTables::kZero;
    const std::uint64_t q = T_.size();
    if (sub_q == 0) sub_q = q;
    int lo = 0, hi = len - 1;
    while (lo < len && c[lo] == Z) ++lo;
    if (lo == len) return sub_q - 1;
    while (c[hi] == Z) --hi;
    const int D = hi - lo;
    if (D == 0) return 0;
    if (D == 1) {
        std::uint32_t r = T_.neg(T_.mul(c[lo], T_.inv(c[hi])));
        if (sub_q == q) return 1;
        const std::uint64_t step = (q - 1) / (sub_q - 1);
        return r % step == 0 ? 1 : 0;
    }
    if (D == 2 && sub_q == q && q % 2 == 1) {
        std::uint32_t b2 = T_.mul(c[lo + 1], c[lo + 1]);
        std::uint32_t ac4 = T_.mul(T_.from_int(4), T_.mul(c[lo], c[hi]));
        std::uint32_t disc = T_.sub(b2, ac4);
        if (disc == Z) return 1;
        return T_.is_square(disc) ? 2 : 0;
    }
    src_ = c;
    return gcd_count(lo, hi, sub_q);
}

void RootCounter::mulmod(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                         std::vector<std::uint32_t>& out) {
    const std::uint32_t Z = FieldTables::kZero;
    const int D = static_cast<int>(h_.size()) - 1;  // h_ monic of degree D
    prod_.assign(2 * D - 1, Z);
    for (int i = 0; i < D; ++i) {
        if (a[i] == Z) continue;
        for (int j = 0; j < D; ++j)
            if (b[j] != Z) prod_[i + j] = T_.add(prod_[i + j], T_.mul(a[i], b[j]));
    }
    for (int d = 2 * D - 2; d >= D; --d) {
        std::uint32_t cf = prod_[d];
        if (cf == Z) continue;
        std::uint32_t ncf = T_.neg(cf);
        for (int j = 0; j < D; ++j)
            if (h_[j] != Z) prod_[d - D + j] = T_.add(prod_[d - D + j], T_.mul(ncf, h_[j]));
    }
    out.assign(prod_.begin(), prod_.begin() + D);
}

std::uint64_t RootCounter::gcd_count(int lo, int hi, std::uint64_t sub_q) {
    const std::uint32_t Z = FieldTables::kZero;
    const int D = hi - lo;
    const std::uint32_t li = T_.inv(src_[hi]);
    h_.resize(D + 1);
    for (int i = 0; i <= D; ++i) h_[i] = T_.mul(src_[lo + i], li);

    // r = X^sub_q mod h
    r_.assign(D, Z);
    r_[1] = 0;
    int top = 63;
    while (!((sub_q >> top) & 1)) --top;
    for (int bit = top - 1; bit >= 0; --bit) {
        mulmod(r_, r_, tmp_);
        if ((sub_q >> bit) & 1) {
            // multiply by X
            r_.assign(D, Z);
            std::uint32_t carry = tmp_[D - 1];
            for (int i = D - 1; i >= 1; --i) r_[i] = tmp_[i - 1];
            r_[0] = Z;
            if (carry != Z) {
                std::uint32_t nc = T_.neg(carry);
                for (int j = 0; j < D; ++j)
                    if (h_[j] != Z) r_[j] = T_.add(r_[j], T_.mul(nc, h_[j]));
            }
        } else {
            r_.swap(tmp_);
        }
    }
    r_[1] = T_.sub(r_[1], 0);

    // gcd(h, r)
    ga_ = h_;
    gb_ = r_;
    auto deg = [&](const std::vector<std::uint32_t>& v) {
        int d = static_cast<int>(v.size()) - 1;
        while (d >= 0 && v[d] == Z) --d;
        return d;
    };
    int da = deg(ga_), db = deg(gb_);
    while (db >= 0) {
        // ga_ mod gb_
        std::uint32_t binv = T_.inv(gb_[db]);
        while (da >= db) {
            std::uint32_t f = T_.neg(T_.mul(ga_[da], binv));
            int shift = da - db;
            for (int j = 0; j <= db; ++j)
                if (gb_[j] != Z) ga_[shift + j] = T_.add(ga_[shift + j], T_.mul(f, gb_[j]));
            ga_[da] = Z;
            da = deg(ga_);
            if (da < 0) break;
        }
        ga_.swap(gb_);
        std::swap(da, db);
    }
    return static_cast<std::uint64_t>(da);
}

}  // namespace zetamill
