#include "zetamill/cy.hpp"

#include "zetamill/regularity.hpp"

#include <map>

namespace zetamill {

std::vector<FibreRecord> fibre_zetas(const Family& fam, int k, const FibreOptions& opt) {
    const FieldDesc& F = fam.f.field;
    const FieldDesc Ey = extension(F, k);
    const std::uint64_t Qy = Ey.size();
    if (BigInt(Qy) > BigInt(limits().enumeration_cap)) throw CapExceeded("too many parameters");
    // preimages of subfield elements, per divisor e of k
    std::map<int, std::map<FieldElem, FieldElem>> pre;
    std::map<int, FieldDesc> sub;
    for (int e = 1; e <= k; ++e) {
        if (k % e) continue;
        sub[e] = extension(F, e);
        for (std::uint64_t i = 0; i < sub[e].size(); ++i) {
            FieldElem z = from_index(i, sub[e]);
            pre[e].emplace(embed(z, sub[e], Ey), z);
        }
    }
    std::vector<FieldElem> all;
    std::vector<char> seen(Qy, 0);
    std::vector<FibreRecord> out;
    const BigInt qb = BigInt(F.size());
    for (std::uint64_t i = 0; i < Qy; ++i) {
        if (seen[i]) continue;
        FieldElem y = from_index(i, Ey);
        int e = 0;
        FieldElem z = y;
        do {
            seen[index_of(z, Ey)] = 1;
            ++e;
            z = pow(z, qb, Ey);
        } while (z != y);
        FibreRecord rec;
        rec.degree = e;
        rec.y_field = sub.at(e);
        rec.y = pre.at(e).at(y);
        const FieldDesc& S = rec.y_field;
        LaurentPoly g = fibre(fam, rec.y, S, S);
        bool regular = !g.is_zero() && is_delta_regular(g, opt.regularity_bound).regular;
        if (fam.cy_n && regular == cy_parameter_singular(fam.cy_n, rec.y, S))
            throw MathInconsistency("regularity search disagrees with the singular parameter locus at y = " +
                                    to_string(rec.y));
        rec.singular = !regular;
        auto count_over = [&](int j) {
            FieldDesc E = extension(S, j);
            return count_torus(fibre(fam, rec.y, S, E), E);
        };
        std::vector<BigInt> counts;
        if (regular) {
            LatticePolytope D = newton_polytope(g);
            const int r = static_cast<int>(normalized_volume(D)) - 1;
            for (int j = 1; j <= r + 1; ++j) counts.push_back(count_over(j));
            rec.zeta = toric_zeta(D, counts, S.size());
        } else {
            for (int j = 1; j <= 2 * opt.singular_order; ++j) counts.push_back(count_over(j));
            rec.zeta = recurrence_reconstruct(counts, opt.singular_order);
        }
        out.push_back(std::move(rec));
    }
    return out;
}

BigInt moment_from_fibres(const std::vector<FibreRecord>& records, int d, int k) {
    BigInt total = 0;
    for (const auto& rec : records) {
        if ((d * k) % rec.degree) throw UsageError("fibre record of a degree not dividing d k");
        const int m = d * k / rec.degree;
        total += rec.degree * rec.zeta.counts(m).back();
    }
    return total;
}

RdResult cy2_R(int d, std::uint64_t q, int K) {
    const std::uint64_t p = prime_of(q);
    if (p == 0) throw UsageError("q must be a prime power");
    if (p == 3) throw UsageError("the family needs p != 3");
    if (d <= 1) return extract_R_d(d, q, {}, IntPolynomial::one());
    IntPolynomial prev = d >= 4 ? cy2_R(d - 2, q, 0).R : IntPolynomial::one();
    if (K <= 0) K = std::max(d - 1, 2);
    Family fam = cy_family(2, make_field(p, log_base(q, p)));
    auto moments = moment_sequence(fam, d, K);
    return extract_R_d(d, q, moments, prev);
}

std::vector<EulerRow> euler_factor_table(int d, const std::vector<std::uint64_t>& primes, int K) {
    std::vector<EulerRow> rows;
    for (auto p : primes) {
        EulerRow row;
        row.p = p;
        row.d = d;
        if (!is_prime(p)) {
            row.skipped = true;
            row.reason = "not prime";
        } else if (p == 3) {
            row.skipped = true;
            row.reason = "p divides n+1 = 3";
        } else {
            try {
                if (d == 1) {
                    const int KK = K > 0 ? K : 6;
                    Family fam = cy_family(2, make_field(p, 1));
                    row.moments = moment_sequence(fam, 1, KK);
                    row.zeta = recurrence_reconstruct(row.moments, KK / 2);
                    row.factor = row.zeta->numerator;
                } else {
                    row.rd = cy2_R(d, p, K);
                    row.factor = row.rd->R;
                    row.moments.clear();
                }
            } catch (const CapExceeded& e) {
                row.skipped = true;
                row.reason = std::string("cap exceeded: ") + e.what();
            } catch (const MathInconsistency& e) {
                row.skipped = true;
                row.reason = std::string("inconsistent: ") + e.what();
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace zetamill
