#pragma once

#include "zetamill/counting.hpp"
#include "zetamill/zeta.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace zetamill {

// zeta function of one fibre, for a Frobenius orbit of parameters
struct FibreRecord {
    FieldElem y;          // representative, in the field of degree `degree` over the base
    FieldDesc y_field;
    int degree = 1;       // orbit length
    bool singular = false;
    ZetaFactorization zeta;  // over F_{q^degree}
};

struct FibreOptions {
    int singular_order = 3;    // bound on distinct reciprocal roots and poles of singular fibres
    int regularity_bound = 1;
};

// one record per closed point of A^1 whose degree divides k
std::vector<FibreRecord> fibre_zetas(const Family& fam, int k, const FibreOptions& opt = {});
// M_d(f (x) F_{q^k}) from the fibre zetas (records from fibre_zetas(fam, k))
BigInt moment_from_fibres(const std::vector<FibreRecord>& records, int d, int k);

struct EulerRow {
    std::uint64_t p = 0;
    int d = 0;
    bool skipped = false;
    std::string reason;
    std::vector<BigInt> moments;
    IntPolynomial factor;  // R_d for d >= 2, else the numerator of Z_1
    std::optional<ZetaFactorization> zeta;
    std::optional<RdResult> rd;
};
// built-in family x1 + x2 + 1/(x1 x2) - y; K moments per prime (0 = minimal)
std::vector<EulerRow> euler_factor_table(int d, const std::vector<std::uint64_t>& primes, int K = 0);

// R_d over F_q via R_{d-2}, ..., with K_j moments for each needed j
RdResult cy2_R(int d, std::uint64_t q, int K = 0);

}  // namespace zetamill
