#pragma once

#include "zetamill/intpoly.hpp"
#include "zetamill/lattice.hpp"

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace zetamill {

// Z = prod factor^multiplicity; poles carry negative multiplicity
using FactorList = std::vector<std::pair<IntPolynomial, int>>;

struct ZetaFactorization {
    IntPolynomial numerator = IntPolynomial::one();
    IntPolynomial denominator = IntPolynomial::one();
    FactorList factors;
    std::string provenance;
    int order = 0;       // recurrence order found (distinct reciprocal roots and poles)
    bool tight = false;  // order reached the bound: more counts advised

    // N_1..N_K of exp(sum N_k T^k / k) = Z
    std::vector<BigInt> counts(int K) const;
};

ZetaFactorization from_factors(FactorList factors, std::string provenance = {});

// N_k contributions of a factor list: sum over (F, m) of -m * s_k(F)
std::vector<BigInt> factor_counts(const FactorList& factors, int K);

// Exact rational-function reconstruction from N_1..N_L. max_order bounds the number of
// distinct reciprocal roots and poles; L >= 2 * max_order is required.
ZetaFactorization recurrence_reconstruct(const std::vector<BigInt>& counts, int max_order);

// trivial factors of Z(U_f, T) for a full-dimensional Delta in dimension n
FactorList toric_trivial_factors(int n, std::uint64_t q);
// P_f from N_1..N_L (L >= d(Delta) - 1); extra counts are checked
IntPolynomial nontrivial_factor(const LatticePolytope& D, const std::vector<BigInt>& counts, std::uint64_t q);
ZetaFactorization toric_zeta(const LatticePolytope& D, const std::vector<BigInt>& counts, std::uint64_t q);

// Unknown factor U of degree r appears in Z as U^exponent (exponent = +1 or -1); known holds the
// N_k contributions of everything else.
IntPolynomial reconstruct_with_known(const std::vector<BigInt>& counts, const std::vector<BigInt>& known,
                                     int unknown_degree, int exponent);

struct WeilVerdict {
    bool pure = false;              // every root has modulus q^(w/2) for an integer w
    std::vector<int> weights;       // ascending, one per root (when pure)
    std::vector<double> moduli;     // |alpha| per root
    std::vector<double> rel_error;  // certified relative deviation per root
    std::vector<std::complex<double>> roots;
    std::string detail;
};
WeilVerdict weil_weights(const IntPolynomial& P, std::uint64_t q, double tolerance = 1e-6);

// sign s with T^r q^(wr/2) P(1/(q^w T)) = s P(T), or nullopt
std::optional<int> functional_equation_sign(const IntPolynomial& P, std::uint64_t q, int w, int r);
bool functional_equation_check(const IntPolynomial& P, std::uint64_t q, int w, int r);

ZetaFactorization moment_zeta(const std::vector<BigInt>& moments, int max_order);

struct CYTrivialFactors {
    FactorList A;  // as printed for the four parity cases
    FactorList S;  // formal product, never expanded against counts
};
CYTrivialFactors cy_trivial_factors(int n, int d, std::uint64_t q);

// complete known factor K_d of Z_d^{-1} = K_d R_d / R_{d-2}(qT) for the n = 2 family
FactorList cy2_known_factor(int d, std::uint64_t q);

struct RdResult {
    int d = 0;
    IntPolynomial R;
    WeilVerdict weights;
    bool functional_equation = false;
    int fe_sign = 0;
    int counts_used = 0;
    bool completed_by_fe = false;  // top coefficients filled from the functional equation
};
// moments M_d(k) for k = 1..L; R_{d-2} must be known
RdResult extract_R_d(int d, std::uint64_t q, const std::vector<BigInt>& moments, const IntPolynomial& R_dm2);

struct SlopeZeta {
    std::map<Rational, int> factors;  // slope -> exponent of (1 - U^slope T)
    SlopeZeta operator*(const SlopeZeta& o) const;
    SlopeZeta reciprocal() const;
    bool operator==(const SlopeZeta& o) const { return factors == o.factors; }
    bool is_identity() const { return factors.empty(); }
};
SlopeZeta slope_zeta(const FactorList& factors, std::uint64_t q);
std::string to_string(const SlopeZeta& S);

struct CongruenceViolation {
    int D = 0, k = 0, d1 = 0, d2 = 0;
};
struct CongruenceCandidate {
    int D = 0;
    int pairs = 0;  // pairs checked over all k
    std::vector<CongruenceViolation> violations;
};
struct CongruenceReport {
    std::vector<CongruenceCandidate> candidates;
    std::optional<int> smallest_passing;  // no violation and at least one pair checked
};
CongruenceReport congruence_scan(const std::map<int, BigInt>& moments, std::uint64_t l, int k_max,
                                 const std::vector<int>& D_candidates);

std::string to_string(const FactorList& factors);

}  // namespace zetamill
