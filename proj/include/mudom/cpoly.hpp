#ifndef MUDOM_CPOLY_HPP
#define MUDOM_CPOLY_HPP

#include <optional>
#include <vector>

#include "mudom/multiindex.hpp"
#include "mudom/types.hpp"

namespace mudom {

enum class CertStatus { Inside, Outside, Undetermined };

// Result of the grid certification of R_x != 0 on a closed polydisc.
struct NonvanishingCertificate {
    CertStatus status = CertStatus::Undetermined;
    double margin = 0.0;              // min certified |R| when Inside
    std::optional<CPoint> witness;    // near-zero point when Outside
    long long grid_cells = 0;
    double lipschitz_bound = 0.0;     // sum_i L_i at the requested radius
};

struct PsiValue {
    Complex numerator{};
    Complex denominator{};
    std::optional<Complex> value;  // absent when the denominator is a pole
};

enum class DiscStatus { Yes, No, Marginal };

struct DiscResult {
    DiscStatus status = DiscStatus::Marginal;
    double min_modulus = 0.0;          // over all roots (inf if none)
    std::optional<Complex> witness;    // a root inside the disc when No
};

// R_x(z) = 1 + sum_j (-1)^{|alpha^j|} x_j z^{alpha^j}, evaluated by nested
// Horner over the mixed-radix coefficient layout of the table.
Complex eval_R(const MultiIndexTable& table, const CPoint& x, const CPoint& z);

// Same value through the split identity
// R_x = R'_{x'}(z') + sum_k (-1)^{|beta^k|} (z'')^{beta^k} * (inner sums).
Complex eval_split(const MultiIndexTable& table, const SplitTable& split,
                   const CPoint& x, const CPoint& z);

// All complex roots of sum_k coeffs[k] z^k by simultaneous (Aberth-style)
// iteration.  coeffs[0] is the constant term.
std::vector<Complex> roots_univariate(const std::vector<Complex>& coeffs,
                                      double tol = 1e-12);

// Classification of a disc-form polynomial p with p(0)=1: Yes iff every
// root has modulus > 1 + band, No iff some root has modulus < 1 - band.
DiscResult all_roots_outside_closed_disc(const std::vector<Complex>& coeffs,
                                         double tol = 1e-12,
                                         double band = 1e-7);

struct CertifyOptions {
    double radius = 1.0;
    int resolution = 16;       // base cells per real axis of each disc square
    int max_depth = 6;         // adaptive subdivision depth cap
    long long cell_budget = 100000000;  // overridable via MUDOM_BUDGET
    double zero_tol = 1e-9;    // |R| at an Outside witness
};

NonvanishingCertificate certify_nonvanishing(const MultiIndexTable& table,
                                             const CPoint& x,
                                             const CertifyOptions& opts);

inline NonvanishingCertificate certify_nonvanishing(
    const MultiIndexTable& table, const CPoint& x, double radius,
    int resolution) {
    CertifyOptions o;
    o.radius = radius;
    o.resolution = resolution;
    return certify_nonvanishing(table, x, o);
}

// Psi_{z'}(x) = P_{x''}(z') / R'_{x'}(z') for splits peeling one size-1
// trailing block (s'' = 1).
PsiValue eval_psi(const MultiIndexTable& table, const SplitTable& split,
                  const CPoint& x, const CPoint& z_prime);

// Lower bound on sup over the torus T^{s-1} of |Psi|; coarse grid followed
// by golden-section coordinate refinement.
double sup_psi_torus(const MultiIndexTable& table, const SplitTable& split,
                     const CPoint& x, int grid = 64, int refine_steps = 40);

// Coefficients of R_x viewed as a univariate polynomial in coordinate
// `coord` with the remaining coordinates frozen at z.
std::vector<Complex> univariate_coeffs(const MultiIndexTable& table,
                                       const CPoint& x, const CPoint& z,
                                       int coord);

// Coefficient vector of R_x for single-block tables: (1, -x_1, x_2, ...).
std::vector<Complex> disc_coeffs(const MultiIndexTable& table, const CPoint& x);

long long cell_budget_from_env(long long fallback);

namespace testing {
// Selftest canary: flips one sign inside eval_R so downstream identity
// suites must fail while it is set.
extern bool corrupt_eval_r;
}  // namespace testing

}  // namespace mudom

#endif
