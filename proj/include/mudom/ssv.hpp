#ifndef MUDOM_SSV_HPP
#define MUDOM_SSV_HPP

#include <optional>

#include "mudom/clinalg.hpp"
#include "mudom/cpoly.hpp"
#include "mudom/multiindex.hpp"

namespace mudom {

struct MuInterval {
    double lo = 0.0;
    double hi = 0.0;
    bool exact = true;  // false when certification stalled before tol
};

struct MuResult {
    double lower = 0.0;  // torus-search bound
    double upper = 0.0;  // operator norm
    std::optional<MuInterval> certified;
    int grid = 0;
};

enum class Tristate { Yes, No, Undetermined };

enum class PshStatus { Pass, Fail, Skip };

struct PshReport {
    PshStatus status = PshStatus::Skip;
    double deficit = 0.0;  // lhs - rhs when Fail
};

// max over sampled unimodular block-diagonal X of rho(XA); a lower bound
// for mu_E(A).
double mu_lower_torus(const MultiIndexTable& table, const CMatrix& A,
                      int grid = 32);

// Enclosing interval for mu_E(A) by bisection on the polydisc radius at
// which R_{pi(A)} stays nonvanishing.
MuInterval mu_bisection(const MultiIndexTable& table, const CMatrix& A,
                        double tol = 1e-3, int resolution = 16);

Tristate in_omega(const MultiIndexTable& table, const CMatrix& A);

// Sampled sub-mean-value probe for log mu_E along the circle A + r e^{it} B.
PshReport psh_circle_test(const MultiIndexTable& table, const CMatrix& A,
                          const CMatrix& B, double radius, int samples,
                          int grid = 32, double tolerance = 1e-3);

}  // namespace mudom

#endif
