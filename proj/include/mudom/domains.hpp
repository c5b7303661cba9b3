#ifndef MUDOM_DOMAINS_HPP
#define MUDOM_DOMAINS_HPP

#include <cstdint>
#include <optional>
#include <utility>

#include "mudom/clinalg.hpp"
#include "mudom/cpoly.hpp"
#include "mudom/multiindex.hpp"

namespace mudom {

enum class DomainKind { GeneralizedTetrablock, SymmetrizedPolydisc, MuQuotient };

enum class Membership { Inside, Outside, Boundary, Undetermined };

enum class MemberMethod { Roots, PsiRecursive, CertifiedGrid };

struct MembershipResult {
    Membership status = Membership::Undetermined;
    MemberMethod method = MemberMethod::CertifiedGrid;
    double margin = 0.0;               // distance from criticality, best effort
    std::optional<CPoint> witness;     // near-zero of R when Outside (grid path)
};

struct OracleSettings {
    int resolution = 16;       // certified-grid base resolution
    int torus_grid = 64;       // angles per torus coordinate for |Psi| sups
    int refine_steps = 12;
    double boundary_band = 1e-7;
};

// Immutable description of one concrete generalized tetrablock.
struct DomainHandle {
    MultiIndexTable table;
    DomainKind kind = DomainKind::GeneralizedTetrablock;
    OracleSettings settings;
};

struct EmbeddingResult {
    std::vector<int> m_weights;  // s odd positive integers
    int M = 0;
    CPoint x_tilde;              // point of the symmetrized polydisc G_M
};

// Affine functional x -> c0 + sum_j coeffs[j] x_j whose zero set separates
// an exterior point from the domain.
struct AffineFunctional {
    Complex c0{};
    CPoint coeffs;

    Complex operator()(const CPoint& x) const {
        Complex v = c0;
        for (size_t j = 0; j < coeffs.size(); ++j) v += coeffs[j] * x[j];
        return v;
    }
};

DomainHandle make_handle(const std::vector<int>& blocks,
                         OracleSettings settings = {});

// True when blocks have the (r1, 1, ..., 1) shape handled by the recursive
// Psi characterization.
bool psi_recursive_applicable(const MultiIndexTable& table);

MembershipResult member(const DomainHandle& handle, const CPoint& x);

// Force a particular method (for cross-method agreement checks).
MembershipResult member_with_method(const DomainHandle& handle, const CPoint& x,
                                    MemberMethod method);

// Closure test for blocks (r1,1,...,1) via the scaled family
// act(degrees, r, x) for r climbing towards 1.
MembershipResult member_closure(const DomainHandle& handle, const CPoint& x);

struct MinkowskiResult {
    double value = 0.0;
    bool widened = false;  // an Undetermined membership inside the bracket
};

MinkowskiResult minkowski(const DomainHandle& handle, const CPoint& x,
                          double tol = 1e-6);

// Theorem-ret retraction pair for a block-prefix split.
CPoint retract_theta(const DomainHandle& handle, const SplitTable& split,
                     const CPoint& x_prime, bool verify = false);
CPoint retract_iota(const DomainHandle& handle, const SplitTable& split,
                    const CPoint& x, bool verify = false);

// The special tetrablock <-> G_2 retraction pair.
CPoint tetra_theta(Complex s, Complex p);
std::pair<Complex, Complex> tetra_iota(const CPoint& x);

MembershipResult fiber_member(const DomainHandle& handle, const SplitTable& split,
                              const CPoint& x_prime, const CPoint& x_dprime);

// Smallest all-odd weight vector making <m, alpha^j> pairwise distinct and
// the induced point of G_M.
EmbeddingResult embed_symmetrized(const DomainHandle& handle, const CPoint& x);

// pi_E of a random matrix with operator norm <= norm_cap; always a member.
CPoint sample_member(const DomainHandle& handle, std::uint64_t seed,
                     double norm_cap);

CMatrix sample_matrix(int n, std::uint64_t seed, double norm_cap);

// Separating hyperplane through an exterior point of the closure
// (blocks (r1,1,...,1) only).
AffineFunctional separating_hyperplane(const DomainHandle& handle,
                                       const CPoint& x0);

}  // namespace mudom

#endif
