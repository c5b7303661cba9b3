#ifndef MUDOM_PENTABLOCK_HPP
#define MUDOM_PENTABLOCK_HPP

#include "mudom/domains.hpp"

namespace mudom {

struct PentaPoint {
    Complex a{};
    Complex s{};
    Complex p{};
};

// beta(s,p) = (s - conj(s) p) / (1 - |p|^2); pole at |p| = 1.
Complex penta_beta(Complex s, Complex p);

// |1 - (s conj(beta)/2) / (1 + sqrt(1 - |beta|^2))|, the fiber radius of the
// Hartogs domain over G_2.
double penta_bound(Complex s, Complex p);

MembershipResult member_penta(const PentaPoint& pt);
MembershipResult member_penta_closure(const PentaPoint& pt);

// m-Minkowski functional for m = (k,1,2), k >= 1.
MinkowskiResult penta_minkowski(const PentaPoint& pt, int k, double tol = 1e-6);

// m_r . (a,s,p) = (r^k a, r s, r^2 p)
PentaPoint penta_act(const PentaPoint& pt, int k, Complex lambda);

PentaPoint penta_theta(Complex s, Complex p);
std::pair<Complex, Complex> penta_iota(const PentaPoint& pt);

}  // namespace mudom

#endif
