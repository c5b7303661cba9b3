#include "mudom/pentablock.hpp"

#include <cmath>
#include <limits>

namespace mudom {

namespace {

constexpr double kBand = 1e-9;

const DomainHandle& g2_handle() {
    static const DomainHandle h = make_handle({2});
    return h;
}

CPoint sp_point(const PentaPoint& pt) { return {pt.s, pt.p}; }

}  // namespace

Complex penta_beta(Complex s, Complex p) {
    double pa = std::abs(p);
    if (std::abs(pa - 1.0) <= 1e-12)
        throw numeric_error("penta_beta: pole at |p| = 1");
    return (s - std::conj(s) * p) / (1.0 - pa * pa);
}

double penta_bound(Complex s, Complex p) {
    Complex b = penta_beta(s, p);
    double one_minus = 1.0 - std::norm(b);
    if (one_minus < 0.0) {
        if (one_minus < -1e-9)
            throw numeric_error(
                "penta_bound: |beta| > 1 in an inconsistent state");
        one_minus = 0.0;
    }
    return std::abs(1.0 - 0.5 * s * std::conj(b) / (1.0 + std::sqrt(one_minus)));
}

MembershipResult member_penta(const PentaPoint& pt) {
    MembershipResult res;
    res.method = MemberMethod::Roots;
    auto base = member(g2_handle(), sp_point(pt));
    if (base.status == Membership::Outside) {
        res.status = Membership::Outside;
        res.margin = base.margin;
        return res;
    }
    double bound;
    try {
        bound = penta_bound(pt.s, pt.p);
    } catch (const numeric_error&) {
        // fiber radius degenerates on |p| = 1; the base is not in G_2 then
        res.status =
            (base.status == Membership::Boundary) ? Membership::Boundary
                                                  : Membership::Undetermined;
        return res;
    }
    double d = bound - std::abs(pt.a);
    if (base.status == Membership::Boundary) {
        res.status = (d < -kBand) ? Membership::Outside : Membership::Boundary;
        res.margin = std::abs(d);
        return res;
    }
    if (d > kBand)
        res.status = Membership::Inside;
    else if (d < -kBand)
        res.status = Membership::Outside;
    else
        res.status = Membership::Boundary;
    res.margin = std::abs(d);
    return res;
}

MembershipResult member_penta_closure(const PentaPoint& pt) {
    MembershipResult res;
    res.method = MemberMethod::Roots;
    auto base = member_closure(g2_handle(), sp_point(pt));
    if (base.status == Membership::Outside) {
        res.status = Membership::Outside;
        res.margin = base.margin;
        return res;
    }
    double bound;
    try {
        bound = penta_bound(pt.s, pt.p);
    } catch (const numeric_error&) {
        res.status = Membership::Undetermined;
        return res;
    }
    double d = bound - std::abs(pt.a);
    res.status = (d >= -kBand) ? Membership::Inside : Membership::Outside;
    res.margin = std::abs(d);
    return res;
}

PentaPoint penta_act(const PentaPoint& pt, int k, Complex lambda) {
    return {cpow_int(lambda, k) * pt.a, lambda * pt.s, lambda * lambda * pt.p};
}

MinkowskiResult penta_minkowski(const PentaPoint& pt, int k, double tol) {
    if (k < 1)
        throw std::invalid_argument("penta_minkowski: k must be >= 1");
    MinkowskiResult out;
    if (pt.a == Complex{} && pt.s == Complex{} && pt.p == Complex{}) return out;

    auto inside_at = [&](double lam) {
        return member_penta(penta_act(pt, k, Complex{lam, 0.0})).status ==
               Membership::Inside;
    };

    double lo, hi;
    if (inside_at(1.0)) {
        lo = 1.0;
        hi = 2.0;
        int guard = 0;
        while (inside_at(hi) && ++guard < 60) {
            lo = hi;
            hi *= 2.0;
        }
        if (guard >= 60) return out;
    } else {
        hi = 1.0;
        lo = 0.5;
        int guard = 0;
        while (!inside_at(lo) && ++guard < 60) {
            hi = lo;
            lo *= 0.5;
        }
        if (guard >= 60) {
            out.value = std::numeric_limits<double>::infinity();
            return out;
        }
    }
    while (1.0 / lo - 1.0 / hi > tol / hi) {
        double mid = 0.5 * (lo + hi);
        if (inside_at(mid))
            lo = mid;
        else
            hi = mid;
    }
    out.value = 0.5 * (1.0 / lo + 1.0 / hi);
    return out;
}

PentaPoint penta_theta(Complex s, Complex p) {
    if (member(g2_handle(), {s, p}).status != Membership::Inside)
        throw std::invalid_argument("penta_theta: (s,p) is not in G_2");
    return {Complex{0.0, 0.0}, s, p};
}

std::pair<Complex, Complex> penta_iota(const PentaPoint& pt) {
    if (member_penta(pt).status != Membership::Inside)
        throw std::invalid_argument("penta_iota: point is not in the pentablock");
    return {pt.s, pt.p};
}

}  // namespace mudom
