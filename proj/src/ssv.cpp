#include "mudom/ssv.hpp"

#include <algorithm>
#include <cmath>

namespace mudom {

namespace {

constexpr double kGolden = 0.6180339887498949;

CMatrix scale_rows_by_blocks(const MultiIndexTable& table, const CMatrix& A,
                             const std::vector<double>& theta) {
    CMatrix XA = A;
    int row = 0;
    for (int k = 0; k < table.s; ++k) {
        Complex z{std::cos(theta[(size_t)k]), std::sin(theta[(size_t)k])};
        for (int r = 0; r < table.blocks[(size_t)k]; ++r, ++row)
            for (int c = 0; c < A.n; ++c) XA.at(row, c) *= z;
    }
    return XA;
}

}  // namespace

double mu_lower_torus(const MultiIndexTable& table, const CMatrix& A, int grid) {
    if (A.n != table.n)
        throw std::invalid_argument("mu_lower_torus: dimension mismatch");
    if (grid < 4)
        throw std::invalid_argument("mu_lower_torus: grid must be >= 4");

    auto value_at = [&](const std::vector<double>& th) {
        return spectral_radius(scale_rows_by_blocks(table, A, th));
    };

    // X = e^{i theta} I_n: rho(XA) is independent of theta.
    if (table.s == 1) return spectral_radius(A);

    std::vector<double> best_th((size_t)table.s, 0.0);
    double best = -1.0;
    std::vector<int> idx((size_t)table.s, 0);
    std::vector<double> th((size_t)table.s);
    bool done = false;
    while (!done) {
        for (int i = 0; i < table.s; ++i)
            th[(size_t)i] = 2.0 * M_PI * idx[(size_t)i] / grid;
        double v = value_at(th);
        if (v > best) {
            best = v;
            best_th = th;
        }
        int i = 0;
        while (i < table.s && ++idx[(size_t)i] == grid) {
            idx[(size_t)i] = 0;
            ++i;
        }
        done = (i == table.s);
    }

    double span = 2.0 * M_PI / grid;
    for (int sweep = 0; sweep < 3; ++sweep) {
        for (int i = 0; i < table.s; ++i) {
            double lo = best_th[(size_t)i] - span;
            double hi = best_th[(size_t)i] + span;
            auto f = [&](double t) {
                std::vector<double> tt = best_th;
                tt[(size_t)i] = t;
                return value_at(tt);
            };
            double a = hi - kGolden * (hi - lo);
            double b = lo + kGolden * (hi - lo);
            double fa = f(a), fb = f(b);
            for (int k = 0; k < 20; ++k) {
                if (fa < fb) {
                    lo = a;
                    a = b;
                    fa = fb;
                    b = lo + kGolden * (hi - lo);
                    fb = f(b);
                } else {
                    hi = b;
                    b = a;
                    fb = fa;
                    a = hi - kGolden * (hi - lo);
                    fa = f(a);
                }
            }
            double mid = 0.5 * (lo + hi);
            double fm = f(mid);
            if (fm > best) {
                best = fm;
                best_th[(size_t)i] = mid;
            }
        }
        span *= 0.25;
    }
    return best;
}

MuInterval mu_bisection(const MultiIndexTable& table, const CMatrix& A,
                        double tol, int resolution) {
    if (tol <= 0.0)
        throw std::invalid_argument("mu_bisection: tol must be > 0");

    CPoint x = pi_map(table, A);
    double xmax = 0.0;
    for (const auto& v : x) xmax = std::max(xmax, std::abs(v));
    if (xmax == 0.0) return MuInterval{0.0, 0.0, true};

    double nrm = operator_norm(A);
    if (nrm == 0.0) return MuInterval{0.0, 0.0, true};

    auto classify = [&](double r, int res) {
        CertifyOptions o;
        o.radius = r;
        o.resolution = res;
        try {
            return certify_nonvanishing(table, x, o);
        } catch (const budget_error&) {
            NonvanishingCertificate c;
            c.status = CertStatus::Undetermined;
            return c;
        }
    };

    // mu <= ||A||: for max|z_i| <= 1/(||A|| + eps) we get
    // ||A diag(z)|| < 1, so I - A diag(z) is nonsingular.  This is an
    // analytic nonvanishing certificate; no grid needed at the seed radius.
    double r_ok = 1.0 / (nrm + 1e-9);
    int res = resolution;
    bool exact = true;

    // Grow until a zero is caught (mu >= 1/r_bad) or mu is numerically 0.
    double r_bad = 2.0 * r_ok;
    {
        double rho = spectral_radius(A);
        if (rho > 0.0) r_bad = std::max(r_bad, 1.02 / rho);
        int tries = 0;
        bool found = false;
        while (tries < 40) {
            auto c = classify(r_bad, res);
            if (c.status == CertStatus::Outside) {
                found = true;
                break;
            }
            if (c.status == CertStatus::Inside) r_ok = r_bad;
            r_bad *= 2.0;
            ++tries;
        }
        if (!found) return MuInterval{0.0, 1.0 / r_ok, true};
    }

    for (int step = 0; step < 60 && (1.0 / r_ok - 1.0 / r_bad) > tol; ++step) {
        double r_mid = std::sqrt(r_ok * r_bad);
        auto c = classify(r_mid, res);
        if (c.status == CertStatus::Undetermined) {
            c = classify(r_mid, res * 2);
            if (c.status == CertStatus::Undetermined) {
                exact = false;
                break;
            }
        }
        if (c.status == CertStatus::Inside)
            r_ok = r_mid;
        else
            r_bad = r_mid;
    }
    return MuInterval{1.0 / r_bad, 1.0 / r_ok, exact};
}

Tristate in_omega(const MultiIndexTable& table, const CMatrix& A) {
    if (operator_norm(A) < 1.0 - 1e-9) return Tristate::Yes;
    if (mu_lower_torus(table, A) > 1.0 + 1e-9) return Tristate::No;

    CPoint x = pi_map(table, A);
    NonvanishingCertificate cert;
    try {
        cert = certify_nonvanishing(table, x, 1.0, 24);
    } catch (const budget_error&) {
        return Tristate::Undetermined;
    }
    if (cert.status == CertStatus::Inside) return Tristate::Yes;
    if (cert.status == CertStatus::Outside) {
        double maxmod = 0.0;
        for (const auto& z : *cert.witness) maxmod = std::max(maxmod, std::abs(z));
        if (maxmod < 1.0 - 1e-7) return Tristate::No;
    }
    return Tristate::Undetermined;
}

PshReport psh_circle_test(const MultiIndexTable& table, const CMatrix& A,
                          const CMatrix& B, double radius, int samples,
                          int grid, double tolerance) {
    if (samples < 16)
        throw std::invalid_argument("psh_circle_test: samples must be >= 16");

    double mu0 = mu_lower_torus(table, A, grid);
    if (mu0 <= 0.0) return PshReport{PshStatus::Skip, 0.0};

    double acc = 0.0;
    for (int k = 0; k < samples; ++k) {
        double th = 2.0 * M_PI * k / samples;
        Complex w = radius * Complex{std::cos(th), std::sin(th)};
        CMatrix P = A;
        for (size_t i = 0; i < P.entries.size(); ++i)
            P.entries[i] += w * B.entries[i];
        double mk = mu_lower_torus(table, P, grid);
        if (mk <= 0.0) return PshReport{PshStatus::Skip, 0.0};
        acc += std::log(mk);
    }
    double lhs = std::log(mu0);
    double rhs = acc / samples;
    if (lhs <= rhs + tolerance) return PshReport{PshStatus::Pass, 0.0};
    return PshReport{PshStatus::Fail, lhs - rhs};
}

}  // namespace mudom
