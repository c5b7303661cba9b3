#include "mudom/cpoly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <limits>

namespace mudom {

namespace testing {
bool corrupt_eval_r = false;
}

namespace {

// Full coefficient array in mixed-radix layout, constant term included.
std::vector<Complex> coefficient_array(const MultiIndexTable& table,
                                       const CPoint& x) {
    std::vector<Complex> c((size_t)table.N + 1);
    c[0] = Complex{1.0, 0.0};
    for (int j = 0; j < table.N; ++j) {
        double sign = (table.degrees[j] % 2 == 0) ? 1.0 : -1.0;
        c[(size_t)j + 1] = sign * x[j];
    }
    if (testing::corrupt_eval_r && table.N >= 1) c[1] = -c[1];
    return c;
}

// Nested Horner: coordinate `dim` is the most significant radix digit of
// the index range [base, base + stride*(r+1)).
Complex horner_nd(const std::vector<Complex>& c, const std::vector<int>& blocks,
                  const CPoint& z, int dim, size_t base, size_t stride) {
    if (dim < 0) return c[base];
    int r = blocks[dim];
    size_t sub = stride / (size_t)(r + 1);
    Complex acc = horner_nd(c, blocks, z, dim - 1, base + sub * (size_t)r, sub);
    for (int k = r - 1; k >= 0; --k)
        acc = acc * z[dim] + horner_nd(c, blocks, z, dim - 1, base + sub * (size_t)k, sub);
    return acc;
}

Complex monomial(const CPoint& z, const Exponent& a, int from, int to) {
    Complex m{1.0, 0.0};
    for (int i = from; i < to; ++i) m *= cpow_int(z[i], a[i]);
    return m;
}

double poly_norm_inf(const std::vector<Complex>& c) {
    double m = 0.0;
    for (const auto& v : c) m = std::max(m, std::abs(v));
    return m;
}

Complex poly_eval(const std::vector<Complex>& c, Complex z) {
    Complex acc{0.0, 0.0};
    for (size_t k = c.size(); k-- > 0;) acc = acc * z + c[k];
    return acc;
}

constexpr double kGolden = 0.6180339887498949;

}  // namespace

Complex eval_R(const MultiIndexTable& table, const CPoint& x, const CPoint& z) {
    if ((int)x.size() != table.N)
        throw std::invalid_argument("eval_R: x must have length N");
    if ((int)z.size() != table.s)
        throw std::invalid_argument("eval_R: z must have length s");
    auto c = coefficient_array(table, x);
    return horner_nd(c, table.blocks, z, table.s - 1, 0, c.size());
}

Complex eval_split(const MultiIndexTable& table, const SplitTable& split,
                   const CPoint& x, const CPoint& z) {
    if ((int)x.size() != table.N)
        throw std::invalid_argument("eval_split: x must have length N");
    if ((int)z.size() != table.s)
        throw std::invalid_argument("eval_split: z must have length s");

    const int sp = split.s_prime;
    const int Np = split.N_prime;

    // R'_{x'}(z')
    Complex acc{1.0, 0.0};
    for (int j = 0; j < Np; ++j) {
        double sign = (table.degrees[j] % 2 == 0) ? 1.0 : -1.0;
        acc += sign * x[j] * monomial(z, table.alphas[j], 0, sp);
    }

    for (int k = 1; k <= split.M; ++k) {
        Complex inner = x[(size_t)k * (Np + 1) - 1];  // j = 0 term
        for (int j = 1; j <= Np; ++j) {
            double sign = (table.degrees[j - 1] % 2 == 0) ? 1.0 : -1.0;
            inner += sign * x[(size_t)k * (Np + 1) + j - 1] *
                     monomial(z, table.alphas[j - 1], 0, sp);
        }
        const Exponent& beta = split.betas[k - 1];
        Complex zb{1.0, 0.0};
        for (int i = 0; i < table.s - sp; ++i) zb *= cpow_int(z[sp + i], beta[i]);
        int bdeg = 0;
        for (int b : beta) bdeg += b;
        double sign = (bdeg % 2 == 0) ? 1.0 : -1.0;
        acc += sign * zb * inner;
    }
    return acc;
}

std::vector<Complex> roots_univariate(const std::vector<Complex>& coeffs,
                                      double tol) {
    double cmax = poly_norm_inf(coeffs);
    if (cmax == 0.0)
        throw std::invalid_argument("roots_univariate: zero polynomial");

    int deg = (int)coeffs.size() - 1;
    while (deg > 0 && std::abs(coeffs[(size_t)deg]) <= 1e-300) --deg;
    if (deg < 1)
        throw std::invalid_argument("roots_univariate: degree must be >= 1");

    std::vector<Complex> p(coeffs.begin(), coeffs.begin() + deg + 1);
    Complex lead = p[(size_t)deg];
    for (auto& v : p) v /= lead;

    // Start on a circle at the geometric-mean root radius.
    double r0 = std::pow(std::max(std::abs(p[0]), 1e-30), 1.0 / deg);
    r0 = std::clamp(r0, 1e-3, 1e3);
    std::vector<Complex> zs((size_t)deg);
    for (int i = 0; i < deg; ++i) {
        double th = 2.0 * M_PI * i / deg + 0.4;
        zs[(size_t)i] = r0 * Complex{std::cos(th), std::sin(th)};
    }

    const int cap = 200;
    bool converged = false;
    for (int it = 0; it < cap && !converged; ++it) {
        converged = true;
        for (int i = 0; i < deg; ++i) {
            Complex z = zs[(size_t)i];
            Complex pv{0.0, 0.0}, dv{0.0, 0.0};
            for (int k = deg; k >= 0; --k) {
                dv = dv * z + pv;
                pv = pv * z + p[(size_t)k];
            }
            if (std::abs(pv) <= 1e-16 * (1.0 + std::abs(z))) continue;
            Complex w = (dv != Complex{0.0, 0.0}) ? pv / dv
                                                  : Complex{1e-8, 1e-8};
            Complex sum{0.0, 0.0};
            for (int j = 0; j < deg; ++j) {
                if (j == i) continue;
                Complex d = z - zs[(size_t)j];
                if (std::abs(d) < 1e-30) d = Complex{1e-30, 0.0};
                sum += 1.0 / d;
            }
            Complex denom = 1.0 - w * sum;
            Complex corr = (std::abs(denom) > 1e-30) ? w / denom : w;
            zs[(size_t)i] = z - corr;
            if (std::abs(corr) > 1e-14 * (1.0 + std::abs(zs[(size_t)i])))
                converged = false;
        }
    }

    // backward-error acceptance: compare against sum_k |c_k| |z|^k so that
    // well-conditioned large-modulus roots are not rejected
    double allowed_rel = std::max(tol, 1e-9);
    for (const auto& z : zs) {
        double res = std::abs(poly_eval(coeffs, z));
        double mag = 0.0, zp = 1.0, za = std::abs(z);
        for (const auto& c : coeffs) {
            mag += std::abs(c) * zp;
            zp *= za;
        }
        if (res > allowed_rel * (1.0 + mag))
            throw numeric_error("roots_univariate: no convergence, residual " +
                                std::to_string(res));
    }
    return zs;
}

DiscResult all_roots_outside_closed_disc(const std::vector<Complex>& coeffs,
                                         double tol, double band) {
    if (coeffs.empty() || std::abs(coeffs[0] - Complex{1.0, 0.0}) > 1e-9)
        throw std::invalid_argument(
            "all_roots_outside_closed_disc: constant term must be 1");

    int deg = (int)coeffs.size() - 1;
    while (deg > 0 && std::abs(coeffs[(size_t)deg]) <= 1e-300) --deg;

    DiscResult res;
    if (deg == 0) {
        res.status = DiscStatus::Yes;
        res.min_modulus = std::numeric_limits<double>::infinity();
        return res;
    }

    auto roots = roots_univariate(
        std::vector<Complex>(coeffs.begin(), coeffs.begin() + deg + 1), tol);
    res.min_modulus = std::numeric_limits<double>::infinity();
    for (const auto& r : roots) {
        double m = std::abs(r);
        if (m < res.min_modulus) res.min_modulus = m;
        if (m < 1.0 - band && !res.witness) res.witness = r;
    }
    if (res.witness)
        res.status = DiscStatus::No;
    else if (res.min_modulus > 1.0 + band)
        res.status = DiscStatus::Yes;
    else
        res.status = DiscStatus::Marginal;
    return res;
}

std::vector<Complex> univariate_coeffs(const MultiIndexTable& table,
                                       const CPoint& x, const CPoint& z,
                                       int coord) {
    std::vector<Complex> c((size_t)table.blocks[coord] + 1, Complex{0.0, 0.0});
    c[0] = Complex{1.0, 0.0};
    for (int j = 0; j < table.N; ++j) {
        const Exponent& a = table.alphas[j];
        double sign = (table.degrees[j] % 2 == 0) ? 1.0 : -1.0;
        Complex m{1.0, 0.0};
        for (int i = 0; i < table.s; ++i)
            if (i != coord) m *= cpow_int(z[i], a[i]);
        c[(size_t)a[coord]] += sign * x[j] * m;
    }
    return c;
}

std::vector<Complex> disc_coeffs(const MultiIndexTable& table, const CPoint& x) {
    if (table.s != 1)
        throw std::invalid_argument("disc_coeffs: single-block table required");
    std::vector<Complex> c((size_t)table.N + 1);
    c[0] = Complex{1.0, 0.0};
    for (int j = 0; j < table.N; ++j)
        c[(size_t)j + 1] = ((j + 1) % 2 == 0 ? 1.0 : -1.0) * x[j];
    return c;
}

long long cell_budget_from_env(long long fallback) {
    if (const char* e = std::getenv("MUDOM_BUDGET")) {
        long long v = std::atoll(e);
        if (v > 0) return v;
    }
    return fallback;
}

namespace {

struct Cell {
    CPoint center;  // geometric center; clamped onto the polydisc at evaluation
    double delta;   // covering radius per coordinate
    int depth;
};

CPoint clamp_to_polydisc(const CPoint& z, double rho) {
    CPoint out = z;
    for (auto& c : out) {
        double m = std::abs(c);
        if (m > rho) c *= rho / m;
    }
    return out;
}

// Attempt to polish a near-zero of R into an exact zero by re-rooting in
// each coordinate separately; returns a witness inside the polydisc.
std::optional<CPoint> polish_zero(const MultiIndexTable& table, const CPoint& x,
                                  const CPoint& z0, double radius,
                                  double zero_tol) {
    for (int coord = 0; coord < table.s; ++coord) {
        auto c = univariate_coeffs(table, x, z0, coord);
        double cmax = poly_norm_inf(c);
        int deg = (int)c.size() - 1;
        while (deg > 0 && std::abs(c[(size_t)deg]) <= 1e-14 * (1.0 + cmax)) --deg;
        if (deg < 1) continue;
        std::vector<Complex> cc(c.begin(), c.begin() + deg + 1);
        std::vector<Complex> roots;
        try {
            roots = roots_univariate(cc, 1e-12);
        } catch (const numeric_error&) {
            continue;
        }
        for (const auto& r : roots) {
            if (std::abs(r) > radius + 1e-9) continue;
            CPoint w = z0;
            w[coord] = r;
            if (std::abs(eval_R(table, x, w)) <= zero_tol) return w;
        }
    }
    return std::nullopt;
}

}  // namespace

NonvanishingCertificate certify_nonvanishing(const MultiIndexTable& table,
                                             const CPoint& x,
                                             const CertifyOptions& opts) {
    if (opts.radius <= 0.0)
        throw std::invalid_argument("certify_nonvanishing: radius must be > 0");
    if (opts.resolution < 2)
        throw std::invalid_argument("certify_nonvanishing: resolution >= 2");
    if ((int)x.size() != table.N)
        throw std::invalid_argument("certify_nonvanishing: x must have length N");

    const double rho = opts.radius;
    const int K = opts.resolution;
    const long long budget = cell_budget_from_env(opts.cell_budget);

    NonvanishingCertificate cert;

    // Per-coordinate Lipschitz bounds on the closed polydisc of this radius.
    std::vector<double> lip((size_t)table.s, 0.0);
    for (int j = 0; j < table.N; ++j) {
        double aj = std::abs(x[j]);
        if (aj == 0.0) continue;
        double rpow = std::pow(rho, table.degrees[j] - 1);
        for (int i = 0; i < table.s; ++i)
            lip[(size_t)i] += aj * table.alphas[j][i] * rpow;
    }
    for (double l : lip) cert.lipschitz_bound += l;

    // Base centers per disc: K x K squares over [-rho,rho]^2, keeping those
    // meeting the disc, clamped onto it.
    const double h = 2.0 * rho / K;
    const double delta0 = h * M_SQRT1_2;  // half-diagonal of a side-h square
    std::vector<Complex> centers;
    for (int a = 0; a < K; ++a) {
        for (int b = 0; b < K; ++b) {
            Complex c{-rho + h * (a + 0.5), -rho + h * (b + 0.5)};
            if (std::abs(c) > rho + delta0) continue;  // square misses the disc
            centers.push_back(c);
        }
    }

    long long base_cells = 1;
    for (int i = 0; i < table.s; ++i) {
        base_cells *= (long long)centers.size();
        if (base_cells > budget)
            throw budget_error("certify_nonvanishing: base grid exceeds budget");
    }

    std::deque<Cell> queue;
    double min_gap = std::numeric_limits<double>::infinity();

    // Enumerate the product grid with an odometer.
    std::vector<size_t> idx((size_t)table.s, 0);
    CPoint z((size_t)table.s);
    long long visited = 0;
    bool done = centers.empty();
    double slack0 = 0.0;
    for (int i = 0; i < table.s; ++i) slack0 += lip[(size_t)i] * delta0;
    while (!done) {
        for (int i = 0; i < table.s; ++i) z[(size_t)i] = centers[idx[(size_t)i]];
        double val = std::abs(eval_R(table, x, clamp_to_polydisc(z, rho)));
        if (val <= slack0) {
            queue.push_back(Cell{z, delta0, 0});
        } else {
            min_gap = std::min(min_gap, val - slack0);
        }
        ++visited;

        int i = 0;
        while (i < table.s && ++idx[(size_t)i] == centers.size()) {
            idx[(size_t)i] = 0;
            ++i;
        }
        done = (i == table.s);
    }
    cert.grid_cells = visited;

    // Depth-first: a chain that cannot be certified reaches the depth cap
    // (or a polished zero) quickly instead of flooding the queue.
    int polish_attempts = 0;
    while (!queue.empty()) {
        Cell cell = std::move(queue.back());
        queue.pop_back();

        CPoint zc0 = clamp_to_polydisc(cell.center, rho);
        if (polish_attempts < 512) {
            ++polish_attempts;
            if (auto w = polish_zero(table, x, zc0, rho, opts.zero_tol)) {
                cert.status = CertStatus::Outside;
                cert.witness = std::move(*w);
                return cert;
            }
        }
        if (cell.depth >= opts.max_depth) {
            cert.status = CertStatus::Undetermined;
            cert.margin = 0.0;
            return cert;
        }

        // Split each coordinate square in four; children keep the covering
        // property with half the radius.
        double d = cell.delta / 2.0;
        double off = cell.delta * M_SQRT1_2 / 2.0;  // half the side of the parent
        int children = 1;
        for (int i = 0; i < table.s; ++i) children *= 4;
        double slack = 0.0;
        for (int i = 0; i < table.s; ++i) slack += lip[(size_t)i] * d;
        for (int c = 0; c < children; ++c) {
            CPoint zc = cell.center;
            int code = c;
            bool meets_disc = true;
            for (int i = 0; i < table.s; ++i) {
                int q = code & 3;
                code >>= 2;
                double dx = (q & 1) ? off : -off;
                double dy = (q & 2) ? off : -off;
                zc[(size_t)i] += Complex{dx, dy};
                if (std::abs(zc[(size_t)i]) > rho + d) meets_disc = false;
            }
            if (!meets_disc) continue;
            double v = std::abs(eval_R(table, x, clamp_to_polydisc(zc, rho)));
            ++cert.grid_cells;
            if (cert.grid_cells > budget)
                throw budget_error("certify_nonvanishing: refinement exceeds budget");
            if (v <= slack)
                queue.push_back(Cell{std::move(zc), d, cell.depth + 1});
            else
                min_gap = std::min(min_gap, v - slack);
        }
    }

    cert.status = CertStatus::Inside;
    cert.margin = std::isfinite(min_gap) ? min_gap : 1.0;
    return cert;
}

PsiValue eval_psi(const MultiIndexTable& table, const SplitTable& split,
                  const CPoint& x, const CPoint& z_prime) {
    if (split.s_prime != table.s - 1 || table.blocks[(size_t)table.s - 1] != 1)
        throw std::invalid_argument("eval_psi: split must peel one size-1 block");
    if ((int)x.size() != table.N)
        throw std::invalid_argument("eval_psi: x must have length N");
    if ((int)z_prime.size() != split.s_prime)
        throw std::invalid_argument("eval_psi: z' must have length s-1");

    const int Np = split.N_prime;
    Complex den{1.0, 0.0};
    for (int j = 0; j < Np; ++j) {
        double sign = (table.degrees[j] % 2 == 0) ? 1.0 : -1.0;
        Complex m{1.0, 0.0};
        for (int i = 0; i < split.s_prime; ++i)
            m *= cpow_int(z_prime[(size_t)i], table.alphas[j][i]);
        den += sign * x[j] * m;
    }

    Complex num = x[(size_t)Np];  // j = 0 term of the fiber sum
    for (int j = 1; j <= Np; ++j) {
        double sign = (table.degrees[j - 1] % 2 == 0) ? 1.0 : -1.0;
        Complex m{1.0, 0.0};
        for (int i = 0; i < split.s_prime; ++i)
            m *= cpow_int(z_prime[(size_t)i], table.alphas[j - 1][i]);
        num += sign * x[(size_t)(Np + 1 + j - 1)] * m;
    }

    PsiValue pv;
    pv.numerator = num;
    pv.denominator = den;
    if (std::abs(den) >= 1e-14) pv.value = num / den;
    return pv;
}

double sup_psi_torus(const MultiIndexTable& table, const SplitTable& split,
                     const CPoint& x, int grid, int refine_steps) {
    const int dims = split.s_prime;
    auto value_at = [&](const std::vector<double>& th) {
        CPoint z((size_t)dims);
        for (int i = 0; i < dims; ++i)
            z[(size_t)i] = Complex{std::cos(th[(size_t)i]), std::sin(th[(size_t)i])};
        PsiValue pv = eval_psi(table, split, x, z);
        if (!pv.value)
            throw std::runtime_error("sup_psi_torus: pole on the torus, x' not in E_{E'}");
        return std::abs(*pv.value);
    };

    std::vector<double> best_th((size_t)dims, 0.0);
    double best = -1.0;
    std::vector<int> idx((size_t)dims, 0);
    bool done = false;
    std::vector<double> th((size_t)dims);
    while (!done) {
        for (int i = 0; i < dims; ++i)
            th[(size_t)i] = 2.0 * M_PI * idx[(size_t)i] / grid;
        double v = value_at(th);
        if (v > best) {
            best = v;
            best_th = th;
        }
        int i = 0;
        while (i < dims && ++idx[(size_t)i] == grid) {
            idx[(size_t)i] = 0;
            ++i;
        }
        done = (i == dims);
    }

    // Coordinate-wise golden-section ascent around the best grid node.
    double span = 2.0 * M_PI / grid;
    for (int step = 0; step < refine_steps; ++step) {
        for (int i = 0; i < dims; ++i) {
            double lo = best_th[(size_t)i] - span;
            double hi = best_th[(size_t)i] + span;
            double a = hi - kGolden * (hi - lo);
            double b = lo + kGolden * (hi - lo);
            auto f = [&](double t) {
                std::vector<double> tt = best_th;
                tt[(size_t)i] = t;
                return value_at(tt);
            };
            double fa = f(a), fb = f(b);
            for (int k = 0; k < 24; ++k) {
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
        span *= 0.5;
        if (span < 1e-12) break;
    }
    return best;
}

}  // namespace mudom
