#include "mudom/domains.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace mudom {

namespace {

bool all_trailing_ones(const std::vector<int>& blocks) {
    for (size_t k = 1; k < blocks.size(); ++k)
        if (blocks[k] != 1) return false;
    return true;
}

std::vector<int> prefix_blocks(const MultiIndexTable& table, int k) {
    return std::vector<int>(table.blocks.begin(), table.blocks.begin() + k);
}

MembershipResult roots_membership(const DomainHandle& handle, const CPoint& x) {
    MembershipResult res;
    res.method = MemberMethod::Roots;
    auto disc = all_roots_outside_closed_disc(disc_coeffs(handle.table, x), 1e-12,
                                              handle.settings.boundary_band);
    if (disc.status == DiscStatus::Yes) {
        res.status = Membership::Inside;
        res.margin = std::isinf(disc.min_modulus) ? 1.0 : disc.min_modulus - 1.0;
    } else if (disc.status == DiscStatus::No) {
        res.status = Membership::Outside;
        res.margin = 1.0 - disc.min_modulus;
        res.witness = CPoint{*disc.witness};
    } else {
        res.status = Membership::Boundary;
        res.margin = std::abs(disc.min_modulus - 1.0);
    }
    return res;
}

MembershipResult psi_membership(const DomainHandle& handle, const CPoint& x) {
    const auto& table = handle.table;
    MembershipResult res;
    res.method = MemberMethod::PsiRecursive;

    // Base level: the G_{r1} prefix by the disc-root test.
    DomainHandle base = {build_table(prefix_blocks(table, 1)),
                         DomainKind::SymmetrizedPolydisc, handle.settings};
    CPoint xb(x.begin(), x.begin() + base.table.N);
    MembershipResult cur = roots_membership(base, xb);
    if (cur.status != Membership::Inside) {
        res.status = cur.status;
        res.margin = cur.margin;
        return res;
    }
    double margin = cur.margin;

    for (int k = 2; k <= table.s; ++k) {
        auto tk = build_table(prefix_blocks(table, k));
        auto sk = split_table(tk, k - 1);
        CPoint xk(x.begin(), x.begin() + tk.N);
        double sup;
        try {
            sup = sup_psi_torus(tk, sk, xk, handle.settings.torus_grid,
                                handle.settings.refine_steps);
        } catch (const std::runtime_error&) {
            res.status = Membership::Undetermined;
            return res;
        }
        if (sup > 1.0 + handle.settings.boundary_band) {
            res.status = Membership::Outside;
            res.margin = sup - 1.0;
            return res;
        }
        if (sup >= 1.0 - handle.settings.boundary_band) {
            res.status = Membership::Boundary;
            res.margin = std::abs(sup - 1.0);
            return res;
        }
        margin = std::min(margin, 1.0 - sup);
    }
    res.status = Membership::Inside;
    res.margin = margin;
    return res;
}

MembershipResult grid_membership(const DomainHandle& handle, const CPoint& x) {
    MembershipResult res;
    res.method = MemberMethod::CertifiedGrid;
    NonvanishingCertificate cert;
    try {
        cert = certify_nonvanishing(handle.table, x, 1.0,
                                    handle.settings.resolution);
    } catch (const budget_error&) {
        res.status = Membership::Undetermined;
        return res;
    }
    switch (cert.status) {
        case CertStatus::Inside:
            res.status = Membership::Inside;
            res.margin = cert.margin;
            break;
        case CertStatus::Outside: {
            res.status = Membership::Outside;
            res.witness = cert.witness;
            // A zero exactly on the distinguished boundary is a closure point.
            double maxmod = 0.0;
            for (const auto& z : *cert.witness)
                maxmod = std::max(maxmod, std::abs(z));
            if (maxmod >= 1.0 - handle.settings.boundary_band)
                res.status = Membership::Boundary;
            break;
        }
        default:
            res.status = Membership::Undetermined;
    }
    return res;
}

}  // namespace

DomainHandle make_handle(const std::vector<int>& blocks, OracleSettings settings) {
    DomainHandle h;
    h.table = build_table(blocks);
    h.settings = settings;
    if (h.table.s == 1)
        h.kind = DomainKind::SymmetrizedPolydisc;
    else if (h.table.s == 2 && blocks[1] == 1)
        h.kind = DomainKind::MuQuotient;
    else
        h.kind = DomainKind::GeneralizedTetrablock;
    return h;
}

bool psi_recursive_applicable(const MultiIndexTable& table) {
    return table.s >= 2 && all_trailing_ones(table.blocks);
}

MembershipResult member(const DomainHandle& handle, const CPoint& x) {
    if ((int)x.size() != handle.table.N)
        throw std::invalid_argument("member: point must have length N");
    if (handle.table.s == 1) return roots_membership(handle, x);
    if (psi_recursive_applicable(handle.table)) return psi_membership(handle, x);
    return grid_membership(handle, x);
}

MembershipResult member_with_method(const DomainHandle& handle, const CPoint& x,
                                    MemberMethod method) {
    if ((int)x.size() != handle.table.N)
        throw std::invalid_argument("member: point must have length N");
    switch (method) {
        case MemberMethod::Roots:
            if (handle.table.s != 1)
                throw std::invalid_argument("Roots method needs a single block");
            return roots_membership(handle, x);
        case MemberMethod::PsiRecursive:
            if (!psi_recursive_applicable(handle.table))
                throw std::invalid_argument(
                    "PsiRecursive needs blocks (r1,1,...,1)");
            return psi_membership(handle, x);
        default:
            return grid_membership(handle, x);
    }
}

MembershipResult member_closure(const DomainHandle& handle, const CPoint& x) {
    const auto& table = handle.table;
    if (table.s != 1 && !psi_recursive_applicable(table))
        throw std::invalid_argument(
            "member_closure: closure is characterized only for blocks (r1,1,...,1)");

    MembershipResult res;
    if (table.s == 1) {
        res.method = MemberMethod::Roots;
        auto disc = all_roots_outside_closed_disc(disc_coeffs(table, x), 1e-12,
                                                  handle.settings.boundary_band);
        if (disc.status == DiscStatus::No) {
            res.status = Membership::Outside;
            res.witness = CPoint{*disc.witness};
            res.margin = 1.0 - disc.min_modulus;
        } else {
            res.status = Membership::Inside;
            res.margin = std::isinf(disc.min_modulus) ? 1.0
                                                      : disc.min_modulus - 1.0;
        }
        return res;
    }

    // x in closure iff act(degrees, r, x) is a member for every r < 1.
    static const double ladder[] = {0.5, 0.75, 0.9, 0.99, 0.999, 0.9999};
    res.method = MemberMethod::PsiRecursive;
    for (double r : ladder) {
        auto scaled = quasibalanced_act(table.degrees, Complex{r, 0.0}, x);
        auto m = member(handle, scaled);
        if (m.status == Membership::Outside) {
            res.status = Membership::Outside;
            res.margin = m.margin;
            return res;
        }
        if (m.status != Membership::Inside) {
            res.status = Membership::Undetermined;
            return res;
        }
    }
    res.status = Membership::Inside;
    return res;
}

MinkowskiResult minkowski(const DomainHandle& handle, const CPoint& x,
                          double tol) {
    MinkowskiResult out;
    double xmax = 0.0;
    for (const auto& v : x) xmax = std::max(xmax, std::abs(v));
    if (xmax == 0.0) return out;

    // classify act(degrees, lambda, x); the inside set of lambdas is an
    // interval [0, lambda*) because the domain is degree-balanced.
    auto inside_at = [&](double lam) -> int {
        auto m = member(handle,
                        quasibalanced_act(handle.table.degrees, Complex{lam, 0.0}, x));
        if (m.status == Membership::Inside) return 1;
        if (m.status == Membership::Undetermined) {
            out.widened = true;
            return 0;
        }
        return 0;
    };

    double lo = 0.0, hi = 0.0;
    if (inside_at(1.0)) {
        lo = 1.0;
        hi = 2.0;
        int guard = 0;
        while (inside_at(hi) && ++guard < 60) {
            lo = hi;
            hi *= 2.0;
        }
        if (guard >= 60) return MinkowskiResult{0.0, out.widened};
    } else {
        hi = 1.0;
        lo = 0.5;
        int guard = 0;
        while (!inside_at(lo) && ++guard < 60) {
            hi = lo;
            lo *= 0.5;
        }
        if (guard >= 60) {
            // never entered the domain above lambda ~ 1e-18; treat as infinite gauge
            return MinkowskiResult{std::numeric_limits<double>::infinity(),
                                   out.widened};
        }
    }

    // relative stop: rescaling x by 1/h must reproduce gauge 1 to ~tol
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

CPoint retract_theta(const DomainHandle& handle, const SplitTable& split,
                     const CPoint& x_prime, bool verify) {
    if ((int)x_prime.size() != split.N_prime)
        throw std::invalid_argument("retract_theta: x' must have length N'");
    CPoint out((size_t)handle.table.N, Complex{0.0, 0.0});
    std::copy(x_prime.begin(), x_prime.end(), out.begin());
    if (verify) {
        DomainHandle primed = make_handle(
            prefix_blocks(handle.table, split.s_prime), handle.settings);
        if (member(primed, x_prime).status == Membership::Outside)
            throw std::invalid_argument("retract_theta: x' is not a member");
    }
    return out;
}

CPoint retract_iota(const DomainHandle& handle, const SplitTable& split,
                    const CPoint& x, bool verify) {
    if ((int)x.size() != handle.table.N)
        throw std::invalid_argument("retract_iota: x must have length N");
    if (verify && member(handle, x).status == Membership::Outside)
        throw std::invalid_argument("retract_iota: x is not a member");
    return CPoint(x.begin(), x.begin() + split.N_prime);
}

CPoint tetra_theta(Complex s, Complex p) { return {s / 2.0, s / 2.0, p}; }

std::pair<Complex, Complex> tetra_iota(const CPoint& x) {
    if (x.size() != 3)
        throw std::invalid_argument("tetra_iota: tetrablock point has length 3");
    return {x[0] + x[1], x[2]};
}

MembershipResult fiber_member(const DomainHandle& handle, const SplitTable& split,
                              const CPoint& x_prime, const CPoint& x_dprime) {
    if ((int)x_prime.size() != split.N_prime ||
        (int)x_dprime.size() != split.N_doubleprime)
        throw std::invalid_argument("fiber_member: length mismatch");
    CPoint x = x_prime;
    x.insert(x.end(), x_dprime.begin(), x_dprime.end());
    return member(handle, x);
}

EmbeddingResult embed_symmetrized(const DomainHandle& handle, const CPoint& x) {
    const auto& table = handle.table;
    if ((int)x.size() != table.N)
        throw std::invalid_argument("embed_symmetrized: point must have length N");

    const int cap = 99;
    std::vector<int> m((size_t)table.s, 1);
    std::vector<long long> vals((size_t)table.N);
    long long attempts = 0;

    auto distinct = [&]() {
        for (int j = 0; j < table.N; ++j) {
            long long v = 0;
            for (int i = 0; i < table.s; ++i)
                v += (long long)m[(size_t)i] * table.alphas[(size_t)j][(size_t)i];
            vals[(size_t)j] = v;
        }
        auto sorted = vals;
        std::sort(sorted.begin(), sorted.end());
        return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    };

    // Lexicographic scan over all-odd weight vectors; the first hit is the
    // lexicographically smallest valid m.
    while (true) {
        if (++attempts > 4000000)
            throw budget_error("embed_symmetrized: weight search budget exceeded");
        if (distinct()) break;
        int i = table.s - 1;
        while (i >= 0 && m[(size_t)i] + 2 > cap) {
            m[(size_t)i] = 1;
            --i;
        }
        if (i < 0)
            throw budget_error("embed_symmetrized: no odd weights within cap");
        m[(size_t)i] += 2;
    }

    EmbeddingResult out;
    out.m_weights = m;
    long long M = 0;
    for (long long v : vals) M = std::max(M, v);
    out.M = (int)M;
    out.x_tilde.assign((size_t)M, Complex{0.0, 0.0});
    for (int j = 0; j < table.N; ++j)
        out.x_tilde[(size_t)vals[(size_t)j] - 1] = x[(size_t)j];
    return out;
}

CMatrix sample_matrix(int n, std::uint64_t seed, double norm_cap) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    CMatrix A(n);
    for (auto& e : A.entries) e = Complex{g(rng), g(rng)};
    double nrm = operator_norm(A);
    if (nrm == 0.0) return A;
    double target = norm_cap * std::max(u(rng), 1e-3);
    for (auto& e : A.entries) e *= target / nrm;
    return A;
}

CPoint sample_member(const DomainHandle& handle, std::uint64_t seed,
                     double norm_cap) {
    if (norm_cap <= 0.0 || norm_cap >= 1.0)
        throw std::invalid_argument("sample_member: norm_cap must be in (0,1)");
    return pi_map(handle.table, sample_matrix(handle.table.n, seed, norm_cap));
}

namespace {

// Search the open polydisc D^{dims} for a point where |Psi| exceeds 1,
// preferring the largest value found.
std::optional<CPoint> find_psi_exceeding(const MultiIndexTable& tk,
                                         const SplitTable& sk, const CPoint& xk,
                                         int angle_grid) {
    static const double radii[] = {0.3, 0.6, 0.8, 0.9, 0.95, 0.99, 0.995};
    const int dims = sk.s_prime;

    double best = -1.0;
    CPoint best_z((size_t)dims, Complex{0.0, 0.0});

    std::vector<int> idx((size_t)dims, 0);
    const int per_dim = (int)(sizeof(radii) / sizeof(radii[0])) * angle_grid;
    CPoint z((size_t)dims);
    bool done = false;
    while (!done) {
        for (int i = 0; i < dims; ++i) {
            int q = idx[(size_t)i];
            double r = radii[q / angle_grid];
            double th = 2.0 * M_PI * (q % angle_grid) / angle_grid;
            z[(size_t)i] = r * Complex{std::cos(th), std::sin(th)};
        }
        auto pv = eval_psi(tk, sk, xk, z);
        if (pv.value) {
            double v = std::abs(*pv.value);
            if (v > best) {
                best = v;
                best_z = z;
            }
        }
        int i = 0;
        while (i < dims && ++idx[(size_t)i] == per_dim) {
            idx[(size_t)i] = 0;
            ++i;
        }
        done = (i == dims);
    }

    // Local hill climb within |z_i| <= 0.999.
    double step = 0.05;
    for (int round = 0; round < 60; ++round) {
        bool improved = false;
        for (int i = 0; i < dims; ++i) {
            for (int d = 0; d < 4; ++d) {
                Complex delta = (d == 0)   ? Complex{step, 0}
                                : (d == 1) ? Complex{-step, 0}
                                : (d == 2) ? Complex{0, step}
                                           : Complex{0, -step};
                CPoint cand = best_z;
                cand[(size_t)i] += delta;
                if (std::abs(cand[(size_t)i]) > 0.999) continue;
                auto pv = eval_psi(tk, sk, xk, cand);
                if (pv.value && std::abs(*pv.value) > best) {
                    best = std::abs(*pv.value);
                    best_z = cand;
                    improved = true;
                }
            }
        }
        if (!improved) step *= 0.5;
        if (step < 1e-6) break;
    }

    if (best > 1.0) return best_z;
    return std::nullopt;
}

}  // namespace

AffineFunctional separating_hyperplane(const DomainHandle& handle,
                                       const CPoint& x0) {
    const auto& table = handle.table;
    if (table.s != 1 && !psi_recursive_applicable(table))
        throw std::invalid_argument(
            "separating_hyperplane: blocks (r1,1,...,1) required");
    if ((int)x0.size() != table.N)
        throw std::invalid_argument("separating_hyperplane: length mismatch");

    {
        auto cl = member_closure(handle, x0);
        if (cl.status == Membership::Inside)
            throw std::invalid_argument(
                "separating_hyperplane: x0 lies in the closure");
        if (cl.status == Membership::Undetermined)
            throw numeric_error(
                "separating_hyperplane: x0 within the boundary band");
    }

    AffineFunctional F;
    F.coeffs.assign((size_t)table.N, Complex{0.0, 0.0});

    // Base level: a zero of the prefix disc polynomial inside the open disc
    // gives the hyperplane {x : R'_{x'}(z*) = 0} directly.
    const int r1 = table.blocks[0];
    {
        auto base_table = build_table({r1});
        CPoint xb(x0.begin(), x0.begin() + r1);
        auto disc = all_roots_outside_closed_disc(disc_coeffs(base_table, xb),
                                                  1e-12,
                                                  handle.settings.boundary_band);
        if (disc.status == DiscStatus::No) {
            Complex zs = *disc.witness;
            F.c0 = Complex{1.0, 0.0};
            Complex zp = zs;
            for (int j = 0; j < r1; ++j) {
                F.coeffs[(size_t)j] = ((j + 1) % 2 == 0 ? 1.0 : -1.0) * zp;
                zp *= zs;
            }
            return F;
        }
    }

    // Find the first level whose prefix leaves the closure and cut with the
    // level set of Psi there.
    for (int k = 2; k <= table.s; ++k) {
        auto tk = build_table(prefix_blocks(table, k));
        CPoint xk(x0.begin(), x0.begin() + tk.N);
        if (k < table.s) {
            DomainHandle hk = {tk, DomainKind::GeneralizedTetrablock,
                               handle.settings};
            auto cl = member_closure(hk, xk);
            if (cl.status == Membership::Inside) continue;
            if (cl.status == Membership::Undetermined)
                throw numeric_error(
                    "separating_hyperplane: prefix within the boundary band");
        }
        auto sk = split_table(tk, k - 1);
        auto zs = find_psi_exceeding(tk, sk, xk, handle.settings.torus_grid);
        if (!zs)
            throw numeric_error(
                "separating_hyperplane: no |Psi| > 1 point located");
        auto pv = eval_psi(tk, sk, xk, *zs);
        if (!pv.value)
            throw numeric_error("separating_hyperplane: pole at the cut point");
        Complex omega = *pv.value;

        // F(x) = P_{x''}(z*) - omega R'_{x'}(z*), affine in x.
        const int Np = sk.N_prime;
        F.c0 = -omega;
        for (int j = 0; j < Np; ++j) {
            double sign = (tk.degrees[(size_t)j] % 2 == 0) ? 1.0 : -1.0;
            Complex mono{1.0, 0.0};
            for (int i = 0; i < sk.s_prime; ++i)
                mono *= cpow_int((*zs)[(size_t)i], tk.alphas[(size_t)j][(size_t)i]);
            F.coeffs[(size_t)j] -= omega * sign * mono;
        }
        F.coeffs[(size_t)Np] += Complex{1.0, 0.0};  // j = 0 fiber term
        for (int j = 1; j <= Np; ++j) {
            double sign = (tk.degrees[(size_t)j - 1] % 2 == 0) ? 1.0 : -1.0;
            Complex mono{1.0, 0.0};
            for (int i = 0; i < sk.s_prime; ++i)
                mono *=
                    cpow_int((*zs)[(size_t)i], tk.alphas[(size_t)j - 1][(size_t)i]);
            F.coeffs[(size_t)(Np + j)] += sign * mono;
        }
        return F;
    }

    throw numeric_error(
        "separating_hyperplane: closure test failed but no cutting level found");
}

}  // namespace mudom
