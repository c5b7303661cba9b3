#include "mudom/selftest.hpp"

#include <cmath>
#include <random>

#include "mudom/domains.hpp"
#include "mudom/pentablock.hpp"
#include "mudom/prober.hpp"
#include "mudom/ssv.hpp"

namespace mudom {

namespace {

struct Checker {
    SuiteResult* suite = nullptr;
    void operator()(bool ok) {
        if (ok)
            ++suite->passed;
        else
            ++suite->failed;
    }
};

CMatrix random_matrix(std::mt19937_64& rng, int n, double scale) {
    std::uniform_real_distribution<double> u(-scale, scale);
    CMatrix A(n);
    for (auto& e : A.entries) e = Complex{u(rng), u(rng)};
    return A;
}

CPoint random_point(std::mt19937_64& rng, int n, double scale) {
    std::uniform_real_distribution<double> u(-scale, scale);
    CPoint x((size_t)n);
    for (auto& v : x) v = Complex{u(rng), u(rng)};
    return x;
}

Complex random_unit(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> a(0.0, 2.0 * M_PI);
    double th = a(rng);
    return {std::cos(th), std::sin(th)};
}

}  // namespace

SelftestSummary run_selftest(std::uint64_t seed) {
    SelftestSummary sum;
    const std::vector<std::vector<int>> shapes = {{2}, {3}, {1, 1}, {2, 1}};

    auto suite = [&](const std::string& name) {
        sum.suites.push_back(SuiteResult{name});
        return Checker{&sum.suites.back()};
    };

    {
        auto check = suite("table-order");
        for (const auto& b : shapes) {
            auto t = build_table(b);
            int expect = 1;
            for (int r : b) expect *= r + 1;
            check(t.N == expect - 1);
            for (size_t j = 1; j < t.alphas.size(); ++j)
                check(compare(t.alphas[j - 1], t.alphas[j]) == Ordering::Less);
        }
    }

    {
        auto check = suite("quasibalanced-identity");
        std::mt19937_64 rng(seed ^ 0x1111);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (const auto& b : shapes) {
            auto t = build_table(b);
            for (int trial = 0; trial < 50; ++trial) {
                CPoint x = random_point(rng, t.N, 1.0);
                CPoint z = random_point(rng, t.s, 1.0);
                Complex lam = u(rng) * random_unit(rng);
                CPoint lz(z.size());
                for (size_t i = 0; i < z.size(); ++i) lz[i] = lam * z[i];
                Complex lhs = eval_R(t, quasibalanced_act(t.degrees, lam, x), z);
                Complex rhs = eval_R(t, x, lz);
                check(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
            }
        }
    }

    {
        auto check = suite("split-identity");
        std::mt19937_64 rng(seed ^ 0x2222);
        for (const auto& b : std::vector<std::vector<int>>{{1, 1}, {2, 1},
                                                           {1, 1, 1}}) {
            auto t = build_table(b);
            auto sp = split_table(t, t.s - 1);
            for (int trial = 0; trial < 50; ++trial) {
                CPoint x = random_point(rng, t.N, 1.0);
                CPoint z = random_point(rng, t.s, 1.0);
                Complex lhs = eval_R(t, x, z);
                Complex rhs = eval_split(t, sp, x, z);
                check(std::abs(lhs - rhs) <= 1e-11 * (1.0 + std::abs(lhs)));
            }
        }
    }

    {
        auto check = suite("lemma-2.1");
        std::mt19937_64 rng(seed ^ 0x3333);
        for (const auto& b : shapes) {
            auto t = build_table(b);
            for (int trial = 0; trial < 40; ++trial) {
                CMatrix A = random_matrix(rng, t.n, 1.0);
                CPoint z = random_point(rng, t.s, 1.0);
                // expand z per block to the diagonal of length n
                CPoint zfull;
                for (int k = 0; k < t.s; ++k)
                    zfull.insert(zfull.end(), (size_t)t.blocks[(size_t)k],
                                 z[(size_t)k]);
                CMatrix M = CMatrix::identity(t.n);
                for (int r = 0; r < t.n; ++r)
                    for (int c = 0; c < t.n; ++c)
                        M.at(r, c) -= A.at(r, c) * zfull[(size_t)c];
                Complex direct = det(M);
                Complex viaR = eval_R(t, pi_map(t, A), z);
                check(std::abs(viaR - direct) <=
                      1e-11 * (1.0 + std::abs(direct)));
                Complex viaMinors = det_expansion(A, zfull);
                check(std::abs(viaMinors - direct) <=
                      1e-11 * (1.0 + std::abs(direct)));
            }
        }
    }

    {
        auto check = suite("mu-sandwich");
        std::mt19937_64 rng(seed ^ 0x4444);
        for (const auto& b : shapes) {
            auto t = build_table(b);
            for (int trial = 0; trial < 15; ++trial) {
                CMatrix A = random_matrix(rng, t.n, 1.0);
                double lower = mu_lower_torus(t, A, 24);
                check(spectral_radius(A) <= lower + 1e-8);
                check(lower <= operator_norm(A) + 1e-8);
            }
        }
    }

    {
        auto check = suite("pi-inclusion");
        std::mt19937_64 rng(seed ^ 0x5555);
        for (const auto& b : shapes) {
            auto h = make_handle(b);
            for (int trial = 0; trial < 15; ++trial) {
                CPoint x = sample_member(h, rng(), 0.9);
                check(member(h, x).status == Membership::Inside);
            }
        }
    }

    {
        auto check = suite("minkowski-homogeneity");
        std::mt19937_64 rng(seed ^ 0x6666);
        std::uniform_real_distribution<double> u(0.3, 1.0);
        auto h = make_handle({1, 1});
        for (int trial = 0; trial < 5; ++trial) {
            CPoint x = sample_member(h, rng(), 0.9);
            double g = minkowski(h, x, 1e-6).value;
            double f = u(rng);
            double gs =
                minkowski(h, quasibalanced_act(h.table.degrees, Complex{f, 0}, x),
                          1e-6)
                    .value;
            check(std::abs(gs - f * g) <= 2e-5 * (1.0 + g));
        }
    }

    {
        auto check = suite("pentablock-balanced");
        std::mt19937_64 rng(seed ^ 0x7777);
        std::uniform_real_distribution<double> u(0.0, 0.8);
        for (int trial = 0; trial < 20; ++trial) {
            Complex z1 = u(rng) * random_unit(rng);
            Complex z2 = u(rng) * random_unit(rng);
            Complex s = z1 + z2, p = z1 * z2;
            PentaPoint pt{0.8 * penta_bound(s, p) * random_unit(rng), s, p};
            check(member_penta(pt).status == Membership::Inside);
            Complex lam = u(rng) * random_unit(rng);
            for (int k = 1; k <= 3; ++k)
                check(member_penta(penta_act(pt, k, lam)).status ==
                      Membership::Inside);
        }
    }

    {
        auto check = suite("raster-topology");
        std::vector<std::uint8_t> ring = {
            0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 1, 0, 1, 0,
            0, 1, 1, 1, 0, 0, 0, 0, 0, 0,
        };
        auto [c, h] = raster_topology(ring, 5, 5);
        check(c == 1);
        check(h == 1);
        std::vector<std::uint8_t> discs = {1, 0, 1, 1, 0, 1};
        auto [c2, h2] = raster_topology(discs, 3, 2);
        check(c2 == 2);
        check(h2 == 0);
    }

    sum.ok = true;
    for (const auto& s : sum.suites)
        if (s.failed > 0) sum.ok = false;
    return sum;
}

}  // namespace mudom
