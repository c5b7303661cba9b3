#include <doctest.h>

#include <cmath>
#include <random>

#include "mudom/cpoly.hpp"

using namespace mudom;

namespace {

std::mt19937_64 rng(1234);

CPoint random_point(size_t len, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    CPoint p(len);
    for (auto& e : p) e = Complex{u(rng), u(rng)};
    return p;
}

}  // namespace

TEST_CASE("eval_R basics") {
    auto t = build_table({2});
    CHECK(std::abs(eval_R(t, CPoint(2, {0, 0}), {Complex{0.3, 0.7}}) - 1.0) == 0.0);

    // boundary point of G_2: 1 - 2 + 1 = 0
    CPoint x = {{2, 0}, {1, 0}};
    CHECK(std::abs(eval_R(t, x, {Complex{1, 0}})) < 1e-15);

    CHECK_THROWS_AS(eval_R(t, CPoint(3), CPoint(1)), std::invalid_argument);
    CHECK_THROWS_AS(eval_R(t, CPoint(2), CPoint(2)), std::invalid_argument);
}

TEST_CASE("eval_R with zero fiber reduces to the prefix polynomial") {
    auto t = build_table({2, 1});
    auto sp = split_table(t, 1);
    auto tp = build_table({2});
    for (int trial = 0; trial < 50; ++trial) {
        CPoint xp = random_point(2);
        CPoint x = {xp[0], xp[1], {0, 0}, {0, 0}, {0, 0}};
        CPoint z = random_point(2);
        Complex lhs = eval_R(t, x, z);
        Complex rhs = eval_R(tp, xp, {z[0]});
        CHECK(std::abs(lhs - rhs) < 1e-13 * (1.0 + std::abs(rhs)));
    }
}

TEST_CASE("eval_split explicit tetrablock expansion") {
    auto t = build_table({1, 1});
    auto sp = split_table(t, 1);
    for (int trial = 0; trial < 50; ++trial) {
        CPoint x = random_point(3);
        CPoint z = random_point(2);
        Complex expect =
            (1.0 - x[0] * z[0]) - z[1] * (x[1] - x[2] * z[0]);
        CHECK(std::abs(eval_split(t, sp, x, z) - expect) < 1e-13);
        CHECK(std::abs(eval_R(t, x, z) - expect) < 1e-13);
    }
}

TEST_CASE("eval_split explicit E3 expansion") {
    auto t = build_table({2, 1});
    auto sp = split_table(t, 1);
    for (int trial = 0; trial < 50; ++trial) {
        CPoint x = random_point(5);
        CPoint z = random_point(2);
        Complex expect = (1.0 - x[0] * z[0] + x[1] * z[0] * z[0]) -
                         z[1] * (x[2] - x[3] * z[0] + x[4] * z[0] * z[0]);
        CHECK(std::abs(eval_split(t, sp, x, z) - expect) < 1e-13);
    }
}

TEST_CASE("eval_split agrees with eval_R on random tables") {
    std::vector<std::vector<int>> shapes = {{1, 1}, {2, 1}, {1, 1, 1}, {2, 2}, {1, 2, 1}};
    for (const auto& b : shapes) {
        auto t = build_table(b);
        for (int sp_idx = 1; sp_idx < t.s; ++sp_idx) {
            auto sp = split_table(t, sp_idx);
            for (int trial = 0; trial < 400; ++trial) {
                CPoint x = random_point((size_t)t.N);
                CPoint z = random_point((size_t)t.s);
                Complex a = eval_R(t, x, z);
                Complex c = eval_split(t, sp, x, z);
                CHECK(std::abs(a - c) < 1e-12 * (1.0 + std::abs(a)));
            }
        }
    }
}

TEST_CASE("quasibalanced identity R_{act(lambda,x)}(z) = R_x(lambda z)") {
    std::vector<std::vector<int>> shapes = {{2}, {1, 1}, {2, 1}, {1, 1, 1}};
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (const auto& b : shapes) {
        auto t = build_table(b);
        for (int trial = 0; trial < 500; ++trial) {
            CPoint x = random_point((size_t)t.N);
            CPoint z = random_point((size_t)t.s);
            Complex lam{u(rng), u(rng)};
            auto xs = quasibalanced_act(t.degrees, lam, x);
            CPoint lz = z;
            for (auto& e : lz) e *= lam;
            Complex a = eval_R(t, xs, z);
            Complex c = eval_R(t, x, lz);
            CHECK(std::abs(a - c) < 1e-12 * (1.0 + std::abs(a)));
        }
    }
}

TEST_CASE("roots_univariate simple and Vieta") {
    auto r = roots_univariate({{-1, 0}, {0, 0}, {1, 0}});  // z^2 - 1
    CHECK(r.size() == 2);
    std::sort(r.begin(), r.end(),
              [](Complex a, Complex b) { return a.real() < b.real(); });
    CHECK(std::abs(r[0] - Complex{-1, 0}) < 1e-10);
    CHECK(std::abs(r[1] - Complex{1, 0}) < 1e-10);

    // z^2 - 0.8 z + 0.15 = (z - 0.5)(z - 0.3)
    auto r2 = roots_univariate({{0.15, 0}, {-0.8, 0}, {1, 0}});
    std::sort(r2.begin(), r2.end(),
              [](Complex a, Complex b) { return a.real() < b.real(); });
    CHECK(std::abs(r2[0] - Complex{0.3, 0}) < 1e-9);
    CHECK(std::abs(r2[1] - Complex{0.5, 0}) < 1e-9);

    // triple root at zero
    auto r3 = roots_univariate({{0, 0}, {0, 0}, {0, 0}, {1, 0}});
    CHECK(r3.size() == 3);
    for (auto z : r3) CHECK(std::abs(z) < 1e-3);

    CHECK_THROWS_AS(roots_univariate({{0, 0}, {0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(roots_univariate({{1, 0}}), std::invalid_argument);
}

TEST_CASE("roots_univariate Vieta on random polynomials") {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int deg = 2; deg <= 10; ++deg) {
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<Complex> c((size_t)deg + 1);
            for (auto& e : c) e = Complex{u(rng), u(rng)};
            c[(size_t)deg] += Complex{2.0, 0.0};  // keep the leading term honest
            auto roots = roots_univariate(c);
            Complex sum{0, 0}, prod{1, 0};
            for (auto z : roots) {
                sum += z;
                prod *= z;
            }
            Complex esum = -c[(size_t)deg - 1] / c[(size_t)deg];
            Complex eprod = ((deg % 2) ? -1.0 : 1.0) * c[0] / c[(size_t)deg];
            CHECK(std::abs(sum - esum) < 1e-9 * (1.0 + std::abs(esum)));
            CHECK(std::abs(prod - eprod) < 1e-9 * (1.0 + std::abs(eprod)));
        }
    }
}

TEST_CASE("all_roots_outside_closed_disc") {
    // degree 0: R = 1
    auto y = all_roots_outside_closed_disc({{1, 0}});
    CHECK(y.status == DiscStatus::Yes);
    CHECK(std::isinf(y.min_modulus));

    // 1 - 0.8 z + 0.15 z^2: reciprocal roots 1/0.5, 1/0.3
    auto g = all_roots_outside_closed_disc({{1, 0}, {-0.8, 0}, {0.15, 0}});
    CHECK(g.status == DiscStatus::Yes);
    CHECK(g.min_modulus == doctest::Approx(2.0).epsilon(1e-8));

    // 1 - 2z + z^2: double root at 1
    auto m = all_roots_outside_closed_disc({{1, 0}, {-2, 0}, {1, 0}});
    CHECK(m.status == DiscStatus::Marginal);

    // 1 - 4z: root at 0.25
    auto n = all_roots_outside_closed_disc({{1, 0}, {-4, 0}});
    CHECK(n.status == DiscStatus::No);
    REQUIRE(n.witness.has_value());
    CHECK(std::abs(*n.witness - Complex{0.25, 0}) < 1e-10);

    CHECK_THROWS_AS(all_roots_outside_closed_disc({{2, 0}, {1, 0}}),
                    std::invalid_argument);
}

TEST_CASE("certify_nonvanishing on x = 0") {
    auto t = build_table({1, 1});
    auto cert = certify_nonvanishing(t, CPoint(3, {0, 0}), 1.0, 8);
    CHECK(cert.status == CertStatus::Inside);
    CHECK(cert.margin == doctest::Approx(1.0));
    CHECK(cert.lipschitz_bound == 0.0);
}

TEST_CASE("certify_nonvanishing finds the G2 boundary zero") {
    auto t = build_table({2});
    auto cert = certify_nonvanishing(t, CPoint{{2, 0}, {1, 0}}, 1.0, 16);
    CHECK(cert.status == CertStatus::Outside);
    REQUIRE(cert.witness.has_value());
    CHECK(std::abs((*cert.witness)[0] - Complex{1, 0}) < 1e-6);
}

TEST_CASE("certify_nonvanishing rejects bad parameters") {
    auto t = build_table({2});
    CPoint x(2, {0, 0});
    CHECK_THROWS_AS(certify_nonvanishing(t, x, 0.0, 8), std::invalid_argument);
    CHECK_THROWS_AS(certify_nonvanishing(t, x, 1.0, 1), std::invalid_argument);
}

TEST_CASE("certify_nonvanishing matches the disc-root test for s = 1") {
    auto t = build_table({3});
    std::uniform_real_distribution<double> u(-0.6, 0.6);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        CPoint x = random_point(3, 0.8);
        auto disc = all_roots_outside_closed_disc(disc_coeffs(t, x));
        if (disc.status == DiscStatus::Marginal) continue;
        auto cert = certify_nonvanishing(t, x, 1.0, 24);
        if (cert.status == CertStatus::Undetermined) continue;
        CHECK((cert.status == CertStatus::Inside) == (disc.status == DiscStatus::Yes));
        ++checked;
    }
    CHECK(checked > 30);
}

TEST_CASE("eval_psi tetrablock closed form") {
    auto t = build_table({1, 1});
    auto sp = split_table(t, 1);

    auto zerov = eval_psi(t, sp, CPoint(3, {0, 0}), {Complex{0.4, 0.1}});
    REQUIRE(zerov.value.has_value());
    CHECK(std::abs(*zerov.value) == 0.0);

    auto constv = eval_psi(t, sp, CPoint{{0, 0}, {0.5, 0}, {0, 0}}, {Complex{-0.7, 0.2}});
    REQUIRE(constv.value.has_value());
    CHECK(std::abs(*constv.value - Complex{0.5, 0}) < 1e-15);

    for (int trial = 0; trial < 50; ++trial) {
        CPoint x = random_point(3, 0.4);
        Complex z1{0.3, -0.2};
        auto pv = eval_psi(t, sp, x, {z1});
        Complex expect = (x[1] - x[2] * z1) / (1.0 - x[0] * z1);
        REQUIRE(pv.value.has_value());
        CHECK(std::abs(*pv.value - expect) < 1e-13);
        CHECK(std::abs(pv.value.value() * pv.denominator - pv.numerator) < 1e-13);
    }
}

TEST_CASE("eval_psi signals a pole without throwing") {
    auto t = build_table({1, 1});
    auto sp = split_table(t, 1);
    // denominator 1 - x1 z1 = 0 at z1 = 1 for x1 = 1
    auto pv = eval_psi(t, sp, CPoint{{1, 0}, {0.2, 0}, {0, 0}}, {Complex{1, 0}});
    CHECK(!pv.value.has_value());
}

TEST_CASE("sup_psi_torus known values") {
    auto t = build_table({1, 1});
    auto sp = split_table(t, 1);
    CHECK(sup_psi_torus(t, sp, CPoint{{0, 0}, {0.5, 0}, {0, 0}}) ==
          doctest::Approx(0.5).epsilon(1e-10));
    CHECK(sup_psi_torus(t, sp, CPoint(3, {0, 0})) == doctest::Approx(0.0));
    CHECK(sup_psi_torus(t, sp, CPoint{{0, 0}, {0, 0}, {0.9, 0}}) ==
          doctest::Approx(0.9).epsilon(1e-10));
}

TEST_CASE("sup_psi_torus with a nontrivial denominator") {
    auto t = build_table({1, 1});
    auto sp = split_table(t, 1);
    // Psi = x2 / (1 - x1 z1); max modulus on |z1|=1 is |x2| / (1 - |x1|).
    CPoint x = {{0.5, 0}, {0.2, 0}, {0, 0}};
    CHECK(sup_psi_torus(t, sp, x) == doctest::Approx(0.4).epsilon(1e-8));
}
