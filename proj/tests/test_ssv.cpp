#include <doctest.h>

#include <cmath>
#include <random>

#include "mudom/ssv.hpp"

using namespace mudom;

namespace {

std::mt19937_64 rng(2024);

CMatrix random_matrix(int n, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    CMatrix A(n);
    for (auto& e : A.entries) e = Complex{u(rng), u(rng)};
    return A;
}

CMatrix scaled_to_norm(int n, double target) {
    CMatrix A = random_matrix(n);
    double nrm = operator_norm(A);
    for (auto& e : A.entries) e *= target / nrm;
    return A;
}

}  // namespace

TEST_CASE("mu_lower_torus trivial cases") {
    auto t = build_table({1, 1});
    CHECK(mu_lower_torus(t, CMatrix(2)) == 0.0);

    // s = 1: mu equals the spectral radius
    auto g3 = build_table({3});
    CMatrix A = random_matrix(3);
    CHECK(mu_lower_torus(g3, A) == doctest::Approx(spectral_radius(A)));

    // s = n diagonal matrix: max |a_i|
    auto full = build_table({1, 1, 1});
    CMatrix D(3);
    D.at(0, 0) = {0.3, 0.1};
    D.at(1, 1) = {-0.9, 0.2};
    D.at(2, 2) = {0.5, 0};
    double expect = std::abs(D.at(1, 1));
    CHECK(mu_lower_torus(full, D) == doctest::Approx(expect).epsilon(1e-9));
}

TEST_CASE("mu_lower_torus homogeneity") {
    std::vector<std::vector<int>> shapes = {{2}, {1, 1}, {2, 1}};
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (const auto& b : shapes) {
        auto t = build_table(b);
        for (int trial = 0; trial < 20; ++trial) {
            CMatrix A = random_matrix(t.n);
            Complex lam{u(rng), u(rng)};
            CMatrix lA = A;
            for (auto& e : lA.entries) e *= lam;
            double m = mu_lower_torus(t, A);
            double lm = mu_lower_torus(t, lA);
            CHECK(std::abs(lm - std::abs(lam) * m) < 1e-9 * (1.0 + m));
        }
    }
}

TEST_CASE("mu sandwich rho <= mu_lower and mu_lower <= norm") {
    std::vector<std::vector<int>> shapes = {{2}, {1, 1}, {2, 1}};
    for (const auto& b : shapes) {
        auto t = build_table(b);
        for (int trial = 0; trial < 60; ++trial) {
            CMatrix A = random_matrix(t.n);
            double lower = mu_lower_torus(t, A);
            CHECK(spectral_radius(A) <= lower + 1e-8);
            CHECK(lower <= operator_norm(A) + 1e-8);
        }
    }
}

TEST_CASE("mu_bisection trivial and s = 1") {
    auto g2 = build_table({2});
    auto z = mu_bisection(g2, CMatrix(2));
    CHECK(z.lo == 0.0);
    CHECK(z.hi == 0.0);

    // rho(A) = 1 for [[0,2],[0.5,0]]; s = 1 so mu = rho
    CMatrix A(2);
    A.at(0, 1) = {2, 0};
    A.at(1, 0) = {0.5, 0};
    auto iv = mu_bisection(g2, A, 1e-3);
    CHECK(iv.lo <= 1.0 + 1e-6);
    CHECK(iv.hi >= 1.0 - 1e-6);
}

TEST_CASE("mu_bisection interval contains the torus lower bound") {
    std::vector<std::vector<int>> shapes = {{1, 1}, {2, 1}};
    for (const auto& b : shapes) {
        auto t = build_table(b);
        for (int trial = 0; trial < 8; ++trial) {
            CMatrix A = random_matrix(t.n);
            double lower = mu_lower_torus(t, A);
            auto iv = mu_bisection(t, A, 1e-3);
            CHECK(lower <= iv.hi + 1e-6);
            CHECK(iv.lo <= lower + 1e-3 + 1e-6);
        }
    }
}

TEST_CASE("in_omega sandwich behavior") {
    auto t = build_table({1, 1});
    CHECK(in_omega(t, scaled_to_norm(2, 0.8)) == Tristate::Yes);

    CMatrix big = scaled_to_norm(2, 3.0);
    // rho might still be < 1 for a very nonnormal matrix; force a diagonal
    CMatrix D(2);
    D.at(0, 0) = {1.5, 0};
    D.at(1, 1) = {0.2, 0};
    CHECK(in_omega(t, D) == Tristate::No);
}

TEST_CASE("in_omega identity is not strictly inside") {
    auto t = build_table({1, 1});
    auto v = in_omega(t, CMatrix::identity(2));
    CHECK(v != Tristate::Yes);
}

TEST_CASE("omega is balanced: scaling preserves Yes") {
    auto t = build_table({2, 1});
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        CMatrix A = scaled_to_norm(3, 0.9);
        REQUIRE(in_omega(t, A) == Tristate::Yes);
        double f = u(rng);
        CMatrix B = A;
        for (auto& e : B.entries) e *= f;
        CHECK(in_omega(t, B) == Tristate::Yes);
    }
}

TEST_CASE("psh probe passes with B = 0 and on random pairs") {
    auto t = build_table({1, 1});
    CMatrix A = scaled_to_norm(2, 0.7);
    auto eq = psh_circle_test(t, A, CMatrix(2), 0.1, 16);
    CHECK(eq.status == PshStatus::Pass);

    for (int trial = 0; trial < 5; ++trial) {
        CMatrix M = scaled_to_norm(2, 0.6);
        CMatrix B = random_matrix(2);
        auto rep = psh_circle_test(t, M, B, 0.1, 64);
        CHECK(rep.status != PshStatus::Fail);
    }
}

TEST_CASE("psh probe rejects tiny sample counts") {
    auto t = build_table({2});
    CHECK_THROWS_AS(psh_circle_test(t, CMatrix(2), CMatrix(2), 0.1, 8),
                    std::invalid_argument);
}
