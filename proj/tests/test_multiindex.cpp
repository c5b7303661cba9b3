#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "mudom/multiindex.hpp"

using namespace mudom;

TEST_CASE("build_table blocks=[2,1]") {
    auto t = build_table({2, 1});
    CHECK(t.N == 5);
    CHECK(t.n == 3);
    std::vector<Exponent> expect = {{1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}};
    CHECK(t.alphas == expect);
    CHECK(t.degrees == std::vector<int>{1, 2, 1, 2, 3});
}

TEST_CASE("build_table single block is integer order") {
    auto t = build_table({5});
    CHECK(t.N == 5);
    for (int j = 0; j < 5; ++j) {
        CHECK(t.alphas[j] == Exponent{j + 1});
        CHECK(t.degrees[j] == j + 1);
    }
}

TEST_CASE("build_table tetrablock") {
    auto t = build_table({1, 1});
    CHECK(t.N == 3);
    std::vector<Exponent> expect = {{1, 0}, {0, 1}, {1, 1}};
    CHECK(t.alphas == expect);
    CHECK(t.degrees == std::vector<int>{1, 1, 2});
}

TEST_CASE("build_table rejects bad input") {
    CHECK_THROWS_AS(build_table({}), std::invalid_argument);
    CHECK_THROWS_AS(build_table({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(build_table({-1}), std::invalid_argument);
    CHECK_THROWS_AS(build_table({9, 9}), budget_error);  // n > 16
}

TEST_CASE("table invariants across block shapes") {
    std::vector<std::vector<int>> shapes = {{2}, {3}, {1, 1}, {2, 1},
                                            {1, 1, 1}, {3, 1}, {2, 2}, {1, 2, 1}};
    for (const auto& b : shapes) {
        auto t = build_table(b);
        long long prod = 1;
        for (int r : b) prod *= r + 1;
        CHECK(t.N == prod - 1);
        CHECK(t.n >= 1);
        CHECK(t.N >= t.n);
        CHECK(t.N <= (1 << t.n) - 1);

        std::set<Exponent> seen;
        for (int j = 0; j < t.N; ++j) {
            CHECK(seen.insert(t.alphas[j]).second);
            int deg = std::accumulate(t.alphas[j].begin(), t.alphas[j].end(), 0);
            CHECK(t.degrees[j] == deg);
            CHECK(deg >= 1);
            CHECK(deg <= t.n);
            if (j > 0)
                CHECK(compare(t.alphas[j - 1], t.alphas[j]) == Ordering::Less);
        }
        // N = n iff s == 1, N = 2^n - 1 iff s == n
        CHECK((t.N == t.n) == (t.s == 1));
        CHECK((t.N == (1 << t.n) - 1) == (t.s == t.n));
    }
}

TEST_CASE("compare examples and total order") {
    CHECK(compare({1, 0}, {2, 0}) == Ordering::Less);
    CHECK(compare({2, 0}, {0, 1}) == Ordering::Less);
    CHECK(compare({1, 1}, {1, 1}) == Ordering::Equal);
    CHECK(compare({0, 1}, {2, 0}) == Ordering::Greater);
    CHECK_THROWS_AS(compare({1}, {1, 0}), std::invalid_argument);
}

TEST_CASE("quasibalanced_act basics") {
    CPoint x = {{3.0, 1.0}, {5.0, 0.0}};
    auto id = quasibalanced_act({1, 2}, {1.0, 0.0}, x);
    CHECK(id == x);
    auto zero = quasibalanced_act({1, 2}, {0.0, 0.0}, x);
    CHECK(std::abs(zero[0]) == 0.0);
    CHECK(std::abs(zero[1]) == 0.0);
    auto half = quasibalanced_act({1, 2}, {0.5, 0.0}, CPoint{{1, 0}, {1, 0}});
    CHECK(std::abs(half[0] - Complex{0.5, 0.0}) < 1e-15);
    CHECK(std::abs(half[1] - Complex{0.25, 0.0}) < 1e-15);
    CHECK_THROWS_AS(quasibalanced_act({1}, {1.0, 0.0}, x), std::invalid_argument);
}

TEST_CASE("quasibalanced_act group law") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<int> w = {1, 2, 3, 1};
    for (int trial = 0; trial < 200; ++trial) {
        CPoint x(4);
        for (auto& e : x) e = Complex{u(rng), u(rng)};
        Complex lam{u(rng), u(rng)}, mu{u(rng), u(rng)};
        auto lhs = quasibalanced_act(w, lam * mu, x);
        auto rhs = quasibalanced_act(w, lam, quasibalanced_act(w, mu, x));
        for (int i = 0; i < 4; ++i)
            CHECK(std::abs(lhs[i] - rhs[i]) < 1e-12 * (1.0 + std::abs(lhs[i])));
    }
}

TEST_CASE("split_table examples") {
    {
        auto t = build_table({2, 1});
        auto sp = split_table(t, 1);
        CHECK(sp.N_prime == 2);
        CHECK(sp.N_doubleprime == 3);
        CHECK(sp.M == 1);
        CHECK(sp.fiber_weights == std::vector<int>{1, 1, 1});
        CHECK(sp.betas == std::vector<Exponent>{{1}});
    }
    {
        auto t = build_table({1, 1});
        auto sp = split_table(t, 1);
        CHECK(sp.N_prime == 1);
        CHECK(sp.fiber_weights == std::vector<int>{1, 1});
    }
    {
        auto t = build_table({1, 1, 1});
        auto sp = split_table(t, 2);
        CHECK(sp.N_prime == 3);
        CHECK(sp.N_doubleprime == 4);
        CHECK(sp.M == 1);
        CHECK(sp.fiber_weights == std::vector<int>{1, 1, 1, 1});
    }
}

TEST_CASE("split_table bookkeeping invariants") {
    std::vector<std::vector<int>> shapes = {{1, 1}, {2, 1}, {1, 1, 1}, {2, 2}, {3, 1}, {1, 2, 1}};
    for (const auto& b : shapes) {
        auto t = build_table(b);
        for (int sp_idx = 1; sp_idx < t.s; ++sp_idx) {
            auto sp = split_table(t, sp_idx);
            CHECK(sp.N_doubleprime == (sp.N_prime + 1) * sp.M);
            CHECK((int)sp.fiber_weights.size() == sp.N_doubleprime);
            // run structure and |beta^k| = |alpha^{k(N'+1)}|
            for (int k = 1; k <= sp.M; ++k) {
                int anchor = t.degrees[(size_t)k * (sp.N_prime + 1) - 1];
                int bdeg = std::accumulate(sp.betas[k - 1].begin(), sp.betas[k - 1].end(), 0);
                CHECK(bdeg == anchor);
                for (int j = 0; j <= sp.N_prime; ++j)
                    CHECK(sp.fiber_weights[(size_t)(k - 1) * (sp.N_prime + 1) + j] == anchor);
            }
            // prefix entries have zero trailing coordinates
            for (int j = 0; j < sp.N_prime; ++j)
                for (int v = sp_idx; v < t.s; ++v) CHECK(t.alphas[j][v] == 0);
        }
        CHECK_THROWS_AS(split_table(t, 0), std::invalid_argument);
        CHECK_THROWS_AS(split_table(t, t.s), std::invalid_argument);
    }
}
