#ifndef MUDOM_MULTIINDEX_HPP
#define MUDOM_MULTIINDEX_HPP

#include <vector>

#include "mudom/types.hpp"

namespace mudom {

// Hard caps; beyond them the exponent table size explodes (up to 2^n - 1).
inline constexpr int kMaxBlocks = 8;
inline constexpr int kMaxTotalDegree = 16;

enum class Ordering { Less, Equal, Greater };

using Exponent = std::vector<int>;

// The ordered exponent set A(r_1,...,r_s): every tuple in
// {0..r_1} x ... x {0..r_s} except the zero tuple, sorted so that the
// highest differing coordinate decides.  Index bookkeeping for everything
// downstream: the coefficient vector x of the defining polynomial lives in
// C^N with one slot per exponent.
struct MultiIndexTable {
    std::vector<int> blocks;        // r_1,...,r_s
    int s = 0;                      // block count
    int n = 0;                      // sum of blocks
    int N = 0;                      // prod(r_j+1) - 1
    std::vector<Exponent> alphas;   // alphas[j], 0-based, strictly increasing
    std::vector<int> degrees;       // |alphas[j]|
};

// Split of the block list into a prefix of s_prime blocks and the rest.
// Fiber weights m make the fibers over the prefix domain m-balanced.
struct SplitTable {
    const MultiIndexTable* parent = nullptr;
    int s_prime = 0;
    int N_prime = 0;        // prod_{j<=s'}(r_j+1) - 1
    int N_doubleprime = 0;  // N - N'
    int M = 0;              // prod_{j>s'}(r_j+1) - 1
    std::vector<int> fiber_weights;   // length N'', M runs of length N'+1
    std::vector<Exponent> betas;      // fiber exponents beta^1..beta^M
};

MultiIndexTable build_table(const std::vector<int>& blocks);

Ordering compare(const Exponent& a, const Exponent& b);

// (lambda^{m_1} x_1, ..., lambda^{m_k} x_k)
CPoint quasibalanced_act(const std::vector<int>& weights, Complex lambda,
                         const CPoint& x);

SplitTable split_table(const MultiIndexTable& table, int s_prime);

}  // namespace mudom

#endif
