#include "mudom/multiindex.hpp"

#include <numeric>

namespace mudom {

MultiIndexTable build_table(const std::vector<int>& blocks) {
    if (blocks.empty())
        throw std::invalid_argument("build_table: empty block list");
    for (int r : blocks)
        if (r < 1)
            throw std::invalid_argument("build_table: block sizes must be >= 1");
    if ((int)blocks.size() > kMaxBlocks)
        throw budget_error("build_table: more than " +
                           std::to_string(kMaxBlocks) + " blocks");

    MultiIndexTable t;
    t.blocks = blocks;
    t.s = (int)blocks.size();
    t.n = std::accumulate(blocks.begin(), blocks.end(), 0);
    if (t.n > kMaxTotalDegree)
        throw budget_error("build_table: total block size exceeds " +
                           std::to_string(kMaxTotalDegree));

    long long prod = 1;
    for (int r : blocks) prod *= r + 1;
    t.N = (int)(prod - 1);

    // Mixed-radix enumeration with the first coordinate least significant
    // produces exactly the required order: tuples compare at the highest
    // differing coordinate.
    Exponent a(t.s, 0);
    t.alphas.reserve(t.N);
    t.degrees.reserve(t.N);
    for (int v = 1; v <= t.N; ++v) {
        int j = 0;
        while (a[j] == blocks[j]) {
            a[j] = 0;
            ++j;
        }
        ++a[j];
        t.alphas.push_back(a);
        t.degrees.push_back(std::accumulate(a.begin(), a.end(), 0));
    }
    return t;
}

Ordering compare(const Exponent& a, const Exponent& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("compare: length mismatch");
    for (int j = (int)a.size() - 1; j >= 0; --j) {
        if (a[j] != b[j])
            return a[j] < b[j] ? Ordering::Less : Ordering::Greater;
    }
    return Ordering::Equal;
}

CPoint quasibalanced_act(const std::vector<int>& weights, Complex lambda,
                         const CPoint& x) {
    if (weights.size() != x.size())
        throw std::invalid_argument("quasibalanced_act: length mismatch");
    CPoint out(x.size());
    for (size_t i = 0; i < x.size(); ++i)
        out[i] = cpow_int(lambda, weights[i]) * x[i];
    return out;
}

SplitTable split_table(const MultiIndexTable& table, int s_prime) {
    if (s_prime < 1 || s_prime >= table.s)
        throw std::invalid_argument("split_table: s' must satisfy 1 <= s' < s");

    SplitTable sp;
    sp.parent = &table;
    sp.s_prime = s_prime;

    long long pp = 1;
    for (int j = 0; j < s_prime; ++j) pp *= table.blocks[j] + 1;
    sp.N_prime = (int)(pp - 1);
    sp.N_doubleprime = table.N - sp.N_prime;
    long long sm = 1;
    for (int j = s_prime; j < table.s; ++j) sm *= table.blocks[j] + 1;
    sp.M = (int)(sm - 1);

    // Run k (1-based) has constant weight |alpha^{k(N'+1)}| and fiber
    // exponent beta^k = trailing coordinates of that alpha.
    sp.fiber_weights.reserve(sp.N_doubleprime);
    sp.betas.reserve(sp.M);
    for (int k = 1; k <= sp.M; ++k) {
        const Exponent& anchor = table.alphas[(size_t)k * (sp.N_prime + 1) - 1];
        Exponent beta(anchor.begin() + s_prime, anchor.end());
        int w = table.degrees[(size_t)k * (sp.N_prime + 1) - 1];
        sp.betas.push_back(std::move(beta));
        for (int j = 0; j <= sp.N_prime; ++j) sp.fiber_weights.push_back(w);
    }
    return sp;
}

}  // namespace mudom
