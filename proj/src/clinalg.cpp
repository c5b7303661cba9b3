#include "mudom/clinalg.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "mudom/cpoly.hpp"

namespace mudom {

Complex det(const CMatrix& A) {
    int n = A.n;
    std::vector<Complex> m = A.entries;
    Complex d{1.0, 0.0};
    for (int col = 0; col < n; ++col) {
        int piv = col;
        double best = std::abs(m[(size_t)col * n + col]);
        for (int r = col + 1; r < n; ++r) {
            double v = std::abs(m[(size_t)r * n + col]);
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (best == 0.0) return Complex{0.0, 0.0};
        if (piv != col) {
            for (int c = col; c < n; ++c)
                std::swap(m[(size_t)piv * n + c], m[(size_t)col * n + c]);
            d = -d;
        }
        Complex p = m[(size_t)col * n + col];
        d *= p;
        for (int r = col + 1; r < n; ++r) {
            Complex f = m[(size_t)r * n + col] / p;
            if (f == Complex{0.0, 0.0}) continue;
            for (int c = col; c < n; ++c)
                m[(size_t)r * n + c] -= f * m[(size_t)col * n + c];
        }
    }
    return d;
}

namespace {

void combinations(int lo, int hi, int k, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
    if (k == 0) {
        out.push_back(cur);
        return;
    }
    for (int i = lo; i <= hi - k + 1; ++i) {
        cur.push_back(i);
        combinations(i + 1, hi, k - 1, cur, out);
        cur.pop_back();
    }
}

Complex submatrix_det(const CMatrix& A, const std::vector<int>& I) {
    int k = (int)I.size();
    CMatrix S(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) S.at(i, j) = A.at(I[(size_t)i], I[(size_t)j]);
    return det(S);
}

}  // namespace

std::vector<MinorFamily> minor_families(const MultiIndexTable& table) {
    std::vector<int> block_start((size_t)table.s, 0);
    for (int k = 1; k < table.s; ++k)
        block_start[(size_t)k] = block_start[(size_t)k - 1] + table.blocks[(size_t)k - 1];

    std::vector<MinorFamily> out;
    out.reserve((size_t)table.N);
    for (int j = 0; j < table.N; ++j) {
        MinorFamily fam;
        fam.alpha = table.alphas[(size_t)j];
        fam.index_sets = {{}};
        for (int k = 0; k < table.s; ++k) {
            int lo = block_start[(size_t)k];
            int hi = lo + table.blocks[(size_t)k] - 1;
            std::vector<std::vector<int>> picks;
            std::vector<int> cur;
            combinations(lo, hi, fam.alpha[(size_t)k], cur, picks);
            std::vector<std::vector<int>> merged;
            merged.reserve(fam.index_sets.size() * picks.size());
            for (const auto& head : fam.index_sets)
                for (const auto& tail : picks) {
                    std::vector<int> I = head;
                    I.insert(I.end(), tail.begin(), tail.end());
                    merged.push_back(std::move(I));
                }
            fam.index_sets = std::move(merged);
        }
        out.push_back(std::move(fam));
    }
    return out;
}

CPoint pi_map(const MultiIndexTable& table, const CMatrix& A) {
    if (A.n != table.n)
        throw std::invalid_argument("pi_map: matrix dimension must equal sum of blocks");
    auto fams = minor_families(table);
    CPoint x((size_t)table.N);
    for (int j = 0; j < table.N; ++j) {
        Complex sum{0.0, 0.0};
        for (const auto& I : fams[(size_t)j].index_sets) sum += submatrix_det(A, I);
        x[(size_t)j] = sum;
    }
    return x;
}

Complex det_expansion(const CMatrix& A, const CPoint& z) {
    int n = A.n;
    if ((int)z.size() != n)
        throw std::invalid_argument("det_expansion: z must have length n");
    if (n > 20)
        throw budget_error("det_expansion: dimension too large for subset enumeration");
    Complex total{1.0, 0.0};
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> I;
        Complex zI{1.0, 0.0};
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) {
                I.push_back(i);
                zI *= z[(size_t)i];
            }
        double sign = (I.size() % 2 == 0) ? 1.0 : -1.0;
        total += sign * submatrix_det(A, I) * zI;
    }
    return total;
}

std::vector<Complex> char_poly(const CMatrix& A) {
    int n = A.n;
    std::vector<Complex> c((size_t)n + 1, Complex{0.0, 0.0});
    c[(size_t)n] = Complex{1.0, 0.0};

    // Faddeev-LeVerrier.
    CMatrix M = A;
    for (int k = 1; k <= n; ++k) {
        Complex tr{0.0, 0.0};
        for (int i = 0; i < n; ++i) tr += M.at(i, i);
        Complex ck = -tr / (double)k;
        c[(size_t)(n - k)] = ck;
        if (k == n) break;
        CMatrix next(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Complex acc = (i == j) ? ck * Complex{1.0, 0.0} : Complex{0.0, 0.0};
                acc += M.at(i, j);
                next.at(i, j) = acc;
            }
        CMatrix prod(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Complex acc{0.0, 0.0};
                for (int l = 0; l < n; ++l) acc += A.at(i, l) * next.at(l, j);
                prod.at(i, j) = acc;
            }
        M = std::move(prod);
    }
    return c;
}

double spectral_radius(const CMatrix& A) {
    auto c = char_poly(A);
    // Strip zero eigenvalues first; they never decide the radius.
    size_t m = 0;
    double cmax = 0.0;
    for (const auto& v : c) cmax = std::max(cmax, std::abs(v));
    while (m < c.size() - 1 && std::abs(c[m]) <= 1e-14 * (1.0 + cmax)) ++m;
    if (m == c.size() - 1) return 0.0;
    std::vector<Complex> q(c.begin() + (long)m, c.end());
    auto roots = roots_univariate(q, 1e-12);
    double r = 0.0;
    for (const auto& z : roots) r = std::max(r, std::abs(z));
    return r;
}

double operator_norm(const CMatrix& A, double tol) {
    int n = A.n;
    double frob = 0.0;
    for (const auto& v : A.entries) frob += std::norm(v);
    if (frob == 0.0) return 0.0;

    // Power iteration on A^H A with a fixed-seed random start.
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    std::normal_distribution<double> g(0.0, 1.0);
    CPoint v((size_t)n);
    double vn2 = 0.0;
    for (auto& e : v) {
        e = Complex{g(rng), g(rng)};
        vn2 += std::norm(e);
    }
    for (auto& e : v) e /= std::sqrt(vn2);

    auto apply = [&](const CPoint& in) {
        CPoint Av((size_t)n, Complex{0.0, 0.0});
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) Av[(size_t)i] += A.at(i, j) * in[(size_t)j];
        CPoint out((size_t)n, Complex{0.0, 0.0});
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                out[(size_t)j] += std::conj(A.at(i, j)) * Av[(size_t)i];
        return out;
    };

    double prev = 0.0;
    for (int it = 0; it < 20000; ++it) {
        CPoint w = apply(v);
        double nrm2 = 0.0;
        for (const auto& e : w) nrm2 += std::norm(e);
        double nrm = std::sqrt(nrm2);
        if (nrm == 0.0) return 0.0;
        double lam = 0.0;
        for (size_t i = 0; i < w.size(); ++i)
            lam += (std::conj(v[i]) * w[i]).real();
        for (auto& e : w) e /= nrm;
        v = std::move(w);
        double sigma = std::sqrt(std::max(lam, 0.0));
        if (it > 2 && std::abs(sigma - prev) <= tol * (1.0 + sigma)) return sigma;
        prev = sigma;
    }
    return prev;
}

}  // namespace mudom
