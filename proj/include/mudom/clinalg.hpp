#ifndef MUDOM_CLINALG_HPP
#define MUDOM_CLINALG_HPP

#include <vector>

#include "mudom/multiindex.hpp"
#include "mudom/types.hpp"

namespace mudom {

// Dense square complex matrix, row-major.
struct CMatrix {
    int n = 0;
    std::vector<Complex> entries;

    CMatrix() = default;
    explicit CMatrix(int dim)
        : n(dim), entries((size_t)dim * (size_t)dim, Complex{0.0, 0.0}) {}

    Complex& at(int i, int j) { return entries[(size_t)i * n + j]; }
    const Complex& at(int i, int j) const { return entries[(size_t)i * n + j]; }

    static CMatrix identity(int dim) {
        CMatrix m(dim);
        for (int i = 0; i < dim; ++i) m.at(i, i) = Complex{1.0, 0.0};
        return m;
    }
};

// Index tuples I choosing exactly alpha_k rows/columns from block k.
struct MinorFamily {
    Exponent alpha;
    std::vector<std::vector<int>> index_sets;  // 0-based, strictly increasing
};

Complex det(const CMatrix& A);

std::vector<MinorFamily> minor_families(const MultiIndexTable& table);

// pi_E(A): component j sums det A_I over the family of alpha^j.
CPoint pi_map(const MultiIndexTable& table, const CMatrix& A);

// 1 + sum_j (-1)^j sum_{I in J^j} det(A_I) z_I, by exhaustive minor
// enumeration; equals det(I - A diag(z)).
Complex det_expansion(const CMatrix& A, const CPoint& z);

// Coefficients of det(tI - A), leading first is t^n: returned low-to-high.
std::vector<Complex> char_poly(const CMatrix& A);

double spectral_radius(const CMatrix& A);

double operator_norm(const CMatrix& A, double tol = 1e-10);

}  // namespace mudom

#endif
