#ifndef MUDOM_TYPES_HPP
#define MUDOM_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace mudom {

using Complex = std::complex<double>;
using CPoint = std::vector<Complex>;

// Numeric failure that is not a caller error (e.g. root finder did not
// converge within the iteration cap).
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computation would exceed a configured cell/search budget.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Integer power of a complex number, exact term count.
inline Complex cpow_int(Complex base, int e) {
    Complex r{1.0, 0.0};
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline double sqr(double v) { return v * v; }

}  // namespace mudom

#endif
