#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace incent {

using Real = double;
using Vec = std::vector<Real>;
using Mat = std::vector<Vec>;

/// Solves A x = b by Gaussian elimination with partial pivoting.
/// A is n x n, row-major; both arguments are copied.
inline Vec solve_dense(Mat a, Vec b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw std::invalid_argument("solve_dense: dimension mismatch");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
        if (std::fabs(a[piv][col]) < 1e-14)
            throw std::runtime_error("solve_dense: singular matrix");
        std::swap(a[col], a[piv]);
        std::swap(b[col], b[piv]);
        const Real inv = 1.0 / a[col][col];
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const Real f = a[r][col] * inv;
            if (f == 0.0) continue;
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    Vec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

}  // namespace incent
