#pragma once

// Test-only helpers, kept independent of the library's solve paths so
// they can serve as oracles: a naive Gauss-Jordan inverse and a plain
// triple-loop multiply.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gpinv/graph.hpp"
#include "gpinv/matrix.hpp"

namespace testutil {

/// Dense inverse by Gauss-Jordan with partial pivoting. No relation to
/// the library's Cholesky path.
inline gpinv::Matrix brute_inverse(const gpinv::Matrix& in) {
    const std::size_t n = in.dim();
    gpinv::Matrix w = in;
    gpinv::Matrix inv = gpinv::Matrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t i = col + 1; i < n; ++i)
            if (std::abs(w(i, col)) > std::abs(w(piv, col))) piv = i;
        if (w(piv, col) == 0.0) throw std::domain_error("brute_inverse: singular");
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(w(piv, j), w(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        const double d = w(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            w(col, j) /= d;
            inv(col, j) /= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || w(i, col) == 0.0) continue;
            const double f = w(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                w(i, j) -= f * w(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

inline gpinv::Matrix naive_multiply(const gpinv::Matrix& a, const gpinv::Matrix& b) {
    const std::size_t n = a.dim();
    gpinv::Matrix c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < n; ++k) s += a(i, k) * b(k, j);
            c(i, j) = s;
        }
    return c;
}

/// Exact pseudoinverse of S_n per its closed form: (1/(n-1)) A.
inline gpinv::Matrix star_pinv(int n) {
    gpinv::Matrix m(static_cast<std::size_t>(n));
    for (int i = 2; i <= n; ++i) {
        m(0, static_cast<std::size_t>(i - 1)) = 1.0 / (n - 1);
        m(static_cast<std::size_t>(i - 1), 0) = 1.0 / (n - 1);
    }
    return m;
}

/// Exact pseudoinverse of K_4: diagonal -2/3, off-diagonal 1/3.
inline gpinv::Matrix k4_pinv() {
    gpinv::Matrix m(4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m(i, j) = i == j ? -2.0 / 3.0 : 1.0 / 3.0;
    return m;
}

} // namespace testutil
