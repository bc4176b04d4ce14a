#pragma once

#include <cmath>
#include <span>
#include <stdexcept>

#include "gpinv/matrix.hpp"

namespace gpinv {

/// Lower-triangular Cholesky factor of a symmetric positive definite
/// matrix, with forward/back substitution solves against it.
class CholeskyFactor {
public:
    explicit CholeskyFactor(const SymMatrix& a) : l_(a.dim()) {
        const std::size_t n = a.dim();
        for (std::size_t j = 0; j < n; ++j) {
            double d = a(j, j);
            for (std::size_t k = 0; k < j; ++k) d -= l_(j, k) * l_(j, k);
            if (!(d > 0.0))
                throw std::domain_error("CholeskyFactor: matrix is not positive definite");
            l_(j, j) = std::sqrt(d);
            for (std::size_t i = j + 1; i < n; ++i) {
                double s = a(i, j);
                for (std::size_t k = 0; k < j; ++k) s -= l_(i, k) * l_(j, k);
                l_(i, j) = s / l_(j, j);
            }
        }
    }

    std::size_t dim() const noexcept { return l_.dim(); }
    const Matrix& lower() const noexcept { return l_; }

    /// Solves L L^T x = b.
    Vec solve(std::span<const double> b) const {
        const std::size_t n = l_.dim();
        if (b.size() != n) throw std::invalid_argument("CholeskyFactor::solve: length mismatch");
        Vec y(n);
        for (std::size_t i = 0; i < n; ++i) {
            double s = b[i];
            for (std::size_t k = 0; k < i; ++k) s -= l_(i, k) * y[k];
            y[i] = s / l_(i, i);
        }
        Vec x(n);
        for (std::size_t ii = n; ii-- > 0;) {
            double s = y[ii];
            for (std::size_t k = ii + 1; k < n; ++k) s -= l_(k, ii) * x[k];
            x[ii] = s / l_(ii, ii);
        }
        return x;
    }

private:
    Matrix l_;
};

} // namespace gpinv
