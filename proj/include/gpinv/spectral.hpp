#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "gpinv/matrix.hpp"

namespace gpinv {

/// Orthogonal eigendecomposition A = Q diag(eigenvalues) Q^T, eigenvalues
/// ascending, eigenvectors in the corresponding columns of Q.
struct SpectralDecomposition {
    Vec eigenvalues;
    Matrix eigenvectors;

    double spectral_radius() const {
        double r = 0.0;
        for (double w : eigenvalues) r = std::max(r, std::abs(w));
        return r;
    }
};

/// Cyclic Jacobi eigensolver for symmetric matrices. Sweeps row-by-row
/// over the strict upper triangle, annihilating each off-diagonal entry
/// with a Givens rotation, until the off-diagonal Frobenius mass falls to
/// roundoff. Quadratically convergent once the matrix is near diagonal;
/// at desk scale a handful of sweeps suffices.
///
/// Deliberately self-contained: shares no code with the Cholesky-based
/// solve path, so it can serve as an independent cross-check of it.
inline SpectralDecomposition jacobi_eigendecomposition(const SymMatrix& in, int max_sweeps = 100) {
    const std::size_t n = in.dim();
    Matrix a = in.mat();
    Matrix q = Matrix::identity(n);

    auto off_norm = [&]() {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a(i, j) * a(i, j);
        return std::sqrt(s);
    };
    double frob = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) frob += a(i, j) * a(i, j);
    frob = std::sqrt(frob);
    const double stop = 1e-15 * std::max(frob, 1.0);

    int sweep = 0;
    while (off_norm() > stop) {
        if (++sweep > max_sweeps)
            throw std::runtime_error("jacobi_eigendecomposition: no convergence after sweep cap");
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t qq = p + 1; qq < n; ++qq) {
                const double apq = a(p, qq);
                if (apq == 0.0) continue;
                // Rotation angle per Golub & Van Loan: tan of the half
                // system picked for the smaller-magnitude root, which
                // keeps the rotation closest to the identity.
                const double tau = (a(qq, qq) - a(p, p)) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, qq);
                    a(k, p) = c * akp - s * akq;
                    a(k, qq) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(qq, k);
                    a(p, k) = c * apk - s * aqk;
                    a(qq, k) = s * apk + c * aqk;
                }
                a(p, qq) = 0.0;
                a(qq, p) = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    const double qkp = q(k, p), qkq = q(k, qq);
                    q(k, p) = c * qkp - s * qkq;
                    q(k, qq) = s * qkp + c * qkq;
                }
            }
        }
    }

    // Sort eigenpairs ascending for a deterministic presentation.
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

    SpectralDecomposition d;
    d.eigenvalues.resize(n);
    d.eigenvectors = Matrix(n);
    for (std::size_t col = 0; col < n; ++col) {
        d.eigenvalues[col] = a(idx[col], idx[col]);
        for (std::size_t k = 0; k < n; ++k) d.eigenvectors(k, col) = q(k, idx[col]);
    }
    return d;
}

/// Number of eigenvalues with magnitude above zero_tol.
inline int rank_from(const SpectralDecomposition& d, double zero_tol) {
    int r = 0;
    for (double w : d.eigenvalues)
        if (std::abs(w) > zero_tol) ++r;
    return r;
}

/// Pseudoinverse of a decomposed matrix: Q Λ† Q^T where Λ† reciprocates
/// eigenvalues with |mu| > zero_tol and zeroes the rest.
inline SymMatrix reciprocated_pinv(const SpectralDecomposition& d, double zero_tol) {
    const std::size_t n = d.eigenvalues.size();
    Matrix scaled(n); // Q Λ†
    for (std::size_t col = 0; col < n; ++col) {
        const double w = d.eigenvalues[col];
        if (std::abs(w) <= zero_tol) continue;
        const double r = 1.0 / w;
        for (std::size_t k = 0; k < n; ++k) scaled(k, col) = d.eigenvectors(k, col) * r;
    }
    return SymMatrix::symmetrized(scaled * d.eigenvectors.transposed());
}

inline SymMatrix spectral_pinv(const SymMatrix& a, double zero_tol) {
    if (!(zero_tol > 0.0)) throw std::invalid_argument("spectral_pinv: zero_tol must be positive");
    return reciprocated_pinv(jacobi_eigendecomposition(a), zero_tol);
}

/// Default truncation: 1e-8 of the spectral radius. Adjacency spectra at
/// desk scale keep their nonzero eigenvalues far above this.
inline SymMatrix spectral_pinv(const SymMatrix& a) {
    const auto d = jacobi_eigendecomposition(a);
    const double radius = d.spectral_radius();
    if (radius == 0.0) return SymMatrix(a.dim());
    return reciprocated_pinv(d, 1e-8 * radius);
}

} // namespace gpinv
