#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "gpinv/graph.hpp"
#include "gpinv/matrix.hpp"
#include "gpinv/resolvent.hpp"
#include "gpinv/spectral.hpp"

namespace gpinv {

/// Max-entry residuals of the four Moore-Penrose equations
///     AXA = A,  XAX = X,  (AX)^T = AX,  (XA)^T = XA
/// for a candidate X against A.
struct MpReport {
    double residual_axiom1 = 0.0; // ‖AXA − A‖∞
    double residual_axiom2 = 0.0; // ‖XAX − X‖∞
    double residual_axiom3 = 0.0; // ‖(AX)^T − AX‖∞
    double residual_axiom4 = 0.0; // ‖(XA)^T − XA‖∞
    double tolerance = 0.0;
    bool passed = false;

    double max_residual() const {
        return std::max(std::max(residual_axiom1, residual_axiom2),
                        std::max(residual_axiom3, residual_axiom4));
    }
};

inline MpReport mp_check(const SymMatrix& a, const SymMatrix& x, double tol) {
    if (a.dim() != x.dim()) throw std::invalid_argument("mp_check: dimension mismatch");
    if (!(tol > 0.0)) throw std::invalid_argument("mp_check: tolerance must be positive");
    const Matrix& am = a.mat();
    const Matrix& xm = x.mat();
    const Matrix ax = am * xm;
    const Matrix xa = xm * am;

    MpReport rep;
    rep.tolerance = tol;
    rep.residual_axiom1 = max_abs_diff(ax * am, am);
    rep.residual_axiom2 = max_abs_diff(xa * xm, xm);
    rep.residual_axiom3 = ax.max_asymmetry();
    rep.residual_axiom4 = xa.max_asymmetry();
    rep.passed = rep.max_residual() <= tol;
    return rep;
}

/// Probes the two defining variational properties of the pseudoinverse:
/// for random right-hand sides y, (a) no random candidate w beats X y as
/// a least-squares solution of A w ≈ y, and (b) X y carries no component
/// in the null space of A (minimal norm), the null space taken from the
/// spectral decomposition. Returns true iff every trial passes.
inline bool variational_check(const Graph& g, const SymMatrix& x, int trials,
                              std::uint64_t seed) {
    const auto n = static_cast<std::size_t>(g.order());
    if (x.dim() != n) throw std::invalid_argument("variational_check: dimension mismatch");
    if (trials < 1) throw std::invalid_argument("variational_check: trials must be positive");

    const auto decomp = jacobi_eigendecomposition(adjacency_matrix(g));
    const double zero_tol = 1e-8 * std::max(decomp.spectral_radius(), 1.0);
    std::vector<std::size_t> null_cols;
    for (std::size_t k = 0; k < n; ++k)
        if (std::abs(decomp.eigenvalues[k]) <= zero_tol) null_cols.push_back(k);

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    auto random_vec = [&]() {
        Vec v(n);
        for (double& e : v) e = dist(rng);
        return v;
    };

    for (int t = 0; t < trials; ++t) {
        const Vec y = random_vec();
        const Vec xy = x.apply(y);

        Vec res = apply_adjacency(g, xy);
        for (std::size_t i = 0; i < n; ++i) res[i] -= y[i];
        const double candidate = norm2(res);

        for (int p = 0; p < trials; ++p) {
            const Vec w = random_vec();
            Vec pr = apply_adjacency(g, w);
            for (std::size_t i = 0; i < n; ++i) pr[i] -= y[i];
            if (candidate > norm2(pr) + 1e-9) return false;
        }

        double null_sq = 0.0;
        for (std::size_t col : null_cols) {
            double c = 0.0;
            for (std::size_t k = 0; k < n; ++k) c += decomp.eigenvectors(k, col) * xy[k];
            null_sq += c * c;
        }
        if (std::sqrt(null_sq) > 1e-8 * norm2(xy)) return false;
    }
    return true;
}

enum class Singularity { nonsingular, singular };

struct RankTestResult {
    Singularity verdict = Singularity::singular;
    double witness = 0.0; // ‖R_λ⁻¹A² − I‖∞ at λ = lambda_cap
};

/// Large-lambda nonsingularity test: R_λ⁻¹A² tends to the orthogonal
/// projector onto the row space, which is the identity exactly when A is
/// nonsingular. A projector sits at entrywise distance either 0 or ≥ ~1
/// from I, so a single evaluation at a large lambda against a coarse
/// threshold decides the limit.
inline RankTestResult nonsingularity_test(const Graph& g, double lambda_cap = 1e6,
                                          double tol = 1e-3) {
    if (!(lambda_cap >= 1.0))
        throw std::invalid_argument("nonsingularity_test: lambda_cap must be >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("nonsingularity_test: tol must be positive");
    const auto n = static_cast<std::size_t>(g.order());
    const Resolvent r(g, lambda_cap);

    double witness = 0.0;
    for (int j = 1; j <= g.order(); ++j) {
        const Vec fj = neighbor_vector(g, j).values;
        const Vec a2_col = apply_adjacency(g, fj); // column j of A²
        const Vec m_col = r.solve(a2_col);
        for (std::size_t i = 0; i < n; ++i) {
            const double target = (i == static_cast<std::size_t>(j - 1)) ? 1.0 : 0.0;
            witness = std::max(witness, std::abs(m_col[i] - target));
        }
    }
    return {witness <= tol ? Singularity::nonsingular : Singularity::singular, witness};
}

} // namespace gpinv
