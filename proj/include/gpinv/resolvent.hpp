#pragma once

#include <span>
#include <stdexcept>

#include "gpinv/cholesky.hpp"
#include "gpinv/graph.hpp"
#include "gpinv/matrix.hpp"

namespace gpinv {

/// Reject lambda above this: 1/lambda would sink below meaningful
/// resolution next to integer degrees.
inline constexpr double kMaxLambda = 1e15;

/// The shifted square R = (1/lambda) I + A^2, assembled combinatorially:
/// diagonal 1/lambda + deg v_i, off-diagonal |N(v_i) ∩ N(v_j)|. Symmetric
/// positive definite for every lambda > 0, so the Cholesky factorization
/// is computed eagerly and cached; a factorization failure signals a
/// conditioning problem, not a mathematical one.
class Resolvent {
public:
    Resolvent(const Graph& g, double lambda)
        : lambda_(lambda), matrix_(assemble(g, lambda)), factor_(matrix_) {}

    double lambda() const noexcept { return lambda_; }
    std::size_t dim() const noexcept { return matrix_.dim(); }
    const SymMatrix& matrix() const noexcept { return matrix_; }
    const CholeskyFactor& factor() const noexcept { return factor_; }

    Vec solve(std::span<const double> b) const { return factor_.solve(b); }

private:
    static SymMatrix assemble(const Graph& g, double lambda) {
        if (!(lambda > 0.0)) throw std::invalid_argument("Resolvent: lambda must be positive");
        if (lambda > kMaxLambda)
            throw std::invalid_argument("Resolvent: lambda exceeds 1e15");
        const auto n = static_cast<std::size_t>(g.order());
        const double inv_lambda = 1.0 / lambda;
        SymMatrix r(n);
        for (int i = 1; i <= g.order(); ++i) {
            r.set(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i - 1),
                  inv_lambda + static_cast<double>(g.degree(i)));
            for (int j = i + 1; j <= g.order(); ++j) {
                const int c = g.common_neighbors(i, j);
                if (c != 0)
                    r.set(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1),
                          static_cast<double>(c));
            }
        }
        return r;
    }

    double lambda_;
    SymMatrix matrix_;
    CholeskyFactor factor_;
};

/// Max-entry gap between the combinatorial assembly and the directly
/// computed (1/lambda) I + A^2. Both sides are small integers plus the
/// same 1/lambda shift, so the gap is zero up to roundoff.
inline double resolvent_identity_gap(const Graph& g, double lambda) {
    const Resolvent r(g, lambda);
    const Matrix a = adjacency_matrix(g).mat();
    Matrix direct = a * a;
    for (std::size_t i = 0; i < direct.dim(); ++i) direct(i, i) += 1.0 / lambda;
    return max_abs_diff(r.matrix().mat(), direct);
}

} // namespace gpinv
