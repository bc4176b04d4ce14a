#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <thread>
#include <vector>

#include "gpinv/graph.hpp"
#include "gpinv/matrix.hpp"
#include "gpinv/resolvent.hpp"
#include "gpinv/verify.hpp"

namespace gpinv {

/// Geometric lambda schedule and stopping rules for the regularization
/// path. The error of an iterate decays like 1/lambda, so geometric steps
/// deliver uniformly spaced accuracy digits; the cap keeps the resolvent
/// condition number (≈ 1 + lambda·mu_max²) inside double precision.
struct PathConfig {
    double lambda_start = 1.0;
    double lambda_ratio = 10.0;
    double lambda_cap = 1e8;
    double tol = 1e-9; // max-entry change between consecutive iterates
    bool extrapolate = true;

    void validate() const {
        if (!(lambda_start > 0.0)) throw std::invalid_argument("PathConfig: lambda_start <= 0");
        if (!(lambda_ratio > 1.0)) throw std::invalid_argument("PathConfig: lambda_ratio <= 1");
        if (!(lambda_cap >= lambda_start))
            throw std::invalid_argument("PathConfig: lambda_cap < lambda_start");
        if (!(tol > 0.0)) throw std::invalid_argument("PathConfig: tol <= 0");
    }
};

struct PinvResult {
    SymMatrix pinv;
    double final_lambda = 0.0;
    int iterations = 0;
    MpReport mp_residuals;
    int rank_estimate = 0;
};

/// Schedule hit the lambda cap with the iterates still moving more than
/// tol and extrapolation disabled. Carries the last iterate so callers
/// can still inspect or emit it.
class NonConvergence : public std::runtime_error {
public:
    NonConvergence(SymMatrix last, double achieved_diff, double final_lambda)
        : std::runtime_error("pinv: lambda cap reached before the iterates settled"),
          last_iterate_(std::move(last)),
          achieved_diff_(achieved_diff),
          final_lambda_(final_lambda) {}

    const SymMatrix& last_iterate() const noexcept { return last_iterate_; }
    double achieved_diff() const noexcept { return achieved_diff_; }
    double final_lambda() const noexcept { return final_lambda_; }

private:
    SymMatrix last_iterate_;
    double achieved_diff_;
    double final_lambda_;
};

/// One point of the path: X_λ = R_λ⁻¹A, column j solved as R_λ x = f_j,
/// then symmetrized by averaging with the transpose (the limit is
/// symmetric; averaging projects out solver round-off asymmetry).
/// Columns share the one cached factorization and may be solved on
/// several threads; the result does not depend on the thread count.
inline SymMatrix path_iterate(const Graph& g, double lambda, int threads = 1) {
    const Resolvent r(g, lambda);
    const auto n = static_cast<std::size_t>(g.order());
    Matrix x(n);

    auto solve_columns = [&](std::size_t begin, std::size_t end) {
        for (std::size_t j = begin; j < end; ++j) {
            const Vec fj = neighbor_vector(g, static_cast<int>(j) + 1).values;
            const Vec col = r.solve(fj);
            for (std::size_t i = 0; i < n; ++i) x(i, j) = col[i];
        }
    };

    const auto nthreads = static_cast<std::size_t>(std::max(threads, 1));
    if (nthreads <= 1 || n < 2) {
        solve_columns(0, n);
    } else {
        const std::size_t workers = std::min(nthreads, n);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        const std::size_t chunk = (n + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t begin = w * chunk;
            const std::size_t end = std::min(begin + chunk, n);
            if (begin >= end) break;
            pool.emplace_back(solve_columns, begin, end);
        }
        for (auto& t : pool) t.join();
    }
    return SymMatrix::symmetrized(x);
}

/// Follows the path along the geometric schedule until consecutive
/// iterates agree to cfg.tol or the next step would exceed the cap, then
/// returns either the Richardson combination (r·X_{rλ} − X_λ)/(r−1) of
/// the last two iterates — cancelling the leading 1/λ error term — or the
/// last iterate when extrapolation is off.
inline PinvResult pinv(const Graph& g, const PathConfig& cfg = {}, int threads = 1) {
    cfg.validate();

    double lambda = cfg.lambda_start;
    std::optional<SymMatrix> prev;
    SymMatrix current;
    double diff = std::numeric_limits<double>::infinity();
    bool converged = false;
    int iterations = 0;

    for (;;) {
        current = path_iterate(g, lambda, threads);
        ++iterations;
        if (prev) {
            diff = max_abs_diff(current, *prev);
            if (diff <= cfg.tol) {
                converged = true;
                break;
            }
        }
        const double next = lambda * cfg.lambda_ratio;
        if (next > cfg.lambda_cap) break;
        prev = std::move(current);
        lambda = next;
    }

    if (!converged && !cfg.extrapolate)
        throw NonConvergence(std::move(current), diff, lambda);

    PinvResult result;
    result.final_lambda = lambda;
    result.iterations = iterations;
    if (cfg.extrapolate && prev) {
        const double r = cfg.lambda_ratio;
        Matrix ext = current.mat() * (r / (r - 1.0)) - prev->mat() * (1.0 / (r - 1.0));
        result.pinv = SymMatrix::symmetrized(ext);
    } else {
        result.pinv = std::move(current);
    }

    const SymMatrix a = adjacency_matrix(g);
    result.mp_residuals = mp_check(a, result.pinv, 100.0 * cfg.tol);
    result.rank_estimate =
        static_cast<int>(std::llround((a.mat() * result.pinv.mat()).trace()));
    return result;
}

/// Tikhonov objective (1/λ)‖x‖² + ‖Ax − y‖².
inline double tikhonov_objective(const Graph& g, double lambda, std::span<const double> x,
                                 std::span<const double> y) {
    if (!(lambda > 0.0)) throw std::invalid_argument("tikhonov_objective: lambda <= 0");
    const auto n = static_cast<std::size_t>(g.order());
    if (x.size() != n || y.size() != n)
        throw std::invalid_argument("tikhonov_objective: length mismatch");
    Vec ax = apply_adjacency(g, x);
    double fit = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = ax[i] - y[i];
        fit += d * d;
    }
    return dot(x, x) / lambda + fit;
}

/// ‖R_λ x − A y‖∞, the normal-equations residual of the Tikhonov problem;
/// zero exactly at the minimizer x_λ. Computed as (1/λ)x + A(Ax) − Ay
/// without assembling R_λ.
inline double stationarity_residual(const Graph& g, double lambda, std::span<const double> x,
                                    std::span<const double> y) {
    if (!(lambda > 0.0)) throw std::invalid_argument("stationarity_residual: lambda <= 0");
    const auto n = static_cast<std::size_t>(g.order());
    if (x.size() != n || y.size() != n)
        throw std::invalid_argument("stationarity_residual: length mismatch");
    const Vec a2x = apply_adjacency(g, apply_adjacency(g, x));
    const Vec ay = apply_adjacency(g, y);
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        m = std::max(m, std::abs(x[i] / lambda + a2x[i] - ay[i]));
    return m;
}

} // namespace gpinv
