#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gpinv/graph.hpp"
#include "gpinv/matrix.hpp"

namespace gpinv {

using Rational = boost::multiprecision::cpp_rational;

/// Dense matrix over exact rationals. Just enough surface for the exact
/// pseudoinverse oracle: multiply, transpose, Gauss-Jordan inverse.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static RationalMatrix identity(std::size_t n) {
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    RationalMatrix transposed() const {
        RationalMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("RationalMatrix: shape mismatch");
        RationalMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("RationalMatrix: shape mismatch");
        RationalMatrix c(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.a_.size(); ++k) c.a_[k] = a.a_[k] - b.a_[k];
        return c;
    }

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    bool is_zero() const {
        for (const auto& v : a_)
            if (v != 0) return false;
        return true;
    }

    /// Exact inverse by Gauss-Jordan elimination with nonzero pivoting.
    RationalMatrix inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("RationalMatrix::inverse: not square");
        const std::size_t n = rows_;
        RationalMatrix w = *this;
        RationalMatrix inv = identity(n);
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = col;
            while (piv < n && w(piv, col) == 0) ++piv;
            if (piv == n) throw std::domain_error("RationalMatrix::inverse: singular matrix");
            if (piv != col) {
                for (std::size_t j = 0; j < n; ++j) {
                    std::swap(w(piv, j), w(col, j));
                    std::swap(inv(piv, j), inv(col, j));
                }
            }
            const Rational d = w(col, col);
            for (std::size_t j = 0; j < n; ++j) {
                w(col, j) /= d;
                inv(col, j) /= d;
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (i == col || w(i, col) == 0) continue;
                const Rational f = w(i, col);
                for (std::size_t j = 0; j < n; ++j) {
                    w(i, j) -= f * w(col, j);
                    inv(i, j) -= f * inv(col, j);
                }
            }
        }
        return inv;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

inline Matrix to_double(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("to_double: not square");
    Matrix d(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            d(i, j) = m(i, j).convert_to<double>();
    return d;
}

/// Exact-arithmetic cost guard for rational_pinv.
inline constexpr int kRationalPinvMaxOrder = 30;

/// Exact pseudoinverse over the rationals via the full-rank factorization
/// A = F G^T: F keeps the pivot columns of A, G^T the nonzero rows of the
/// reduced row echelon form, and then
///
///     A† = G (G^T G)^{-1} (F^T F)^{-1} F^T
///
/// with every inverse an exact r×r Gauss-Jordan (r = rank). The result
/// satisfies all four Moore-Penrose equations with zero residual in
/// rational arithmetic.
inline RationalMatrix rational_pinv(const Graph& g) {
    const int order = g.order();
    if (order > kRationalPinvMaxOrder)
        throw std::length_error("rational_pinv: order exceeds exact-arithmetic guard");
    const auto n = static_cast<std::size_t>(order);

    RationalMatrix a(n, n);
    for (auto [u, v] : g.edges()) {
        a(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1)) = 1;
        a(static_cast<std::size_t>(v - 1), static_cast<std::size_t>(u - 1)) = 1;
    }

    // Reduced row echelon form, tracking pivot columns.
    RationalMatrix rref = a;
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t piv = row;
        while (piv < n && rref(piv, col) == 0) ++piv;
        if (piv == n) continue;
        if (piv != row)
            for (std::size_t j = 0; j < n; ++j) std::swap(rref(piv, j), rref(row, j));
        const Rational d = rref(row, col);
        for (std::size_t j = 0; j < n; ++j) rref(row, j) /= d;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || rref(i, col) == 0) continue;
            const Rational f = rref(i, col);
            for (std::size_t j = 0; j < n; ++j) rref(i, j) -= f * rref(row, j);
        }
        pivot_cols.push_back(col);
        ++row;
    }

    const std::size_t r = pivot_cols.size();
    if (r == 0) return RationalMatrix(n, n); // edgeless: A† = 0

    RationalMatrix f_mat(n, r); // pivot columns of A
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < n; ++i) f_mat(i, j) = a(i, pivot_cols[j]);
    RationalMatrix gt(r, n); // nonzero rows of the RREF
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j) gt(i, j) = rref(i, j);

    const RationalMatrix g_mat = gt.transposed();
    const RationalMatrix gtg_inv = (gt * g_mat).inverse();
    const RationalMatrix ftf_inv = (f_mat.transposed() * f_mat).inverse();
    return g_mat * gtg_inv * ftf_inv * f_mat.transposed();
}

} // namespace gpinv
