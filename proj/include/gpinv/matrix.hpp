#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace gpinv {

using Vec = std::vector<double>;

inline double dot(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

inline double max_abs(std::span<const double> a) {
    double m = 0.0;
    for (double v : a) m = std::max(m, std::abs(v));
    return m;
}

/// Dense square matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t n, double fill = 0.0) : n_(n), a_(n * n, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t dim() const noexcept { return n_; }

    double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    std::span<const double> row(std::size_t i) const { return {a_.data() + i * n_, n_}; }

    Matrix transposed() const {
        Matrix t(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Vec apply(std::span<const double> x) const {
        if (x.size() != n_) throw std::invalid_argument("Matrix::apply: length mismatch");
        Vec y(n_, 0.0);
        for (std::size_t i = 0; i < n_; ++i) {
            double s = 0.0;
            const double* r = a_.data() + i * n_;
            for (std::size_t j = 0; j < n_; ++j) s += r[j] * x[j];
            y[i] = s;
        }
        return y;
    }

    double trace() const {
        double s = 0.0;
        for (std::size_t i = 0; i < n_; ++i) s += (*this)(i, i);
        return s;
    }

    /// Largest entry magnitude (entrywise infinity norm).
    double max_abs() const { return gpinv::max_abs(a_); }

    /// max_ij |a_ij - a_ji|; zero means exactly symmetric.
    double max_asymmetry() const {
        double m = 0.0;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                m = std::max(m, std::abs((*this)(i, j) - (*this)(j, i)));
        return m;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    Matrix& operator*=(double c) {
        for (double& v : a_) v *= c;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, double c) { return a *= c; }
    friend Matrix operator*(double c, Matrix a) { return a *= c; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        a.check_same(b);
        const std::size_t n = a.n_;
        Matrix c(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                const double aik = a(i, k);
                if (aik == 0.0) continue;
                const double* brow = b.a_.data() + k * n;
                double* crow = c.a_.data() + i * n;
                for (std::size_t j = 0; j < n; ++j) crow[j] += aik * brow[j];
            }
        }
        return c;
    }

private:
    void check_same(const Matrix& o) const {
        if (n_ != o.n_) throw std::invalid_argument("Matrix: dimension mismatch");
    }

    std::size_t n_ = 0;
    Vec a_;
};

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("max_abs_diff: dimension mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

/// Dense symmetric matrix: entry (i,j) equals entry (j,i) exactly, by
/// construction. Mutation goes through set(), which writes both triangles.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(std::size_t n, double fill = 0.0) : m_(n, fill) {}

    /// Adopts a matrix that is already exactly symmetric; throws otherwise.
    static SymMatrix from(Matrix m) {
        if (m.max_asymmetry() != 0.0)
            throw std::invalid_argument("SymMatrix::from: matrix is not exactly symmetric");
        SymMatrix s;
        s.m_ = std::move(m);
        return s;
    }

    /// (m + m^T)/2, computed once per unordered pair so the result is
    /// exactly symmetric.
    static SymMatrix symmetrized(const Matrix& m) {
        const std::size_t n = m.dim();
        SymMatrix s(n);
        for (std::size_t i = 0; i < n; ++i) {
            s.m_(i, i) = m(i, i);
            for (std::size_t j = i + 1; j < n; ++j) {
                const double v = 0.5 * (m(i, j) + m(j, i));
                s.m_(i, j) = v;
                s.m_(j, i) = v;
            }
        }
        return s;
    }

    std::size_t dim() const noexcept { return m_.dim(); }
    double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

    void set(std::size_t i, std::size_t j, double v) {
        m_(i, j) = v;
        m_(j, i) = v;
    }

    const Matrix& mat() const noexcept { return m_; }

    Vec apply(std::span<const double> x) const { return m_.apply(x); }
    double trace() const { return m_.trace(); }
    double max_abs() const { return m_.max_abs(); }

private:
    Matrix m_;
};

inline double max_abs_diff(const SymMatrix& a, const SymMatrix& b) {
    return max_abs_diff(a.mat(), b.mat());
}

} // namespace gpinv
