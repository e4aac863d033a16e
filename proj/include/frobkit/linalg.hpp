#pragma once

#include "frobkit/rational.hpp"

#include <optional>
#include <vector>

namespace frobkit {

/// Dense matrix over the exact rational scalars. Row-major.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Scalar& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator+(const Mat& o) const {
        Mat r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
        return r;
    }

    Mat operator*(const Mat& o) const {
        Mat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Scalar& x = (*this)(i, k);
                if (x.is_zero()) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    if (o(k, j).is_zero()) continue;
                    r(i, j) += x * o(k, j);
                }
            }
        return r;
    }

    Mat scaled(const Scalar& s) const {
        Mat r = *this;
        for (auto& x : r.a_) x *= s;
        return r;
    }

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const {
        std::vector<Scalar> r(rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!(*this)(i, j).is_zero() && !v[j].is_zero()) r[i] += (*this)(i, j) * v[j];
        return r;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

/// Determinant by fraction-free (Bareiss) elimination. Every division is exact.
inline Scalar bareiss_det(Mat m) {
    const int n = m.rows();
    if (n != m.cols()) throw Error("determinant of non-square matrix");
    if (n == 0) return Scalar(1);
    Scalar prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k).is_zero()) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m(i, k).is_zero()) { pivot = i; break; }
            if (pivot < 0) return Scalar(0);
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

/// Reduced row echelon form in place; returns the pivot column of each pivot row.
inline std::vector<int> rref(Mat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pivot = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!m(i, col).is_zero()) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(pivot, j));
        const Scalar inv = Scalar(1) / m(row, col);
        for (int j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const Scalar f = m(i, col);
            for (int j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline int rank(Mat m) { return static_cast<int>(rref(m).size()); }

/// One exact solution of A x = b (free variables set to 0), or nullopt if inconsistent.
inline std::optional<std::vector<Scalar>> solve_any(const Mat& a, const std::vector<Scalar>& b) {
    Mat aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[static_cast<std::size_t>(i)];
    }
    const std::vector<int> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    std::vector<Scalar> x(a.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(static_cast<int>(r), a.cols());
    return x;
}

/// Solves A x = b for square invertible A by fraction-free Gaussian elimination.
/// Returns nullopt when A is singular.
inline std::optional<std::vector<Scalar>> solve_fraction_free(Mat a, std::vector<Scalar> b) {
    const int n = a.rows();
    if (n != a.cols()) throw Error("solve_fraction_free requires a square matrix");
    Scalar prev(1);
    for (int k = 0; k < n; ++k) {
        if (a(k, k).is_zero()) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (!a(i, k).is_zero()) { pivot = i; break; }
            if (pivot < 0) return std::nullopt;
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(pivot, j));
            std::swap(b[k], b[pivot]);
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
            b[i] = (a(k, k) * b[i] - a(i, k) * b[k]) / prev;
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    // Back substitution on the fraction-free triangle.
    std::vector<Scalar> x(n);
    for (int i = n - 1; i >= 0; --i) {
        Scalar s = b[i];
        for (int j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
        x[i] = s / a(i, i);
    }
    return x;
}

} // namespace frobkit
