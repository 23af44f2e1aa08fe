#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "springer/errors.hpp"

namespace springer {

/// Arbitrary-precision rational kept in canonical reduced form.
using rational = boost::multiprecision::cpp_rational;

/// Dense row-major matrix over an exact scalar. All arithmetic is exact;
/// there is no rounding anywhere in this module.
template <typename Scalar = rational>
class Matrix {
public:
    Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0)
            throw DimensionError("matrix dimensions must be nonnegative");
        data_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), Scalar(0));
    }

    Matrix(int rows, int cols, std::initializer_list<int> entries) : Matrix(rows, cols) {
        if (static_cast<size_t>(rows) * static_cast<size_t>(cols) != entries.size())
            throw DimensionError("entry count does not match matrix dimensions");
        size_t k = 0;
        for (int v : entries) data_[k++] = Scalar(v);
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& at(int i, int j) {
        check(i, j);
        return data_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
    }
    const Scalar& at(int i, int j) const {
        check(i, j);
        return data_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_)
            throw DimensionError("product needs " + std::to_string(cols_) + " rows, got " +
                                 std::to_string(o.rows_));
        Matrix out(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Scalar& v = at(i, k);
                if (v == 0) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    const Scalar& w = o.at(k, j);
                    if (w != 0) out.at(i, j) += v * w;
                }
            }
        return out;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const Scalar& v : data_)
            if (v != 0) return false;
        return true;
    }

    /// Columns [0, count) as a new matrix.
    Matrix left_columns(int count) const {
        if (count < 0 || count > cols_) throw DimensionError("column prefix out of range");
        Matrix out(rows_, count);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < count; ++j) out.at(i, j) = at(i, j);
        return out;
    }

private:
    void check(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw IndexError("matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                             ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
    }

    int rows_;
    int cols_;
    std::vector<Scalar> data_;
};

template <typename Scalar>
Matrix<Scalar> concat_columns(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
    if (a.rows() != b.rows())
        throw DimensionError("cannot concatenate columns: " + std::to_string(a.rows()) +
                             " rows vs " + std::to_string(b.rows()));
    Matrix<Scalar> out(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
    }
    return out;
}

/// Exact rank via Gaussian elimination with first-nonzero pivoting.
template <typename Scalar>
int rank(Matrix<Scalar> m) {
    const int rows = m.rows();
    const int cols = m.cols();
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        int pivot = -1;
        for (int i = r; i < rows; ++i) {
            if (m.at(i, col) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = col; j < cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
        const Scalar& p = m.at(r, col);
        for (int i = r + 1; i < rows; ++i) {
            const Scalar& v = m.at(i, col);
            if (v == 0) continue;
            Scalar factor = v / p;
            m.at(i, col) = 0;
            for (int j = col + 1; j < cols; ++j) {
                const Scalar& w = m.at(r, j);
                if (w != 0) m.at(i, j) -= factor * w;
            }
        }
        ++r;
    }
    return r;
}

/// Dimension of the solution space of the homogeneous system m x = 0.
template <typename Scalar>
int nullspace_dim(const Matrix<Scalar>& m) {
    return m.cols() - rank(m);
}

} // namespace springer
