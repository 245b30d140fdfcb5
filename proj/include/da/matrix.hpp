#pragma once

#include <cassert>
#include <stdexcept>
#include <vector>

#include "da/bigfloat.hpp"

namespace da {

template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t r, size_t c) : rows_(r), cols_(c), data_(r * c) {}
    Matrix(size_t r, size_t c, const T& fill) : rows_(r), cols_(c), data_(r * c, fill) {}

    static Matrix identity(size_t n, const T& one) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    T& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const T& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const {
        Matrix m(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        Matrix m(a.rows_, a.cols_);
        for (size_t i = 0; i < a.data_.size(); ++i) m.data_[i] = a.data_[i] + b.data_[i];
        return m;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        Matrix m(a.rows_, a.cols_);
        for (size_t i = 0; i < a.data_.size(); ++i) m.data_[i] = a.data_[i] - b.data_[i];
        return m;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        assert(a.cols_ == b.rows_);
        Matrix m(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a.at(i, k);
                for (size_t j = 0; j < b.cols_; ++j) m.at(i, j) += aik * b.at(k, j);
            }
        return m;
    }
    friend Matrix operator*(const T& s, const Matrix& a) {
        Matrix m(a.rows_, a.cols_);
        for (size_t i = 0; i < a.data_.size(); ++i) m.data_[i] = s * a.data_[i];
        return m;
    }

    Matrix& operator+=(const Matrix& o) {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }

    T max_abs() const {
        T m{};
        for (const auto& x : data_)
            if (abs(x) > m) m = abs(x);
        return m;
    }

    std::vector<T> col(size_t j) const {
        std::vector<T> v(rows_);
        for (size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
        return v;
    }

private:
    size_t rows_, cols_;
    std::vector<T> data_;
};

// Gauss-Jordan with partial pivoting. Works for exact rationals (any nonzero
// pivot is fine) and big floats alike; throws on a singular matrix.
template <class T>
Matrix<T> inverse(const Matrix<T>& a, const T& one) {
    assert(a.rows() == a.cols());
    size_t n = a.rows();
    Matrix<T> m = a;
    Matrix<T> inv = Matrix<T>::identity(n, one);
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        for (size_t r = c + 1; r < n; ++r)
            if (abs(m.at(r, c)) > abs(m.at(piv, c))) piv = r;
        if (m.at(piv, c) == T{}) throw std::runtime_error("inverse: singular matrix");
        if (piv != c)
            for (size_t j = 0; j < n; ++j) {
                std::swap(m.at(piv, j), m.at(c, j));
                std::swap(inv.at(piv, j), inv.at(c, j));
            }
        T p = m.at(c, c);
        for (size_t j = 0; j < n; ++j) {
            m.at(c, j) /= p;
            inv.at(c, j) /= p;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == c) continue;
            T f = m.at(r, c);
            if (f == T{}) continue;
            for (size_t j = 0; j < n; ++j) {
                m.at(r, j) -= f * m.at(c, j);
                inv.at(r, j) -= f * inv.at(c, j);
            }
        }
    }
    return inv;
}

// Nullspace basis of an r x c matrix (exact or float with threshold `tol`).
template <class T>
std::vector<std::vector<T>> nullspace(Matrix<T> m, const T& tol, const T& one) {
    size_t r = m.rows(), c = m.cols();
    std::vector<long> pivot_of_col(c, -1);
    size_t row = 0;
    for (size_t col = 0; col < c && row < r; ++col) {
        size_t piv = row;
        for (size_t i = row + 1; i < r; ++i)
            if (abs(m.at(i, col)) > abs(m.at(piv, col))) piv = i;
        if (!(abs(m.at(piv, col)) > tol)) continue;
        if (piv != row)
            for (size_t j = 0; j < c; ++j) std::swap(m.at(piv, j), m.at(row, j));
        T p = m.at(row, col);
        for (size_t j = 0; j < c; ++j) m.at(row, j) /= p;
        for (size_t i = 0; i < r; ++i) {
            if (i == row) continue;
            T f = m.at(i, col);
            if (abs(f) > tol)
                for (size_t j = 0; j < c; ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivot_of_col[col] = (long)row;
        ++row;
    }
    std::vector<std::vector<T>> basis;
    for (size_t col = 0; col < c; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        std::vector<T> v(c);
        v[col] = one;
        for (size_t j = 0; j < c; ++j)
            if (pivot_of_col[j] >= 0) v[j] = -m.at((size_t)pivot_of_col[j], col);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Largest singular value via power iteration on M^T M.
BigFloat operator_norm(const Matrix<BigFloat>& m, int max_iters = 0, double rel_tol = 1e-12);

// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
// Returns eigenvalues (ascending) and the orthogonal matrix of column
// eigenvectors.
void jacobi_eigen_sym(const Matrix<BigFloat>& m, std::vector<BigFloat>& eigenvalues,
                      Matrix<BigFloat>& eigenvectors);

}  // namespace da
