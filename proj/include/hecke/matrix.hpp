#pragma once

#include "cyclotomic.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hecke {

/// Dense row-major matrix over a cyclotomic field. Row-vector convention: v -> v M.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    CycloRational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const CycloRational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    const std::vector<CycloRational>& data() const { return a_; }
    std::vector<CycloRational>& data() { return a_; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }
    bool is_diagonal() const {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (i != j && !(*this)(i, j).is_zero()) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
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
    Matrix& operator*=(const CycloRational& s) {
        for (auto& x : a_)
            if (!x.is_zero()) x = x * s;
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const CycloRational& s) { return a *= s; }
    friend Matrix operator*(const CycloRational& s, Matrix a) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: dimension mismatch in product");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const CycloRational& x = a(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const CycloRational& y = b(k, j);
                    if (!y.is_zero()) c(i, j) += x * y;
                }
            }
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t k = 0; k < a.a_.size(); ++k)
            if (a.a_[k] != b.a_[k]) return false;
        return true;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    void check_same(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: dimension mismatch");
    }
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<CycloRational> a_;
};

/// Element of a direct sum of full matrix algebras, one square block per shape.
class BlockMatrix {
public:
    BlockMatrix() = default;
    explicit BlockMatrix(const std::vector<std::size_t>& dims) {
        for (auto d : dims) blocks_.emplace_back(d, d);
    }

    static BlockMatrix identity(const std::vector<std::size_t>& dims) {
        BlockMatrix m;
        for (auto d : dims) m.blocks_.push_back(Matrix::identity(d));
        return m;
    }

    std::size_t num_blocks() const { return blocks_.size(); }
    Matrix& block(std::size_t b) { return blocks_[b]; }
    const Matrix& block(std::size_t b) const { return blocks_[b]; }
    std::vector<std::size_t> dims() const {
        std::vector<std::size_t> d;
        for (const auto& b : blocks_) d.push_back(b.rows());
        return d;
    }
    std::size_t total_dim() const {
        std::size_t s = 0;
        for (const auto& b : blocks_) s += b.rows() * b.cols();
        return s;
    }

    bool is_zero() const {
        for (const auto& b : blocks_)
            if (!b.is_zero()) return false;
        return true;
    }

    /// Row-major concatenation of all blocks.
    std::vector<CycloRational> flatten() const {
        std::vector<CycloRational> v;
        v.reserve(total_dim());
        for (const auto& b : blocks_) v.insert(v.end(), b.data().begin(), b.data().end());
        return v;
    }

    static BlockMatrix unflatten(const std::vector<std::size_t>& dims, const std::vector<CycloRational>& v) {
        BlockMatrix m(dims);
        std::size_t k = 0;
        for (auto& b : m.blocks_)
            for (auto& x : b.data()) x = v.at(k++);
        if (k != v.size()) throw std::invalid_argument("BlockMatrix::unflatten: length mismatch");
        return m;
    }

    BlockMatrix& operator+=(const BlockMatrix& o) {
        check_same(o);
        for (std::size_t b = 0; b < blocks_.size(); ++b) blocks_[b] += o.blocks_[b];
        return *this;
    }
    BlockMatrix& operator-=(const BlockMatrix& o) {
        check_same(o);
        for (std::size_t b = 0; b < blocks_.size(); ++b) blocks_[b] -= o.blocks_[b];
        return *this;
    }
    BlockMatrix& operator*=(const CycloRational& s) {
        for (auto& b : blocks_) b *= s;
        return *this;
    }
    friend BlockMatrix operator+(BlockMatrix a, const BlockMatrix& b) { return a += b; }
    friend BlockMatrix operator-(BlockMatrix a, const BlockMatrix& b) { return a -= b; }
    friend BlockMatrix operator*(BlockMatrix a, const CycloRational& s) { return a *= s; }
    friend BlockMatrix operator*(const CycloRational& s, BlockMatrix a) { return a *= s; }
    friend BlockMatrix operator*(const BlockMatrix& a, const BlockMatrix& b) {
        a.check_same(b);
        BlockMatrix c;
        for (std::size_t k = 0; k < a.blocks_.size(); ++k) c.blocks_.push_back(a.blocks_[k] * b.blocks_[k]);
        return c;
    }
    friend bool operator==(const BlockMatrix& a, const BlockMatrix& b) {
        if (a.blocks_.size() != b.blocks_.size()) return false;
        for (std::size_t k = 0; k < a.blocks_.size(); ++k)
            if (a.blocks_[k] != b.blocks_[k]) return false;
        return true;
    }
    friend bool operator!=(const BlockMatrix& a, const BlockMatrix& b) { return !(a == b); }

private:
    void check_same(const BlockMatrix& o) const {
        if (blocks_.size() != o.blocks_.size()) throw std::invalid_argument("BlockMatrix: block count mismatch");
    }
    std::vector<Matrix> blocks_;
};

inline BlockMatrix commutator(const BlockMatrix& a, const BlockMatrix& b) { return a * b - b * a; }

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
        const CycloRational inv = m(row, col).inverse();
        for (std::size_t j = col; j < m.cols(); ++j)
            if (!m(row, j).is_zero()) m(row, j) = m(row, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const CycloRational f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::size_t rank(Matrix m) { return rref(m).size(); }

/// Basis of {x : m x = 0} (column vectors).
inline std::vector<std::vector<CycloRational>> nullspace(Matrix m) {
    const auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<CycloRational>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<CycloRational> v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline CycloRational determinant(Matrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    CycloRational det = 1;
    const std::size_t n = m.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m(piv, col).is_zero()) ++piv;
        if (piv == n) return CycloRational(0);
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        const CycloRational inv = m(col, col).inverse();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m(i, col).is_zero()) continue;
            const CycloRational f = m(i, col) * inv;
            for (std::size_t j = col; j < n; ++j)
                if (!m(col, j).is_zero()) m(i, j) -= f * m(col, j);
        }
    }
    return det;
}

/// PA = LU with L unit lower triangular; solves A x = b for square invertible A.
class LUDecomposition {
public:
    explicit LUDecomposition(Matrix a) : lu_(std::move(a)), perm_(lu_.rows()) {
        if (lu_.rows() != lu_.cols()) throw std::invalid_argument("LUDecomposition: matrix not square");
        const std::size_t n = lu_.rows();
        for (std::size_t i = 0; i < n; ++i) perm_[i] = i;
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = col;
            while (piv < n && lu_(piv, col).is_zero()) ++piv;
            if (piv == n) throw DivisionByZero();
            if (piv != col) {
                for (std::size_t j = 0; j < n; ++j) std::swap(lu_(piv, j), lu_(col, j));
                std::swap(perm_[piv], perm_[col]);
            }
            const CycloRational inv = lu_(col, col).inverse();
            for (std::size_t i = col + 1; i < n; ++i) {
                if (lu_(i, col).is_zero()) continue;
                const CycloRational f = lu_(i, col) * inv;
                lu_(i, col) = f;
                for (std::size_t j = col + 1; j < n; ++j)
                    if (!lu_(col, j).is_zero()) lu_(i, j) -= f * lu_(col, j);
            }
        }
    }

    std::size_t size() const { return lu_.rows(); }

    std::vector<CycloRational> solve(const std::vector<CycloRational>& b) const {
        const std::size_t n = lu_.rows();
        if (b.size() != n) throw std::invalid_argument("LUDecomposition::solve: length mismatch");
        std::vector<CycloRational> y(n);
        for (std::size_t i = 0; i < n; ++i) {
            CycloRational s = b[perm_[i]];
            for (std::size_t j = 0; j < i; ++j)
                if (!lu_(i, j).is_zero() && !y[j].is_zero()) s -= lu_(i, j) * y[j];
            y[i] = s;
        }
        for (std::size_t i = n; i-- > 0;) {
            CycloRational s = y[i];
            for (std::size_t j = i + 1; j < n; ++j)
                if (!lu_(i, j).is_zero() && !y[j].is_zero()) s -= lu_(i, j) * y[j];
            y[i] = s / lu_(i, i);
        }
        return y;
    }

private:
    Matrix lu_;
    std::vector<std::size_t> perm_;
};

}  // namespace hecke
