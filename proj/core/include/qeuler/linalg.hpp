#pragma once

#include <optional>
#include <vector>

#include "qeuler/errors.hpp"
#include "qeuler/ground.hpp"

namespace qeuler {

// Dense matrix over an exact field K. Elimination uses the first nonzero
// pivot in row order, so every derived object (rank, kernel basis, solution
// with zeroed free variables) is deterministic.
template <typename K>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Ground<K>::zero()) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Ground<K>::one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    K& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const K& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw ValidationError("matrix dimension mismatch");
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const K& a = at(i, k);
                if (Ground<K>::is_zero(a)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const K& b = o.at(k, j);
                    if (!Ground<K>::is_zero(b)) r.at(i, j) += a * b;
                }
            }
        return r;
    }

    std::vector<K> apply(const std::vector<K>& v) const {
        if (v.size() != cols_) throw ValidationError("matrix/vector dimension mismatch");
        std::vector<K> r(rows_, Ground<K>::zero());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!Ground<K>::is_zero(at(i, j))) r[i] += at(i, j) * v[j];
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    K trace() const {
        require_square();
        K t = Ground<K>::zero();
        for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
        return t;
    }

    // Reduced row echelon form; records pivot columns in order.
    Matrix rref(std::vector<std::size_t>* pivot_cols = nullptr) const {
        Matrix m(*this);
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t p = row;
            while (p < rows_ && Ground<K>::is_zero(m.at(p, col))) ++p;
            if (p == rows_) continue;
            m.swap_rows(p, row);
            K inv = Ground<K>::one() / m.at(row, col);
            for (std::size_t j = col; j < cols_; ++j) m.at(row, j) = m.at(row, j) * inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == row || Ground<K>::is_zero(m.at(i, col))) continue;
                K f = m.at(i, col);
                for (std::size_t j = col; j < cols_; ++j)
                    m.at(i, j) -= f * m.at(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        if (pivot_cols) *pivot_cols = std::move(pivots);
        return m;
    }

    std::size_t rank() const {
        std::vector<std::size_t> pivots;
        rref(&pivots);
        return pivots.size();
    }

    K determinant() const {
        require_square();
        Matrix m(*this);
        K det = Ground<K>::one();
        for (std::size_t col = 0; col < cols_; ++col) {
            std::size_t p = col;
            while (p < rows_ && Ground<K>::is_zero(m.at(p, col))) ++p;
            if (p == rows_) return Ground<K>::zero();
            if (p != col) {
                m.swap_rows(p, col);
                det = -det;
            }
            det *= m.at(col, col);
            K inv = Ground<K>::one() / m.at(col, col);
            for (std::size_t i = col + 1; i < rows_; ++i) {
                if (Ground<K>::is_zero(m.at(i, col))) continue;
                K f = m.at(i, col) * inv;
                for (std::size_t j = col; j < cols_; ++j)
                    m.at(i, j) -= f * m.at(col, j);
            }
        }
        return det;
    }

    std::optional<Matrix> inverse() const {
        require_square();
        Matrix aug(rows_, 2 * cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols_ + i) = Ground<K>::one();
        }
        std::vector<std::size_t> pivots;
        Matrix r = aug.rref(&pivots);
        // Invertible iff every original column is a pivot column. A rank
        // deficit shifts later pivots into the identity half, so the pivot
        // count alone cannot distinguish the two cases.
        if (pivots.size() != cols_ || (cols_ > 0 && pivots.back() != cols_ - 1))
            return std::nullopt;
        Matrix inv(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = r.at(i, cols_ + j);
        return inv;
    }

    // Particular solution of Ax = b with free variables set to zero;
    // nullopt if inconsistent.
    std::optional<std::vector<K>> solve(const std::vector<K>& b) const {
        if (b.size() != rows_) throw ValidationError("matrix/vector dimension mismatch");
        Matrix aug(rows_, cols_ + 1);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols_) = b[i];
        }
        std::vector<std::size_t> pivots;
        Matrix r = aug.rref(&pivots);
        if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
        std::vector<K> x(cols_, Ground<K>::zero());
        for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = r.at(i, cols_);
        return x;
    }

    // Kernel basis vectors, one per free column in ascending column order.
    std::vector<std::vector<K>> kernel_basis() const {
        std::vector<std::size_t> pivots;
        Matrix r = rref(&pivots);
        std::vector<bool> is_pivot(cols_, false);
        for (std::size_t c : pivots) is_pivot[c] = true;
        std::vector<std::vector<K>> basis;
        for (std::size_t f = 0; f < cols_; ++f) {
            if (is_pivot[f]) continue;
            std::vector<K> v(cols_, Ground<K>::zero());
            v[f] = Ground<K>::one();
            for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, f);
            basis.push_back(std::move(v));
        }
        return basis;
    }

private:
    void require_square() const {
        if (rows_ != cols_) throw ValidationError("matrix is not square");
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<K> data_;
};

// Canonical form of the row space: RREF rows with zero rows dropped.
// Two row sets span the same subspace iff their canonical forms are equal.
template <typename K>
Matrix<K> row_space_canonical(const std::vector<std::vector<K>>& rows, std::size_t cols) {
    Matrix<K> m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw ValidationError("row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    std::vector<std::size_t> pivots;
    Matrix<K> r = m.rref(&pivots);
    Matrix<K> out(pivots.size(), cols);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = r.at(i, j);
    return out;
}

}  // namespace qeuler
