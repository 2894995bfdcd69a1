// Dense exact matrices over GF(q): rank, kernel, cokernel, solve.
//
// Plain Gaussian elimination, first nonzero pivot, no heuristics; exact
// arithmetic makes pivot choice a determinism question only.
#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include "triwass/field.hpp"

namespace triwass {

class Matrix {
public:
    Matrix() : q_(kDefaultPrime), rows_(0), cols_(0) {}
    Matrix(int rows, int cols, std::uint32_t q)
        : q_(q), rows_(rows), cols_(cols), e_(std::size_t(rows) * cols, 0) {
        if (rows < 0 || cols < 0) throw internal_error("Matrix: negative shape");
    }

    static Matrix identity(int n, std::uint32_t q) {
        Matrix m(n, n, q);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static Matrix from_rows(std::initializer_list<std::initializer_list<std::int64_t>> rows,
                            std::uint32_t q) {
        int r = int(rows.size());
        int c = r == 0 ? 0 : int(rows.begin()->size());
        Matrix m(r, c, q);
        int i = 0;
        for (const auto& row : rows) {
            if (int(row.size()) != c) throw internal_error("Matrix: ragged rows");
            int j = 0;
            for (std::int64_t v : row) m.at(i, j++) = fp_detail::reduce(v, q);
            ++i;
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::uint32_t modulus() const { return q_; }

    std::uint32_t& at(int r, int c) { return e_[std::size_t(r) * cols_ + c]; }
    std::uint32_t at(int r, int c) const { return e_[std::size_t(r) * cols_ + c]; }
    Fp scalar(int r, int c) const { return Fp(at(r, c), q_); }
    void set(int r, int c, std::int64_t v) { at(r, c) = fp_detail::reduce(v, q_); }

    bool is_zero() const {
        for (auto v : e_)
            if (v) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.q_ == b.q_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix r = a;
        for (std::size_t i = 0; i < r.e_.size(); ++i)
            r.e_[i] = fp_detail::add_mod(a.e_[i], b.e_[i], a.q_);
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix r = a;
        for (std::size_t i = 0; i < r.e_.size(); ++i)
            r.e_[i] = fp_detail::sub_mod(a.e_[i], b.e_[i], a.q_);
        return r;
    }

    Matrix operator-() const {
        Matrix r = *this;
        for (auto& v : r.e_) v = fp_detail::neg_mod(v, q_);
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.q_ != b.q_) throw internal_error("Matrix: mixed moduli");
        if (a.cols_ != b.rows_) throw internal_error("Matrix: shape mismatch in product");
        Matrix r(a.rows_, b.cols_, a.q_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                std::uint32_t aik = a.at(i, k);
                if (!aik) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    r.at(i, j) = std::uint32_t(
                        (r.at(i, j) + std::uint64_t(aik) * b.at(k, j)) % a.q_);
                }
            }
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_, q_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    // Columns [c0, c1) as a new matrix.
    Matrix col_slice(int c0, int c1) const {
        Matrix r(rows_, c1 - c0, q_);
        for (int i = 0; i < rows_; ++i)
            for (int j = c0; j < c1; ++j) r.at(i, j - c0) = at(i, j);
        return r;
    }

    // Rows [r0, r1) as a new matrix.
    Matrix row_slice(int r0, int r1) const {
        Matrix r(r1 - r0, cols_, q_);
        for (int i = r0; i < r1; ++i)
            for (int j = 0; j < cols_; ++j) r.at(i - r0, j) = at(i, j);
        return r;
    }

    static Matrix hstack(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.q_ != b.q_) throw internal_error("hstack: shape mismatch");
        Matrix r(a.rows_, a.cols_ + b.cols_, a.q_);
        for (int i = 0; i < a.rows_; ++i) {
            for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
            for (int j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
        }
        return r;
    }

    static Matrix vstack(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.cols_ || a.q_ != b.q_) throw internal_error("vstack: shape mismatch");
        Matrix r(a.rows_ + b.rows_, a.cols_, a.q_);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
        for (int i = 0; i < b.rows_; ++i)
            for (int j = 0; j < b.cols_; ++j) r.at(a.rows_ + i, j) = b.at(i, j);
        return r;
    }

    // 2x2 block assembly; shapes must tile.
    static Matrix block2x2(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
        return vstack(hstack(a, b), hstack(c, d));
    }

    // Reduced row echelon form; returns pivot column indices.
    std::vector<int> rref() {
        std::vector<int> pivots;
        int row = 0;
        for (int col = 0; col < cols_ && row < rows_; ++col) {
            int pr = -1;
            for (int i = row; i < rows_; ++i)
                if (at(i, col)) {
                    pr = i;
                    break;
                }
            if (pr < 0) continue;
            if (pr != row)
                for (int j = 0; j < cols_; ++j) std::swap(at(pr, j), at(row, j));
            std::uint32_t inv = fp_detail::inv_mod(at(row, col), q_);
            for (int j = col; j < cols_; ++j)
                at(row, j) = fp_detail::mul_mod(at(row, j), inv, q_);
            for (int i = 0; i < rows_; ++i) {
                if (i == row || !at(i, col)) continue;
                std::uint32_t f = at(i, col);
                for (int j = col; j < cols_; ++j)
                    at(i, j) = fp_detail::sub_mod(at(i, j), fp_detail::mul_mod(f, at(row, j), q_),
                                                  q_);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    int rank() const {
        Matrix m = *this;
        return int(m.rref().size());
    }

    // Basis of { v : (*this) v = 0 } as columns; cols() - rank() of them.
    Matrix kernel_basis() const {
        Matrix m = *this;
        std::vector<int> pivots = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (int c : pivots) is_pivot[c] = true;
        int nullity = cols_ - int(pivots.size());
        Matrix k(cols_, nullity, q_);
        int kcol = 0;
        for (int free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            k.at(free, kcol) = 1;
            for (std::size_t pi = 0; pi < pivots.size(); ++pi)
                k.at(pivots[pi], kcol) = fp_detail::neg_mod(m.at(int(pi), free), q_);
            ++kcol;
        }
        return k;
    }

    // Surjection p : k^rows -> k^(rows - rank) with p * (*this) = 0,
    // full row rank. Realizes the cokernel of the map this matrix presents.
    Matrix cokernel_projection() const {
        return transpose().kernel_basis().transpose();
    }

    // Particular solution x of (*this) x = b (free variables zero), or
    // nullopt when some column of b is outside the column space.
    std::optional<Matrix> solve(const Matrix& b) const {
        if (b.rows_ != rows_) throw input_error("solve: right-hand side row count mismatch");
        if (b.q_ != q_) throw internal_error("solve: mixed moduli");
        Matrix aug = hstack(*this, b);
        std::vector<int> pivots = aug.rref();
        for (int c : pivots)
            if (c >= cols_) return std::nullopt;
        Matrix x(cols_, b.cols_, q_);
        for (std::size_t pi = 0; pi < pivots.size(); ++pi)
            for (int j = 0; j < b.cols_; ++j) x.at(pivots[pi], j) = aug.at(int(pi), cols_ + j);
        return x;
    }

private:
    void require_same_shape(const Matrix& o) const {
        if (q_ != o.q_) throw internal_error("Matrix: mixed moduli");
        if (rows_ != o.rows_ || cols_ != o.cols_) throw internal_error("Matrix: shape mismatch");
    }

    std::uint32_t q_;
    int rows_, cols_;
    std::vector<std::uint32_t> e_;
};

}  // namespace triwass
