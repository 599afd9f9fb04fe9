#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lsgdd/int_types.hpp"
#include "lsgdd/quadext.hpp"

namespace lsgdd {

/// Block coordinates of a v x v' matrix partitioned into an m x m' grid of
/// square blocks of order n (so v = m*n, v' = m'*n).
struct BlockIndex {
    std::size_t block_rows = 0;
    std::size_t block_cols = 0;
    std::size_t size = 0;
};

/// Dense row-major matrix over an exact scalar (Int or QuadExt). Values are
/// immutable in spirit: operations return fresh matrices.
template <typename T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), e_(rows * cols, fill) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
    static Mat ones(std::size_t rows, std::size_t cols) { return Mat(rows, cols, T(1)); }
    static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    const T& at(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw std::out_of_range("Mat::at: index out of range");
        return e_[i * cols_ + j];
    }

    [[nodiscard]] Mat transpose() const {
        Mat r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    Mat& operator+=(const Mat& o) {
        check_same_shape(o, "add");
        for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
        return *this;
    }
    Mat& operator-=(const Mat& o) {
        check_same_shape(o, "subtract");
        for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
        return *this;
    }
    friend Mat operator+(Mat x, const Mat& y) { return x += y; }
    friend Mat operator-(Mat x, const Mat& y) { return x -= y; }

    friend Mat operator*(const Mat& x, const Mat& y) {
        if (x.cols_ != y.rows_)
            throw std::invalid_argument("Mat: dimension mismatch in product " + x.shape() + " * " + y.shape());
        Mat r(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i) {
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const T& a = x(i, k);
                if (a == T(0)) continue;
                const T* yrow = &y.e_[k * y.cols_];
                T* rrow = &r.e_[i * r.cols_];
                for (std::size_t j = 0; j < y.cols_; ++j) {
                    if (yrow[j] == T(0)) continue;
                    rrow[j] += a * yrow[j];
                }
            }
        }
        return r;
    }

    [[nodiscard]] Mat scaled(const T& c) const {
        Mat r = *this;
        for (auto& v : r.e_) v *= c;
        return r;
    }

    /// Kronecker product: the left factor indexes blocks.
    [[nodiscard]] Mat kron(const Mat& o) const {
        Mat r(rows_ * o.rows_, cols_ * o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                const T& a = (*this)(i, j);
                if (a == T(0)) continue;
                for (std::size_t k = 0; k < o.rows_; ++k)
                    for (std::size_t l = 0; l < o.cols_; ++l)
                        r(i * o.rows_ + k, j * o.cols_ + l) = a * o(k, l);
            }
        return r;
    }

    /// n x n submatrix at block position (i, j) of the idx partition.
    [[nodiscard]] Mat block(const BlockIndex& idx, std::size_t i, std::size_t j) const {
        if (idx.block_rows * idx.size != rows_ || idx.block_cols * idx.size != cols_)
            throw std::invalid_argument("Mat::block: partition does not match matrix shape");
        if (i >= idx.block_rows || j >= idx.block_cols)
            throw std::out_of_range("Mat::block: block index out of range");
        Mat r(idx.size, idx.size);
        for (std::size_t a = 0; a < idx.size; ++a)
            for (std::size_t b = 0; b < idx.size; ++b) r(a, b) = (*this)(i * idx.size + a, j * idx.size + b);
        return r;
    }

    void set_block(const BlockIndex& idx, std::size_t i, std::size_t j, const Mat& blk) {
        if (blk.rows_ != idx.size || blk.cols_ != idx.size)
            throw std::invalid_argument("Mat::set_block: block has wrong size");
        if (i >= idx.block_rows || j >= idx.block_cols)
            throw std::out_of_range("Mat::set_block: block index out of range");
        for (std::size_t a = 0; a < idx.size; ++a)
            for (std::size_t b = 0; b < idx.size; ++b) (*this)(i * idx.size + a, j * idx.size + b) = blk(a, b);
    }

    [[nodiscard]] T row_sum(std::size_t i) const {
        T s(0);
        for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j);
        return s;
    }
    [[nodiscard]] T col_sum(std::size_t j) const {
        T s(0);
        for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, j);
        return s;
    }

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.e_ == y.e_;
    }
    friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

    [[nodiscard]] std::string shape() const {
        return std::to_string(rows_) + "x" + std::to_string(cols_);
    }

private:
    void check_same_shape(const Mat& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument(std::string("Mat: dimension mismatch in ") + op + " " + shape() +
                                        " vs " + o.shape());
    }

    std::size_t rows_, cols_;
    std::vector<T> e_;
};

using IntMatrix = Mat<Int>;
using QuadMatrix = Mat<QuadExt>;

/// Set of distinct entries, used to test two-valuedness of products.
std::set<Int> entry_values(const IntMatrix& m);

/// True iff every entry lies in {0, 1}.
bool is_zero_one(const IntMatrix& m);

/// First cell (row-major) where the two matrices differ, as "(i,j): lhs vs rhs".
/// Empty string when equal. Shapes must match.
std::string first_difference(const IntMatrix& lhs, const IntMatrix& rhs);

IntMatrix to_int_matrix(const QuadMatrix& m);  // throws if any entry is irrational/non-integer
QuadMatrix to_quad_matrix(const IntMatrix& m);

}  // namespace lsgdd
