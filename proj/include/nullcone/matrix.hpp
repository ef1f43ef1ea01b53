#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nullcone/scalar.hpp"

namespace nullcone {

// Dense matrix over an exact field. Everything here is sized for the small
// matrices of the problem (n <= 3 blocks, stacked systems up to ~40 rows);
// storage is row-major with no sparsity.
class Mat {
public:
    Mat() : rows_(0), cols_(0), field_(Field::rationals()) {}
    Mat(Field f, std::size_t rows, std::size_t cols);

    static Mat identity(Field f, std::size_t n);
    static Mat zero(Field f, std::size_t rows, std::size_t cols) { return Mat(f, rows, cols); }
    // Matrix unit E_ij (1-based indices, matching the usual notation).
    static Mat unit(Field f, std::size_t n, std::size_t i, std::size_t j);
    // Builds from integer entries, row-major.
    static Mat from_ints(Field f, std::size_t rows, std::size_t cols,
                         std::initializer_list<long> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Field field() const { return field_; }
    bool is_square() const { return rows_ == cols_; }

    Scalar& at(std::size_t i, std::size_t j);
    const Scalar& at(std::size_t i, std::size_t j) const;

    bool is_zero() const;
    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator-() const;
    Mat operator*(const Mat& o) const;
    Mat scaled(const Scalar& c) const;
    Mat transpose() const;

    // True iff every entry strictly below-diagonal-only, i.e. entry (i,j) = 0
    // whenever i <= j.
    bool is_strictly_lower() const;

    Scalar det() const;               // square only
    std::optional<Mat> inverse() const;  // nullopt when singular

    // Rank over the exact field. Over Q this clears denominators row-wise and
    // runs fraction-free (Bareiss) elimination on integers; over GF(p) it runs
    // ordinary Gaussian elimination.
    std::size_t rank() const;

    // Basis of the right kernel {v : M v = 0}, as columns.
    std::vector<Mat> kernel_basis() const;

    // One solution of M x = b (b a column vector), or nullopt if inconsistent.
    std::optional<Mat> solve(const Mat& b) const;

    // Row-major flattening to a 1 x (rows*cols) row vector.
    Mat flatten_row() const;

    // Stacks blocks vertically / horizontally.
    static Mat vstack(const Mat& top, const Mat& bottom);
    static Mat hstack(const Mat& left, const Mat& right);

    // Kronecker product.
    static Mat kron(const Mat& a, const Mat& b);

    std::string str() const;

private:
    void check_same_shape(const Mat& o) const;
    std::size_t idx(std::size_t i, std::size_t j) const { return i * cols_ + j; }

    std::size_t rows_, cols_;
    Field field_;
    std::vector<Scalar> data_;
};

// Dimension of the linear span of equally-shaped matrices.
std::size_t span_dim(const std::vector<Mat>& mats);

// Coefficients expressing target in the given basis, or nullopt when target
// lies outside the span. The basis must be linearly independent.
std::optional<std::vector<Scalar>> membership_coords(const std::vector<Mat>& basis,
                                                     const Mat& target);

// Reduced row echelon form computed with ordinary field elimination.
// Returns the echelon matrix and the pivot column indices. This is the
// second, independent elimination path used to cross-check Bareiss ranks.
Mat rref(const Mat& m, std::vector<std::size_t>& pivot_cols);

}  // namespace nullcone
