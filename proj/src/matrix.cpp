#include "nullcone/matrix.hpp"

#include <sstream>

namespace nullcone {

Mat::Mat(Field f, std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), field_(f), data_(rows * cols, f.zero()) {}

Mat Mat::identity(Field f, std::size_t n) {
    Mat m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
}

Mat Mat::unit(Field f, std::size_t n, std::size_t i, std::size_t j) {
    Mat m(f, n, n);
    m.at(i - 1, j - 1) = f.one();
    return m;
}

Mat Mat::from_ints(Field f, std::size_t rows, std::size_t cols,
                   std::initializer_list<long> entries) {
    if (entries.size() != rows * cols) throw shape_mismatch("from_ints: wrong entry count");
    Mat m(f, rows, cols);
    std::size_t k = 0;
    for (long e : entries) m.data_[k++] = f.from_int(e);
    return m;
}

Scalar& Mat::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw shape_mismatch("matrix index out of range");
    return data_[idx(i, j)];
}

const Scalar& Mat::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw shape_mismatch("matrix index out of range");
    return data_[idx(i, j)];
}

bool Mat::is_zero() const {
    for (const auto& s : data_)
        if (!s.is_zero()) return false;
    return true;
}

bool Mat::operator==(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (data_[k] != o.data_[k]) return false;
    return true;
}

void Mat::check_same_shape(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw shape_mismatch("matrix shapes differ");
    if (field_ != o.field_) throw field_mismatch("matrices over different fields");
}

Mat Mat::operator+(const Mat& o) const {
    check_same_shape(o);
    Mat m = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] + o.data_[k];
    return m;
}

Mat Mat::operator-(const Mat& o) const {
    check_same_shape(o);
    Mat m = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] - o.data_[k];
    return m;
}

Mat Mat::operator-() const {
    Mat m = *this;
    for (auto& s : m.data_) s = -s;
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw shape_mismatch("matrix product shapes differ");
    if (field_ != o.field_) throw field_mismatch("matrices over different fields");
    Mat m(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (data_[idx(i, k)].is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                m.data_[m.idx(i, j)] += data_[idx(i, k)] * o.data_[o.idx(k, j)];
        }
    return m;
}

Mat Mat::scaled(const Scalar& c) const {
    Mat m = *this;
    for (auto& s : m.data_) s = s * c;
    return m;
}

Mat Mat::transpose() const {
    Mat m(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

bool Mat::is_strictly_lower() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            if (!at(i, j).is_zero()) return false;
    return true;
}

Mat rref(const Mat& m, std::vector<std::size_t>& pivot_cols) {
    Mat a = m;
    pivot_cols.clear();
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t piv = row;
        while (piv < a.rows() && a.at(piv, col).is_zero()) ++piv;
        if (piv == a.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(row, j), a.at(piv, j));
        Scalar inv = a.at(row, col).inverse();
        for (std::size_t j = col; j < a.cols(); ++j) a.at(row, j) = a.at(row, j) * inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a.at(i, col).is_zero()) continue;
            Scalar f = a.at(i, col);
            for (std::size_t j = col; j < a.cols(); ++j)
                a.at(i, j) = a.at(i, j) - f * a.at(row, j);
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return a;
}

namespace {

// Fraction-free elimination on an integer matrix; returns the rank.
// Columns without a pivot are skipped; divisions are exact by the
// Sylvester minor identity (entries stay minors of the original matrix).
// Exactness is asserted rather than assumed.
std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> a) {
    if (a.empty()) return 0;
    std::size_t rows = a.size(), cols = a[0].size();
    mpz_class prev(1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != row) std::swap(a[piv], a[row]);
        const mpz_class pivot = a[row][col];
        for (std::size_t i = row + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                mpz_class num = a[i][j] * pivot - a[i][col] * a[row][j];
                if (!mpz_divisible_p(num.get_mpz_t(), prev.get_mpz_t()))
                    throw internal_error("fraction-free elimination: inexact division");
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = pivot;
        ++row;
    }
    return row;
}

}  // namespace

std::size_t Mat::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    if (field_.is_rational()) {
        std::vector<std::vector<mpz_class>> zm(rows_, std::vector<mpz_class>(cols_));
        for (std::size_t i = 0; i < rows_; ++i) {
            mpz_class lcm(1);
            for (std::size_t j = 0; j < cols_; ++j)
                mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                        at(i, j).rational().get_den().get_mpz_t());
            for (std::size_t j = 0; j < cols_; ++j) {
                const mpq_class& q = at(i, j).rational();
                zm[i][j] = q.get_num() * (lcm / q.get_den());
            }
        }
        return bareiss_rank(std::move(zm));
    }
    std::vector<std::size_t> pivots;
    rref(*this, pivots);
    return pivots.size();
}

std::vector<Mat> Mat::kernel_basis() const {
    std::vector<std::size_t> pivots;
    Mat e = rref(*this, pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<Mat> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        Mat v(field_, cols_, 1);
        v.at(free, 0) = field_.one();
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v.at(pivots[r], 0) = -e.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Mat> Mat::solve(const Mat& b) const {
    if (b.rows() != rows_ || b.cols() != 1) throw shape_mismatch("solve: bad rhs shape");
    Mat aug = hstack(*this, b);
    std::vector<std::size_t> pivots;
    Mat e = rref(aug, pivots);
    for (std::size_t c : pivots)
        if (c == cols_) return std::nullopt;  // pivot in the rhs column: inconsistent
    Mat x(field_, cols_, 1);
    for (std::size_t r = 0; r < pivots.size(); ++r) x.at(pivots[r], 0) = e.at(r, cols_);
    return x;
}

Scalar Mat::det() const {
    if (!is_square()) throw shape_mismatch("det of non-square matrix");
    std::size_t n = rows_;
    Mat a = *this;
    Scalar d = field_.one();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a.at(piv, col).is_zero()) ++piv;
        if (piv == n) return field_.zero();
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(col, j), a.at(piv, j));
            d = -d;
        }
        d = d * a.at(col, col);
        Scalar inv = a.at(col, col).inverse();
        for (std::size_t i = col + 1; i < n; ++i) {
            Scalar f = a.at(i, col) * inv;
            if (f.is_zero()) continue;
            for (std::size_t j = col; j < n; ++j) a.at(i, j) = a.at(i, j) - f * a.at(col, j);
        }
    }
    return d;
}

std::optional<Mat> Mat::inverse() const {
    if (!is_square()) throw shape_mismatch("inverse of non-square matrix");
    Mat aug = hstack(*this, identity(field_, rows_));
    std::vector<std::size_t> pivots;
    Mat e = rref(aug, pivots);
    if (pivots.size() != rows_) return std::nullopt;
    for (std::size_t r = 0; r < rows_; ++r)
        if (pivots[r] != r) return std::nullopt;
    Mat inv(field_, rows_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < rows_; ++j) inv.at(i, j) = e.at(i, rows_ + j);
    return inv;
}

Mat Mat::flatten_row() const {
    Mat m(field_, 1, rows_ * cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k];
    return m;
}

Mat Mat::vstack(const Mat& top, const Mat& bottom) {
    if (top.cols() != bottom.cols()) throw shape_mismatch("vstack: column counts differ");
    if (top.field() != bottom.field()) throw field_mismatch("vstack: fields differ");
    Mat m(top.field(), top.rows() + bottom.rows(), top.cols());
    for (std::size_t i = 0; i < top.rows(); ++i)
        for (std::size_t j = 0; j < top.cols(); ++j) m.at(i, j) = top.at(i, j);
    for (std::size_t i = 0; i < bottom.rows(); ++i)
        for (std::size_t j = 0; j < bottom.cols(); ++j) m.at(top.rows() + i, j) = bottom.at(i, j);
    return m;
}

Mat Mat::hstack(const Mat& left, const Mat& right) {
    if (left.rows() != right.rows()) throw shape_mismatch("hstack: row counts differ");
    if (left.field() != right.field()) throw field_mismatch("hstack: fields differ");
    Mat m(left.field(), left.rows(), left.cols() + right.cols());
    for (std::size_t i = 0; i < left.rows(); ++i) {
        for (std::size_t j = 0; j < left.cols(); ++j) m.at(i, j) = left.at(i, j);
        for (std::size_t j = 0; j < right.cols(); ++j) m.at(i, left.cols() + j) = right.at(i, j);
    }
    return m;
}

Mat Mat::kron(const Mat& a, const Mat& b) {
    if (a.field() != b.field()) throw field_mismatch("kron: fields differ");
    Mat m(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    m.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
        }
    return m;
}

std::string Mat::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j).str();
        os << "]";
    }
    os << "]";
    return os.str();
}

std::size_t span_dim(const std::vector<Mat>& mats) {
    if (mats.empty()) return 0;
    for (const Mat& m : mats)
        if (m.rows() != mats[0].rows() || m.cols() != mats[0].cols())
            throw shape_mismatch("span_dim: mixed shapes");
    Mat stacked = mats[0].flatten_row();
    for (std::size_t k = 1; k < mats.size(); ++k)
        stacked = Mat::vstack(stacked, mats[k].flatten_row());
    return stacked.rank();
}

std::optional<std::vector<Scalar>> membership_coords(const std::vector<Mat>& basis,
                                                     const Mat& target) {
    if (basis.empty()) {
        if (target.is_zero()) return std::vector<Scalar>{};
        return std::nullopt;
    }
    if (span_dim(basis) != basis.size())
        throw error("membership_coords: basis is linearly dependent");
    // Columns of the system are the flattened basis elements.
    Field f = target.field();
    std::size_t dim = target.rows() * target.cols();
    Mat sys(f, dim, basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (basis[k].rows() != target.rows() || basis[k].cols() != target.cols())
            throw shape_mismatch("membership_coords: mixed shapes");
        Mat fl = basis[k].flatten_row();
        for (std::size_t i = 0; i < dim; ++i) sys.at(i, k) = fl.at(0, i);
    }
    Mat rhs(f, dim, 1);
    Mat tf = target.flatten_row();
    for (std::size_t i = 0; i < dim; ++i) rhs.at(i, 0) = tf.at(0, i);
    auto sol = sys.solve(rhs);
    if (!sol) return std::nullopt;
    std::vector<Scalar> coords;
    coords.reserve(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) coords.push_back(sol->at(k, 0));
    return coords;
}

}  // namespace nullcone
