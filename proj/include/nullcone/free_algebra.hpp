#pragma once

#include <map>
#include <string>
#include <vector>

#include "nullcone/matrix.hpp"

namespace nullcone {

// Monomial in the free algebra: a sequence of generator indices in [1, m].
// The empty word is the identity element.
using Word = std::vector<unsigned>;

// Deterministic word order: by length first, then lexicographically.
struct WordLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

// Noncommutative polynomial in x1..xm with exact coefficients.
// Zero coefficients are never stored.
class NCPoly {
public:
    explicit NCPoly(Field f) : field_(f) {}

    static NCPoly zero(Field f) { return NCPoly(f); }
    static NCPoly one(Field f) { return NCPoly(f).plus_term(Word{}, f.one()); }
    static NCPoly gen(Field f, unsigned i) { return NCPoly(f).plus_term(Word{i}, f.one()); }

    Field field() const { return field_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Word, Scalar, WordLess>& terms() const { return terms_; }

    // Largest generator index appearing; 0 for constants.
    unsigned max_generator() const;

    NCPoly plus_term(const Word& w, const Scalar& c) const;
    NCPoly operator+(const NCPoly& o) const;
    NCPoly operator-(const NCPoly& o) const;
    NCPoly operator-() const;
    NCPoly operator*(const NCPoly& o) const;  // concatenates words
    NCPoly scaled(const Scalar& c) const;
    bool operator==(const NCPoly& o) const { return (*this - o).is_zero(); }

    std::string str() const;

private:
    Field field_;
    std::map<Word, Scalar, WordLess> terms_;
};

// Rectangular matrix of noncommutative polynomials.
class NCMatrix {
public:
    NCMatrix(Field f, std::size_t rows, std::size_t cols);
    static NCMatrix single(const NCPoly& p);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    NCPoly& at(std::size_t i, std::size_t j);
    const NCPoly& at(std::size_t i, std::size_t j) const;

    std::string str() const;

private:
    std::size_t rows_, cols_;
    std::vector<NCPoly> entries_;
};

// Ordered m-tuple of n x n matrices: the object acted on by simultaneous
// conjugation.
class MatrixTuple {
public:
    MatrixTuple(std::size_t n, std::vector<Mat> components);

    std::size_t n() const { return n_; }
    std::size_t m() const { return components_.size(); }
    Field field() const { return components_.at(0).field(); }
    const Mat& component(std::size_t i) const { return components_.at(i); }
    const std::vector<Mat>& components() const { return components_; }

    bool operator==(const MatrixTuple& o) const;
    bool operator!=(const MatrixTuple& o) const { return !(*this == o); }

    // g . A = (g A1 g^-1, ..., g Am g^-1); g must be invertible.
    MatrixTuple conjugated(const Mat& g) const;

    std::string str() const;

private:
    std::size_t n_;
    std::vector<Mat> components_;
};

// Evaluates a word at a tuple: the product of the named components
// (identity for the empty word).
Mat eval_word(const Word& w, const MatrixTuple& a);

// f(A): substitute the tuple components for the generators.
// Throws when f uses a generator index beyond the tuple arity.
Mat eval_poly(const NCPoly& f, const MatrixTuple& a);

// phi(A): the kn x ln block matrix with blocks phi_ij(A).
Mat eval_ncmatrix(const NCMatrix& phi, const MatrixTuple& a);

// rank of phi(A) over the exact field.
std::size_t eval_ncmatrix_rank(const NCMatrix& phi, const MatrixTuple& a);

// rank of I (x) T0 + A1 (x) T1 + ... + Am (x) Tm, where (x) is the Kronecker
// product and the T_i all share one shape.
std::size_t kron_rank(const MatrixTuple& a, const std::vector<Mat>& t);

// Parses the textual grammar for noncommutative polynomials:
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := number | name | x<k> ['^' exponent]
// Numbers may be fractions like 3/4; names are substituted from params.
NCPoly parse_ncpoly(const std::string& text, Field f,
                    const std::map<std::string, Scalar>& params = {});

}  // namespace nullcone
