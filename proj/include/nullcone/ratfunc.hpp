#pragma once

#include <vector>

#include "nullcone/matrix.hpp"

namespace nullcone {

// Univariate polynomial in the formal parameter eps, dense coefficients,
// constant term first. Trailing zero coefficients are trimmed.
class EpsPoly {
public:
    explicit EpsPoly(Field f) : field_(f) {}
    EpsPoly(Field f, std::vector<Scalar> coeffs);

    static EpsPoly constant(const Scalar& c);
    static EpsPoly eps(Field f);  // the monomial eps

    Field field() const { return field_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    Scalar coeff(std::size_t k) const;
    Scalar leading() const;

    EpsPoly operator+(const EpsPoly& o) const;
    EpsPoly operator-(const EpsPoly& o) const;
    EpsPoly operator-() const;
    EpsPoly operator*(const EpsPoly& o) const;
    EpsPoly scaled(const Scalar& c) const;
    bool operator==(const EpsPoly& o) const;

    // Quotient and remainder; divisor must be nonzero.
    static void divmod(const EpsPoly& a, const EpsPoly& b, EpsPoly& q, EpsPoly& r);
    static EpsPoly gcd(EpsPoly a, EpsPoly b);  // monic gcd, or zero if both zero

    EpsPoly monic() const;

    Scalar eval(const Scalar& x) const;
    std::string str() const;

private:
    void trim();
    Field field_;
    std::vector<Scalar> coeffs_;
};

// Rational function in eps: numerator/denominator with the denominator monic
// and gcd(num, den) = 1. With that normalization "has a pole at 0" is exactly
// "constant term of the denominator vanishes".
class RatFunc {
public:
    explicit RatFunc(Field f) : num_(f), den_(EpsPoly::constant(f.one())) {}
    RatFunc(EpsPoly num, EpsPoly den);

    static RatFunc constant(const Scalar& c);
    static RatFunc from_int(Field f, long n) { return constant(f.from_int(n)); }
    static RatFunc eps(Field f) { return RatFunc(EpsPoly::eps(f), EpsPoly::constant(f.one())); }
    // eps^k for k possibly negative.
    static RatFunc eps_power(Field f, long k);

    Field field() const { return num_.field(); }
    const EpsPoly& num() const { return num_; }
    const EpsPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    bool operator==(const RatFunc& o) const;

    bool has_pole_at_zero() const { return den_.coeff(0).is_zero(); }
    // f(0); throws pole_at_zero when the reduced denominator vanishes at 0.
    Scalar eval_at_zero() const;
    // f(c) for c with den(c) != 0.
    Scalar eval(const Scalar& c) const;
    bool has_pole_at(const Scalar& c) const { return den_.eval(c).is_zero(); }

    std::string str() const;

private:
    void normalize();
    EpsPoly num_, den_;
};

// Square matrix whose entries are rational functions of eps; the carrier of
// one-parameter curves of group elements.
class EpsMat {
public:
    EpsMat(Field f, std::size_t n);

    static EpsMat identity(Field f, std::size_t n);
    // Lifts a scalar matrix to constant rational functions.
    static EpsMat from_scalar(const Mat& m);

    std::size_t size() const { return n_; }
    Field field() const { return field_; }

    RatFunc& at(std::size_t i, std::size_t j);
    const RatFunc& at(std::size_t i, std::size_t j) const;

    EpsMat operator+(const EpsMat& o) const;
    EpsMat operator*(const EpsMat& o) const;
    EpsMat scaled(const RatFunc& c) const;
    bool operator==(const EpsMat& o) const;

    RatFunc det() const;  // cofactor expansion; n <= 4 in practice

    // Inverse via adjugate over the rational function field; throws
    // singular_curve_matrix when det is identically zero.
    EpsMat inverse() const;

    // Entry-wise evaluation; throws pole_at_zero if any entry has a pole at 0.
    Mat limit_at_zero() const;
    bool pole_free_at_zero() const;
    // Entry-wise evaluation at eps = c.
    Mat eval(const Scalar& c) const;
    bool pole_free_at(const Scalar& c) const;

    std::string str() const;

private:
    std::size_t n_;
    Field field_;
    std::vector<RatFunc> data_;
};

}  // namespace nullcone
