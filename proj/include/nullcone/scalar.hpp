#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

#include "nullcone/errors.hpp"

namespace nullcone {

class Scalar;

// Field context: the rationals, or a prime field GF(p).
// A Field is a lightweight descriptor; Scalars carry their own context and
// every binary operation checks that the contexts agree.
class Field {
public:
    static Field rationals() { return Field(0); }
    static Field gfp(std::uint64_t p);

    bool is_rational() const { return p_ == 0; }
    std::uint64_t prime() const { return p_; }

    Scalar zero() const;
    Scalar one() const;
    // Image of the integer n in this field.
    Scalar from_int(long n) const;
    // Image of the fraction num/den; den must be invertible.
    Scalar from_fraction(long num, long den) const;
    // Parses "n" or "n/d" (arbitrary precision).
    Scalar parse(const std::string& text) const;
    // Image of an arbitrary-precision rational (reduces mod p over GF(p)).
    Scalar from_rational(const mpq_class& q) const;

    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }

    std::string describe() const;

private:
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_;  // 0 = rationals, otherwise a prime modulus
};

// An exact field element: a reduced fraction over Z, or a residue mod p.
// Fractions are kept canonical (lowest terms, positive denominator) by GMP;
// residues lie in [0, p).
class Scalar {
public:
    Scalar() : p_(0) {}  // rational zero

    Field field() const { return p_ == 0 ? Field::rationals() : Field::gfp(p_); }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws on division by zero
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    // Total order used for deterministic sorting; not a field order.
    bool operator<(const Scalar& o) const;

    // True for residues and for rationals with denominator 1.
    bool is_integral() const;

    std::string str() const;

    // Rational value accessor; only valid over Q.
    const mpq_class& rational() const;
    // Residue accessor; only valid over GF(p).
    std::uint64_t residue() const;

    friend class Field;
    friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

private:
    void check_same_field(const Scalar& o) const;

    mpq_class q_;            // used iff p_ == 0
    std::uint64_t r_ = 0;    // used iff p_ != 0
    std::uint64_t p_ = 0;    // 0 = rationals
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Legendre-symbol square root in GF(p); returns false if a is a non-residue.
// Used by the 2x2 eigenvalue computations.
bool sqrt_mod_p(std::uint64_t a, std::uint64_t p, std::uint64_t& root);

// Exact square root of a rational if it is a perfect square.
bool sqrt_rational(const mpq_class& a, mpq_class& root);

}  // namespace nullcone
