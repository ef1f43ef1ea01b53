#pragma once

#include <optional>
#include <string>

#include "nullcone/free_algebra.hpp"

namespace nullcone {

// A parameter from K together with the extra point at infinity used in the
// orbit names.
class ExtParam {
public:
    static ExtParam inf() { return ExtParam(); }
    static ExtParam fin(const Scalar& v) { return ExtParam(v); }

    bool is_inf() const { return !value_.has_value(); }
    const Scalar& value() const;

    bool operator==(const ExtParam& o) const;
    bool operator!=(const ExtParam& o) const { return !(*this == o); }

    std::string str() const { return is_inf() ? "inf" : value_->str(); }

private:
    ExtParam() = default;
    explicit ExtParam(const Scalar& v) : value_(v) {}
    std::optional<Scalar> value_;
};

enum class Letter { A, B, C, D, E, O };

std::string letter_name(Letter l);

// Canonical name of a GL3-orbit of nilpotent 3x3 pairs: a letter plus its
// parameters.
//   A[p,q]   with at most one of p,q infinite; q != 0 when both finite
//   B[p,q]   p finite or inf, q finite
//   C, D     no parameters
//   E[p]     p finite or inf
//   O        no parameters
// Labels are geometric: they name the orbit over the algebraic closure.
// Every classification formula is rational (no root extraction occurs), so
// tuples over Q or GF(p) receive the label of their geometric orbit, and
// two tuples share a label exactly when they are conjugate over the base
// field as well.
class OrbitLabel {
public:
    static OrbitLabel A(ExtParam p1, ExtParam p2);
    static OrbitLabel B(ExtParam p1, ExtParam p2);
    static OrbitLabel C() { return OrbitLabel(Letter::C, {}); }
    static OrbitLabel D() { return OrbitLabel(Letter::D, {}); }
    static OrbitLabel E(ExtParam p) { return OrbitLabel(Letter::E, {p}); }
    static OrbitLabel O() { return OrbitLabel(Letter::O, {}); }

    Letter letter() const { return letter_; }
    const std::vector<ExtParam>& params() const { return params_; }
    const ExtParam& param(std::size_t i) const { return params_.at(i); }

    bool operator==(const OrbitLabel& o) const;
    bool operator!=(const OrbitLabel& o) const { return !(*this == o); }

    // Text form: "A[2,-1/3]", "B[inf,0]", "E[inf]", "C".
    std::string str() const;
    static OrbitLabel parse(const std::string& text, Field f);

private:
    OrbitLabel(Letter l, std::vector<ExtParam> p) : letter_(l), params_(std::move(p)) {}
    Letter letter_;
    std::vector<ExtParam> params_;
};

// The canonical representative tuple of a labelled orbit, over the given
// field (the field of any finite parameter must match).
MatrixTuple representative(const OrbitLabel& label, Field f);

}  // namespace nullcone
