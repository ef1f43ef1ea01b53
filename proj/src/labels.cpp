#include "nullcone/labels.hpp"

#include <sstream>

namespace nullcone {

const Scalar& ExtParam::value() const {
    if (is_inf()) throw error("value() of the infinite parameter");
    return *value_;
}

bool ExtParam::operator==(const ExtParam& o) const {
    if (is_inf() != o.is_inf()) return false;
    return is_inf() || *value_ == *o.value_;
}

std::string letter_name(Letter l) {
    switch (l) {
        case Letter::A: return "A";
        case Letter::B: return "B";
        case Letter::C: return "C";
        case Letter::D: return "D";
        case Letter::E: return "E";
        case Letter::O: return "O";
    }
    throw internal_error("unreachable letter");
}

OrbitLabel OrbitLabel::A(ExtParam p1, ExtParam p2) {
    if (p1.is_inf() && p2.is_inf()) throw error("A label: both parameters infinite");
    if (!p1.is_inf() && !p2.is_inf() && p2.value().is_zero())
        throw error("A label: second parameter must be nonzero when both are finite");
    return OrbitLabel(Letter::A, {p1, p2});
}

OrbitLabel OrbitLabel::B(ExtParam p1, ExtParam p2) {
    if (p2.is_inf()) throw error("B label: second parameter must be finite");
    return OrbitLabel(Letter::B, {p1, p2});
}

bool OrbitLabel::operator==(const OrbitLabel& o) const {
    return letter_ == o.letter_ && params_ == o.params_;
}

std::string OrbitLabel::str() const {
    std::ostringstream os;
    os << letter_name(letter_);
    if (!params_.empty()) {
        os << "[";
        for (std::size_t i = 0; i < params_.size(); ++i)
            os << (i ? "," : "") << params_[i].str();
        os << "]";
    }
    return os.str();
}

OrbitLabel OrbitLabel::parse(const std::string& text, Field f) {
    if (text.empty()) throw parse_error("empty orbit label", 0);
    Letter letter;
    switch (text[0]) {
        case 'A': letter = Letter::A; break;
        case 'B': letter = Letter::B; break;
        case 'C': letter = Letter::C; break;
        case 'D': letter = Letter::D; break;
        case 'E': letter = Letter::E; break;
        case 'O': letter = Letter::O; break;
        default: throw parse_error("orbit letter must be one of A,B,C,D,E,O", 0);
    }
    std::vector<ExtParam> params;
    if (text.size() > 1) {
        if (text[1] != '[' || text.back() != ']')
            throw parse_error("expected bracketed parameters", 1);
        std::string inner = text.substr(2, text.size() - 3);
        std::size_t start = 0;
        while (start <= inner.size()) {
            std::size_t comma = inner.find(',', start);
            std::string piece =
                comma == std::string::npos ? inner.substr(start) : inner.substr(start, comma - start);
            if (piece.empty()) throw parse_error("empty label parameter", start + 2);
            params.push_back(piece == "inf" ? ExtParam::inf() : ExtParam::fin(f.parse(piece)));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    auto need = [&](std::size_t k) {
        if (params.size() != k)
            throw parse_error("wrong parameter count for letter " + std::string(1, text[0]), 0);
    };
    switch (letter) {
        case Letter::A: need(2); return OrbitLabel::A(params[0], params[1]);
        case Letter::B: need(2); return OrbitLabel::B(params[0], params[1]);
        case Letter::C: need(0); return OrbitLabel::C();
        case Letter::D: need(0); return OrbitLabel::D();
        case Letter::E: need(1); return OrbitLabel::E(params[0]);
        case Letter::O: need(0); return OrbitLabel::O();
    }
    throw internal_error("unreachable letter");
}

MatrixTuple representative(const OrbitLabel& label, Field f) {
    auto E = [&](std::size_t i, std::size_t j) { return Mat::unit(f, 3, i, j); };
    Mat zero = Mat::zero(f, 3, 3);
    auto fin = [&](const ExtParam& p) {
        if (p.value().field() != f) throw field_mismatch("label parameter over a different field");
        return p.value();
    };
    switch (label.letter()) {
        case Letter::A: {
            const ExtParam& p1 = label.param(0);
            const ExtParam& p2 = label.param(1);
            if (p2.is_inf())  // (E21, l*E21 + E32)
                return MatrixTuple(3, {E(2, 1), E(2, 1).scaled(fin(p1)) + E(3, 2)});
            if (p1.is_inf())  // (E32, E21 + l*E32)
                return MatrixTuple(3, {E(3, 2), E(2, 1) + E(3, 2).scaled(fin(p2))});
            Mat reg = E(2, 1) + E(3, 2);
            return MatrixTuple(3, {reg, reg.scaled(fin(p1)) + E(3, 2).scaled(fin(p2))});
        }
        case Letter::B: {
            const ExtParam& p1 = label.param(0);
            const Scalar q = fin(label.param(1));
            Mat reg = E(2, 1) + E(3, 2);
            if (p1.is_inf())  // (l*E31, E21 + E32)
                return MatrixTuple(3, {E(3, 1).scaled(q), reg});
            return MatrixTuple(3, {reg, reg.scaled(fin(p1)) + E(3, 1).scaled(q)});
        }
        case Letter::C:
            return MatrixTuple(3, {E(2, 1), E(3, 1)});
        case Letter::D:
            return MatrixTuple(3, {E(3, 1), E(3, 2)});
        case Letter::E: {
            const ExtParam& p = label.param(0);
            if (p.is_inf()) return MatrixTuple(3, {zero, E(2, 1)});
            return MatrixTuple(3, {E(2, 1), E(2, 1).scaled(fin(p))});
        }
        case Letter::O:
            return MatrixTuple(3, {zero, zero});
    }
    throw internal_error("unreachable letter");
}

}  // namespace nullcone
