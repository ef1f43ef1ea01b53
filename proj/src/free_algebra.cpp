#include "nullcone/free_algebra.hpp"

#include <cctype>
#include <sstream>

namespace nullcone {

unsigned NCPoly::max_generator() const {
    unsigned mx = 0;
    for (const auto& [w, c] : terms_)
        for (unsigned g : w) mx = std::max(mx, g);
    return mx;
}

NCPoly NCPoly::plus_term(const Word& w, const Scalar& c) const {
    NCPoly p = *this;
    auto it = p.terms_.find(w);
    Scalar nc = it == p.terms_.end() ? c : it->second + c;
    if (it != p.terms_.end()) p.terms_.erase(it);
    if (!nc.is_zero()) p.terms_.emplace(w, nc);
    return p;
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
    NCPoly p = *this;
    for (const auto& [w, c] : o.terms_) p = p.plus_term(w, c);
    return p;
}

NCPoly NCPoly::operator-(const NCPoly& o) const { return *this + (-o); }

NCPoly NCPoly::operator-() const {
    NCPoly p(field_);
    for (const auto& [w, c] : terms_) p.terms_.emplace(w, -c);
    return p;
}

NCPoly NCPoly::operator*(const NCPoly& o) const {
    NCPoly p(field_);
    for (const auto& [w1, c1] : terms_)
        for (const auto& [w2, c2] : o.terms_) {
            Word w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            p = p.plus_term(w, c1 * c2);
        }
    return p;
}

NCPoly NCPoly::scaled(const Scalar& c) const {
    NCPoly p(field_);
    if (c.is_zero()) return p;
    for (const auto& [w, k] : terms_) p.terms_.emplace(w, k * c);
    return p;
}

std::string NCPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (w.empty()) {
            os << c.str();
            continue;
        }
        if (!c.is_one()) os << c.str() << "*";
        for (std::size_t k = 0; k < w.size(); ++k) os << (k ? "*" : "") << "x" << w[k];
    }
    return os.str();
}

NCMatrix::NCMatrix(Field f, std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, NCPoly(f)) {}

NCMatrix NCMatrix::single(const NCPoly& p) {
    NCMatrix m(p.field(), 1, 1);
    m.at(0, 0) = p;
    return m;
}

NCPoly& NCMatrix::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw shape_mismatch("NCMatrix index out of range");
    return entries_[i * cols_ + j];
}

const NCPoly& NCMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw shape_mismatch("NCMatrix index out of range");
    return entries_[i * cols_ + j];
}

std::string NCMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).str();
    }
    os << "]";
    return os.str();
}

MatrixTuple::MatrixTuple(std::size_t n, std::vector<Mat> components)
    : n_(n), components_(std::move(components)) {
    if (components_.empty()) throw shape_mismatch("matrix tuple needs at least one component");
    for (const Mat& c : components_) {
        if (c.rows() != n_ || c.cols() != n_)
            throw shape_mismatch("matrix tuple components must be square of the declared size");
        if (c.field() != components_[0].field())
            throw field_mismatch("matrix tuple components over different fields");
    }
}

bool MatrixTuple::operator==(const MatrixTuple& o) const {
    return n_ == o.n_ && components_ == o.components_;
}

MatrixTuple MatrixTuple::conjugated(const Mat& g) const {
    auto inv = g.inverse();
    if (!inv) throw error("conjugation by a singular matrix");
    std::vector<Mat> comps;
    comps.reserve(m());
    for (const Mat& c : components_) comps.push_back(g * c * *inv);
    return MatrixTuple(n_, std::move(comps));
}

std::string MatrixTuple::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < m(); ++i) os << (i ? ", " : "") << components_[i].str();
    os << ")";
    return os.str();
}

Mat eval_word(const Word& w, const MatrixTuple& a) {
    Mat acc = Mat::identity(a.field(), a.n());
    for (unsigned g : w) {
        if (g == 0 || g > a.m())
            throw error("generator index x" + std::to_string(g) + " out of range for an m=" +
                        std::to_string(a.m()) + " tuple");
        acc = acc * a.component(g - 1);
    }
    return acc;
}

Mat eval_poly(const NCPoly& f, const MatrixTuple& a) {
    Mat acc(a.field(), a.n(), a.n());
    if (f.field() != a.field()) throw field_mismatch("polynomial and tuple fields differ");
    for (const auto& [w, c] : f.terms()) acc = acc + eval_word(w, a).scaled(c);
    return acc;
}

Mat eval_ncmatrix(const NCMatrix& phi, const MatrixTuple& a) {
    std::size_t n = a.n();
    Mat block(a.field(), phi.rows() * n, phi.cols() * n);
    for (std::size_t i = 0; i < phi.rows(); ++i)
        for (std::size_t j = 0; j < phi.cols(); ++j) {
            Mat b = eval_poly(phi.at(i, j), a);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) block.at(i * n + r, j * n + c) = b.at(r, c);
        }
    return block;
}

std::size_t eval_ncmatrix_rank(const NCMatrix& phi, const MatrixTuple& a) {
    return eval_ncmatrix(phi, a).rank();
}

std::size_t kron_rank(const MatrixTuple& a, const std::vector<Mat>& t) {
    if (t.size() != a.m() + 1)
        throw shape_mismatch("kron_rank needs m+1 coefficient matrices");
    for (const Mat& ti : t)
        if (ti.rows() != t[0].rows() || ti.cols() != t[0].cols())
            throw shape_mismatch("kron_rank coefficient matrices must share one shape");
    Mat acc = Mat::kron(Mat::identity(a.field(), a.n()), t[0]);
    for (std::size_t i = 0; i < a.m(); ++i) acc = acc + Mat::kron(a.component(i), t[i + 1]);
    return acc.rank();
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    Field field;
    const std::map<std::string, Scalar>& params;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, pos); }

    Scalar parse_number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected a number");
        std::string text = s.substr(start, pos - start);
        if (eat('/')) {
            std::size_t dstart = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (dstart == pos) fail("expected a denominator");
            text += "/" + s.substr(dstart, pos - dstart);
        }
        return field.parse(text);
    }

    unsigned parse_exponent() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected an exponent");
        return static_cast<unsigned>(std::stoul(s.substr(start, pos - start)));
    }

    // factor := number | name | x<k>[^e]
    NCPoly parse_factor() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c)))
            return NCPoly::one(field).scaled(parse_number());
        if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_') fail("expected a factor");
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        std::string name = s.substr(start, pos - start);
        if (name.size() > 1 && name[0] == 'x' &&
            std::all_of(name.begin() + 1, name.end(),
                        [](char d) { return std::isdigit(static_cast<unsigned char>(d)); })) {
            unsigned gen = static_cast<unsigned>(std::stoul(name.substr(1)));
            if (gen == 0) fail("generator indices start at x1");
            unsigned exp = 1;
            if (eat('^')) exp = parse_exponent();
            NCPoly p = NCPoly::one(field);
            for (unsigned k = 0; k < exp; ++k) p = p * NCPoly::gen(field, gen);
            return p;
        }
        auto it = params.find(name);
        if (it == params.end()) {
            pos = start;
            fail("unknown parameter '" + name + "'");
        }
        return NCPoly::one(field).scaled(it->second);
    }

    NCPoly parse_term() {
        NCPoly p = parse_factor();
        while (eat('*')) p = p * parse_factor();
        return p;
    }

    NCPoly parse_poly() {
        NCPoly acc(field);
        bool negative = false;
        skip_ws();
        if (eat('-'))
            negative = true;
        else
            eat('+');
        while (true) {
            NCPoly t = parse_term();
            acc = negative ? acc - t : acc + t;
            skip_ws();
            if (eat('+'))
                negative = false;
            else if (eat('-'))
                negative = true;
            else
                break;
        }
        skip_ws();
        if (pos != s.size()) fail("trailing input");
        return acc;
    }
};

}  // namespace

NCPoly parse_ncpoly(const std::string& text, Field f,
                    const std::map<std::string, Scalar>& params) {
    Parser p{text, 0, f, params};
    return p.parse_poly();
}

}  // namespace nullcone
