#include "nullcone/ratfunc.hpp"

#include <sstream>

namespace nullcone {

EpsPoly::EpsPoly(Field f, std::vector<Scalar> coeffs) : field_(f), coeffs_(std::move(coeffs)) {
    trim();
}

void EpsPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

EpsPoly EpsPoly::constant(const Scalar& c) {
    EpsPoly p(c.field());
    if (!c.is_zero()) p.coeffs_ = {c};
    return p;
}

EpsPoly EpsPoly::eps(Field f) { return EpsPoly(f, {f.zero(), f.one()}); }

Scalar EpsPoly::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : field_.zero();
}

Scalar EpsPoly::leading() const {
    return coeffs_.empty() ? field_.zero() : coeffs_.back();
}

EpsPoly EpsPoly::operator+(const EpsPoly& o) const {
    std::vector<Scalar> c(std::max(coeffs_.size(), o.coeffs_.size()), field_.zero());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = coeff(k) + o.coeff(k);
    return EpsPoly(field_, std::move(c));
}

EpsPoly EpsPoly::operator-(const EpsPoly& o) const { return *this + (-o); }

EpsPoly EpsPoly::operator-() const {
    EpsPoly p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

EpsPoly EpsPoly::operator*(const EpsPoly& o) const {
    if (is_zero() || o.is_zero()) return EpsPoly(field_);
    std::vector<Scalar> c(coeffs_.size() + o.coeffs_.size() - 1, field_.zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * o.coeffs_[j];
    return EpsPoly(field_, std::move(c));
}

EpsPoly EpsPoly::scaled(const Scalar& c) const {
    EpsPoly p = *this;
    for (auto& x : p.coeffs_) x = x * c;
    p.trim();
    return p;
}

bool EpsPoly::operator==(const EpsPoly& o) const {
    return (*this - o).is_zero();
}

void EpsPoly::divmod(const EpsPoly& a, const EpsPoly& b, EpsPoly& q, EpsPoly& r) {
    if (b.is_zero()) throw error("polynomial division by zero");
    Field f = a.field_;
    q = EpsPoly(f);
    r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        std::size_t shift = r.degree() - b.degree();
        Scalar c = r.leading() / b.leading();
        std::vector<Scalar> mono(shift + 1, f.zero());
        mono[shift] = c;
        EpsPoly term(f, std::move(mono));
        q = q + term;
        r = r - term * b;
    }
}

EpsPoly EpsPoly::gcd(EpsPoly a, EpsPoly b) {
    while (!b.is_zero()) {
        EpsPoly q(a.field_), r(a.field_);
        divmod(a, b, q, r);
        a = b;
        b = r;
    }
    return a.monic();
}

EpsPoly EpsPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inverse());
}

Scalar EpsPoly::eval(const Scalar& x) const {
    Scalar acc = field_.zero();
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
    return acc;
}

std::string EpsPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (k == 0 || !coeffs_[k].is_one()) os << coeffs_[k].str() << (k ? "*" : "");
        if (k == 1) os << "e";
        if (k > 1) os << "e^" << k;
    }
    return os.str();
}

RatFunc::RatFunc(EpsPoly num, EpsPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw error("rational function with zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = EpsPoly::constant(field().one());
        return;
    }
    EpsPoly g = EpsPoly::gcd(num_, den_);
    if (g.degree() > 0 || !g.leading().is_one()) {
        EpsPoly q(field()), r(field());
        EpsPoly::divmod(num_, g, q, r);
        num_ = q;
        EpsPoly::divmod(den_, g, q, r);
        den_ = q;
    }
    Scalar lead = den_.leading();
    if (!lead.is_one()) {
        Scalar inv = lead.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RatFunc RatFunc::constant(const Scalar& c) {
    return RatFunc(EpsPoly::constant(c), EpsPoly::constant(c.field().one()));
}

RatFunc RatFunc::eps_power(Field f, long k) {
    if (k >= 0) {
        std::vector<Scalar> c(static_cast<std::size_t>(k) + 1, f.zero());
        c.back() = f.one();
        return RatFunc(EpsPoly(f, std::move(c)), EpsPoly::constant(f.one()));
    }
    std::vector<Scalar> c(static_cast<std::size_t>(-k) + 1, f.zero());
    c.back() = f.one();
    return RatFunc(EpsPoly::constant(f.one()), EpsPoly(f, std::move(c)));
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw error("division by the zero rational function");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

bool RatFunc::operator==(const RatFunc& o) const {
    return (num_ * o.den_ - o.num_ * den_).is_zero();
}

Scalar RatFunc::eval_at_zero() const {
    if (has_pole_at_zero()) throw pole_at_zero("rational function has a pole at eps = 0");
    return num_.coeff(0) / den_.coeff(0);
}

Scalar RatFunc::eval(const Scalar& c) const {
    Scalar d = den_.eval(c);
    if (d.is_zero()) throw pole_at_zero("rational function has a pole at eps = " + c.str());
    return num_.eval(c) / d;
}

std::string RatFunc::str() const {
    if (den_.degree() == 0) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

EpsMat::EpsMat(Field f, std::size_t n)
    : n_(n), field_(f), data_(n * n, RatFunc(f)) {}

EpsMat EpsMat::identity(Field f, std::size_t n) {
    EpsMat m(f, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = RatFunc::constant(f.one());
    return m;
}

EpsMat EpsMat::from_scalar(const Mat& m) {
    if (!m.is_square()) throw shape_mismatch("EpsMat::from_scalar: non-square input");
    EpsMat e(m.field(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) e.at(i, j) = RatFunc::constant(m.at(i, j));
    return e;
}

RatFunc& EpsMat::at(std::size_t i, std::size_t j) {
    if (i >= n_ || j >= n_) throw shape_mismatch("EpsMat index out of range");
    return data_[i * n_ + j];
}

const RatFunc& EpsMat::at(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) throw shape_mismatch("EpsMat index out of range");
    return data_[i * n_ + j];
}

EpsMat EpsMat::operator+(const EpsMat& o) const {
    if (n_ != o.n_) throw shape_mismatch("EpsMat sizes differ");
    EpsMat m = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] + o.data_[k];
    return m;
}

EpsMat EpsMat::operator*(const EpsMat& o) const {
    if (n_ != o.n_) throw shape_mismatch("EpsMat sizes differ");
    EpsMat m(field_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < n_; ++j)
                m.at(i, j) = m.at(i, j) + at(i, k) * o.at(k, j);
        }
    return m;
}

EpsMat EpsMat::scaled(const RatFunc& c) const {
    EpsMat m = *this;
    for (auto& x : m.data_) x = x * c;
    return m;
}

bool EpsMat::operator==(const EpsMat& o) const {
    if (n_ != o.n_) return false;
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (!(data_[k] == o.data_[k])) return false;
    return true;
}

namespace {

RatFunc minor_det(const EpsMat& m, std::vector<std::size_t> rows, std::vector<std::size_t> cols) {
    Field f = m.field();
    if (rows.size() == 1) return m.at(rows[0], cols[0]);
    RatFunc acc(f);
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const RatFunc& a = m.at(rows[0], cols[k]);
        if (a.is_zero()) continue;
        std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
        std::vector<std::size_t> sub_cols;
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != k) sub_cols.push_back(cols[j]);
        RatFunc term = a * minor_det(m, sub_rows, sub_cols);
        acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace

RatFunc EpsMat::det() const {
    std::vector<std::size_t> all(n_);
    for (std::size_t i = 0; i < n_; ++i) all[i] = i;
    if (n_ == 0) return RatFunc::constant(field_.one());
    return minor_det(*this, all, all);
}

EpsMat EpsMat::inverse() const {
    RatFunc d = det();
    if (d.is_zero())
        throw singular_curve_matrix("curve matrix is singular as a rational function matrix");
    EpsMat adj(field_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            std::vector<std::size_t> rows, cols;
            for (std::size_t k = 0; k < n_; ++k) {
                if (k != i) rows.push_back(k);
                if (k != j) cols.push_back(k);
            }
            RatFunc c = n_ == 1 ? RatFunc::constant(field_.one()) : minor_det(*this, rows, cols);
            if ((i + j) % 2 == 1) c = -c;
            adj.at(j, i) = c / d;  // adjugate transposes the cofactor grid
        }
    return adj;
}

Mat EpsMat::limit_at_zero() const {
    Mat m(field_, n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) m.at(i, j) = at(i, j).eval_at_zero();
    return m;
}

bool EpsMat::pole_free_at_zero() const {
    for (const auto& e : data_)
        if (e.has_pole_at_zero()) return false;
    return true;
}

Mat EpsMat::eval(const Scalar& c) const {
    Mat m(field_, n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) m.at(i, j) = at(i, j).eval(c);
    return m;
}

bool EpsMat::pole_free_at(const Scalar& c) const {
    for (const auto& e : data_)
        if (e.has_pole_at(c)) return false;
    return true;
}

std::string EpsMat::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < n_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < n_; ++j) os << (j ? ", " : "") << at(i, j).str();
    }
    os << "]";
    return os.str();
}

}  // namespace nullcone
