#include "nullcone/scalar.hpp"

#include <ostream>

namespace nullcone {

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    if (a == 0) throw error("division by zero in GF(p)");
    // p prime, so a^(p-2) = a^-1
    return powmod(a, p - 2, p);
}

}  // namespace

Field Field::gfp(std::uint64_t p) {
    if (!is_prime_u64(p)) throw error("GF(p) modulus must be prime, got " + std::to_string(p));
    if (p >= (1ull << 31)) throw error("GF(p) modulus too large");
    return Field(p);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long n) const {
    Scalar s;
    s.p_ = p_;
    if (p_ == 0) {
        s.q_ = mpq_class(n);
    } else {
        long r = n % static_cast<long>(p_);
        if (r < 0) r += static_cast<long>(p_);
        s.r_ = static_cast<std::uint64_t>(r);
    }
    return s;
}

Scalar Field::from_fraction(long num, long den) const {
    if (den == 0) throw error("fraction with zero denominator");
    if (p_ == 0) {
        Scalar s;
        s.q_ = mpq_class(num, den);
        s.q_.canonicalize();
        return s;
    }
    return from_int(num) / from_int(den);
}

Scalar Field::parse(const std::string& text) const {
    std::size_t slash = text.find('/');
    try {
        if (p_ == 0) {
            Scalar s;
            s.q_ = mpq_class(text, 10);
            s.q_.canonicalize();
            return s;
        }
        mpz_class num(slash == std::string::npos ? text : text.substr(0, slash), 10);
        Scalar v = from_int(0);
        mpz_class r = num % static_cast<long>(p_);
        if (r < 0) r += static_cast<long>(p_);
        v.r_ = r.get_ui();
        if (slash != std::string::npos) {
            mpz_class den(text.substr(slash + 1), 10);
            mpz_class rd = den % static_cast<long>(p_);
            if (rd < 0) rd += static_cast<long>(p_);
            Scalar d = from_int(0);
            d.r_ = rd.get_ui();
            v = v / d;
        }
        return v;
    } catch (const std::invalid_argument&) {
        throw parse_error("invalid scalar literal '" + text + "'", 0);
    }
}

Scalar Field::from_rational(const mpq_class& q) const {
    if (p_ == 0) {
        Scalar s;
        s.q_ = q;
        s.q_.canonicalize();
        return s;
    }
    mpz_class num = q.get_num() % static_cast<long>(p_);
    if (num < 0) num += static_cast<long>(p_);
    mpz_class den = q.get_den() % static_cast<long>(p_);
    Scalar sn = from_int(0), sd = from_int(0);
    sn.r_ = num.get_ui();
    sd.r_ = den.get_ui();
    return sn / sd;
}

std::string Field::describe() const {
    return p_ == 0 ? "Q" : "GF(" + std::to_string(p_) + ")";
}

void Scalar::check_same_field(const Scalar& o) const {
    if (p_ != o.p_)
        throw field_mismatch("scalars from different fields: " + field().describe() + " vs " +
                             o.field().describe());
}

bool Scalar::is_zero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }
bool Scalar::is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1 % p_; }

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (p_ == 0)
        s.q_ = -q_;
    else
        s.r_ = r_ == 0 ? 0 : p_ - r_;
    return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar s = *this;
    if (p_ == 0) {
        s.q_ = q_ + o.q_;
    } else {
        s.r_ = r_ + o.r_;
        if (s.r_ >= p_) s.r_ -= p_;
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar s = *this;
    if (p_ == 0)
        s.q_ = q_ * o.q_;
    else
        s.r_ = mulmod(r_, o.r_, p_);
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same_field(o);
    if (o.is_zero()) throw error("division by zero");
    Scalar s = *this;
    if (p_ == 0)
        s.q_ = q_ / o.q_;
    else
        s.r_ = mulmod(r_, invmod(o.r_, p_), p_);
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw error("inverse of zero");
    return field().one() / *this;
}

bool Scalar::operator==(const Scalar& o) const {
    check_same_field(o);
    return p_ == 0 ? q_ == o.q_ : r_ == o.r_;
}

bool Scalar::operator<(const Scalar& o) const {
    check_same_field(o);
    return p_ == 0 ? q_ < o.q_ : r_ < o.r_;
}

bool Scalar::is_integral() const { return p_ != 0 || q_.get_den() == 1; }

std::string Scalar::str() const {
    return p_ == 0 ? q_.get_str() : std::to_string(r_);
}

const mpq_class& Scalar::rational() const {
    if (p_ != 0) throw error("rational() on a GF(p) scalar");
    return q_;
}

std::uint64_t Scalar::residue() const {
    if (p_ == 0) throw error("residue() on a rational scalar");
    return r_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

bool sqrt_mod_p(std::uint64_t a, std::uint64_t p, std::uint64_t& root) {
    a %= p;
    if (a == 0) {
        root = 0;
        return true;
    }
    if (p == 2) {
        root = a;
        return true;
    }
    if (powmod(a, (p - 1) / 2, p) != 1) return false;
    if (p % 4 == 3) {
        root = powmod(a, (p + 1) / 4, p);
        return true;
    }
    // Tonelli-Shanks
    std::uint64_t q = p - 1, s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    std::uint64_t z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
    std::uint64_t m = s;
    std::uint64_t c = powmod(z, q, p);
    std::uint64_t t = powmod(a, q, p);
    std::uint64_t r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        std::uint64_t i = 0, tt = t;
        while (tt != 1) {
            tt = mulmod(tt, tt, p);
            ++i;
        }
        std::uint64_t b = powmod(c, 1ull << (m - i - 1), p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    root = r;
    return true;
}

bool sqrt_rational(const mpq_class& a, mpq_class& root) {
    if (a < 0) return false;
    mpz_class num_root, den_root;
    if (!mpz_perfect_square_p(a.get_num().get_mpz_t())) return false;
    if (!mpz_perfect_square_p(a.get_den().get_mpz_t())) return false;
    mpz_sqrt(num_root.get_mpz_t(), a.get_num().get_mpz_t());
    mpz_sqrt(den_root.get_mpz_t(), a.get_den().get_mpz_t());
    root = mpq_class(num_root) / mpq_class(den_root);
    return true;
}

}  // namespace nullcone
