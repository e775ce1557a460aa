#include "nilcent/scalar.hpp"

#include <ostream>

namespace nilcent {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
    // residues are multiplied in 128-bit, but keep p small enough for 64-bit sums
    if (p >= (std::uint64_t{1} << 62)) throw std::invalid_argument("prime too large");
    return Field(p);
}

std::string Field::name() const {
    return p_ == 0 ? std::string("q") : "fp:" + std::to_string(p_);
}

Field Field::parse(const std::string& text) {
    if (text == "q" || text == "Q") return rationals();
    if (text.rfind("fp:", 0) == 0) {
        std::size_t used = 0;
        std::uint64_t p = 0;
        try {
            p = std::stoull(text.substr(3), &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad field: " + text);
        }
        if (used != text.size() - 3) throw std::invalid_argument("bad field: " + text);
        return prime(p);
    }
    throw std::invalid_argument("bad field: " + text + " (expected q or fp:<prime>)");
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw DivisionByZero("inverse of zero mod p");
    // Fermat
    std::uint64_t result = 1, base = a % p, e = p - 2;
    while (e) {
        if (e & 1) result = static_cast<std::uint64_t>((unsigned __int128)result * base % p);
        base = static_cast<std::uint64_t>((unsigned __int128)base * base % p);
        e >>= 1;
    }
    return result;
}

namespace {

std::uint64_t reduce(std::int64_t v, std::uint64_t p) {
    auto m = static_cast<std::int64_t>(p);
    std::int64_t r = v % m;
    if (r < 0) r += m;
    return static_cast<std::uint64_t>(r);
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
    return mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p));
}

}  // namespace

Scalar::Scalar(Field f, std::int64_t value) : field_(f) {
    if (f.is_rational())
        value_ = mpq_class(static_cast<long>(value));
    else
        value_ = reduce(value, f.characteristic());
}

Scalar::Scalar(Field f, std::int64_t num, std::int64_t den) : field_(f) {
    if (den == 0) throw DivisionByZero("zero denominator");
    if (f.is_rational()) {
        mpq_class q(static_cast<long>(num), static_cast<long>(den));
        q.canonicalize();
        value_ = q;
    } else {
        std::uint64_t p = f.characteristic();
        std::uint64_t d = reduce(den, p);
        if (d == 0) throw DivisionByZero("denominator divisible by p");
        value_ = static_cast<std::uint64_t>((unsigned __int128)reduce(num, p) * mod_inverse(d, p) % p);
    }
}

Scalar Scalar::from_mpq(Field f, const mpq_class& q) {
    Scalar s(f, 0);
    if (f.is_rational()) {
        s.value_ = q;
    } else {
        std::uint64_t p = f.characteristic();
        std::uint64_t d = reduce_mpz(q.get_den(), p);
        if (d == 0) throw DivisionByZero("denominator divisible by p");
        s.value_ = static_cast<std::uint64_t>(
            (unsigned __int128)reduce_mpz(q.get_num(), p) * mod_inverse(d, p) % p);
    }
    return s;
}

void Scalar::check(const Scalar& o) const {
    if (field_ != o.field_)
        throw FieldMismatch("scalar field mismatch: " + field_.name() + " vs " + o.field_.name());
}

bool Scalar::is_zero() const {
    if (field_.is_rational()) return sgn(std::get<mpq_class>(value_)) == 0;
    return std::get<std::uint64_t>(value_) == 0;
}

bool Scalar::is_one() const {
    if (field_.is_rational()) return std::get<mpq_class>(value_) == 1;
    return std::get<std::uint64_t>(value_) == 1;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (field_.is_rational()) {
        std::get<mpq_class>(r.value_) = -std::get<mpq_class>(value_);
    } else {
        std::uint64_t v = std::get<std::uint64_t>(value_);
        std::get<std::uint64_t>(r.value_) = v == 0 ? 0 : field_.characteristic() - v;
    }
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check(o);
    if (field_.is_rational()) {
        std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
    } else {
        auto& v = std::get<std::uint64_t>(value_);
        v += std::get<std::uint64_t>(o.value_);
        if (v >= field_.characteristic()) v -= field_.characteristic();
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    check(o);
    if (field_.is_rational()) {
        std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
    } else {
        auto& v = std::get<std::uint64_t>(value_);
        v = static_cast<std::uint64_t>((unsigned __int128)v * std::get<std::uint64_t>(o.value_) %
                                       field_.characteristic());
    }
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    Scalar r = *this;
    if (field_.is_rational())
        std::get<mpq_class>(r.value_) = 1 / std::get<mpq_class>(value_);
    else
        std::get<std::uint64_t>(r.value_) =
            mod_inverse(std::get<std::uint64_t>(value_), field_.characteristic());
    return r;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check(o);
    return *this *= o.inverse();
}

Scalar Scalar::pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar result(field_, 1), base = *this;
    while (e) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.field_ != b.field_) return false;
    return a.value_ == b.value_;
}

std::uint64_t Scalar::residue() const {
    if (field_.is_rational()) throw FieldMismatch("residue() on a rational scalar");
    return std::get<std::uint64_t>(value_);
}

const mpq_class& Scalar::rational() const {
    if (!field_.is_rational()) throw FieldMismatch("rational() on a prime-field scalar");
    return std::get<mpq_class>(value_);
}

std::string Scalar::to_string() const {
    if (field_.is_rational()) return std::get<mpq_class>(value_).get_str();
    return std::to_string(std::get<std::uint64_t>(value_));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace nilcent
