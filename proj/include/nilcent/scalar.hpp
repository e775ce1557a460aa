#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace nilcent {

struct FieldMismatch : std::logic_error {
    using std::logic_error::logic_error;
};

struct DivisionByZero : std::domain_error {
    using std::domain_error::domain_error;
};

// Coefficient field: the rationals (characteristic 0) or a prime field F_p.
class Field {
public:
    static Field rationals() { return Field(0); }
    static Field prime(std::uint64_t p);

    bool is_rational() const { return p_ == 0; }
    std::uint64_t characteristic() const { return p_; }

    // "q" or "fp:<p>"
    std::string name() const;
    static Field parse(const std::string& text);

    friend bool operator==(Field a, Field b) { return a.p_ == b.p_; }
    friend bool operator!=(Field a, Field b) { return a.p_ != b.p_; }

private:
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

// An exact element of a Field. Mixing fields throws FieldMismatch.
class Scalar {
public:
    Scalar() : Scalar(Field::rationals(), 0) {}
    Scalar(Field f, std::int64_t value);
    // num/den, den != 0
    Scalar(Field f, std::int64_t num, std::int64_t den);
    static Scalar from_mpq(Field f, const mpq_class& q);

    Field field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    Scalar inverse() const;
    Scalar pow(std::int64_t e) const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Residue in [0, p) for prime fields; throws for rationals.
    std::uint64_t residue() const;
    // Exact rational value; throws for prime fields.
    const mpq_class& rational() const;

    // Canonical text: "a", "-a", "a/b" over Q; residue in [0,p) over F_p.
    std::string to_string() const;

private:
    void check(const Scalar& o) const;

    Field field_;
    std::variant<std::uint64_t, mpq_class> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);

}  // namespace nilcent
