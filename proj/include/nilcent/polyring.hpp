#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nilcent/linalg.hpp"
#include "nilcent/scalar.hpp"

namespace nilcent {

using Var = std::uint32_t;

// Product of variables with positive exponents, sorted by variable.
class Monomial {
public:
    Monomial() = default;
    static Monomial var(Var v, std::uint32_t e = 1);
    static Monomial from_exponents(const std::vector<std::uint32_t>& exps);

    const std::vector<std::pair<Var, std::uint32_t>>& factors() const { return f_; }
    std::uint32_t degree() const { return deg_; }
    std::uint32_t exponent(Var v) const;
    bool is_one() const { return f_.empty(); }

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.f_ == b.f_; }
    // Graded lex with variable 0 the most significant.
    friend bool operator<(const Monomial& a, const Monomial& b);

private:
    std::vector<std::pair<Var, std::uint32_t>> f_;
    std::uint32_t deg_ = 0;
};

// Exact sparse polynomial. Terms are kept in increasing graded-lex order with
// no zero coefficients.
class Poly {
public:
    explicit Poly(Field f = Field::rationals()) : field_(f) {}
    static Poly constant(Field f, const Scalar& c);
    static Poly constant(Field f, std::int64_t c) { return constant(f, Scalar(f, c)); }
    static Poly variable(Field f, Var v);
    static Poly term(const Scalar& c, const Monomial& m);
    // sum_k coef[k] * var k
    static Poly linear(const Vec& coef);

    Field field() const { return field_; }
    const std::map<Monomial, Scalar>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }
    int degree() const;  // -1 for zero
    bool is_homogeneous() const;
    Poly homogeneous_part(std::uint32_t k) const;
    Scalar coefficient(const Monomial& m) const;

    void add_term(const Monomial& m, const Scalar& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Scalar& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
    friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.t_ == b.t_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    Poly pow(unsigned e) const;

    // Canonical text: terms in decreasing graded-lex order.
    std::string to_string(const std::function<std::string(Var)>& name) const;

private:
    void check(const Poly& o) const;
    Field field_;
    std::map<Monomial, Scalar> t_;
};

// f evaluated at the point with coordinates point[v].
Scalar evaluate(const Poly& f, const Vec& point);

Poly partial(const Poly& f, Var v);

// Ring homomorphism extending v -> images[v]. A variable past the end of
// images is an error.
Poly substitute(const Poly& f, const std::vector<Poly>& images);
// As substitute, but every image must have degree <= 1.
Poly substitute_linear(const Poly& f, const std::vector<Poly>& images);

// Linear part of v -> f(point + v): the partial derivatives at point.
Vec differential(const Poly& f, const Vec& point);

// The derivation D with D(v) = images[v], applied to f.
Poly derivation(const Poly& f, const std::vector<Poly>& images);

// Rank of the differentials of fs at point, restricted to the coordinates in
// subspace (all coordinates if empty).
std::size_t jacobian_rank(const std::vector<Poly>& fs, const Vec& point,
                          const std::vector<Var>& subspace = {}, Exec exec = Exec::parallel);

// All monomials of degree k in nvars variables, increasing order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t k);

}  // namespace nilcent
