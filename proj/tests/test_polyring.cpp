#include <doctest.h>

#include <algorithm>
#include <random>

#include "nilcent/polyring.hpp"

using namespace nilcent;

namespace {

std::string xyz(Var v) { return std::string(1, static_cast<char>('x' + v)); }

Poly random_poly(Field f, std::mt19937_64& rng, Var nvars, unsigned maxdeg, int terms) {
    std::uniform_int_distribution<std::int64_t> coef(-3, 3);
    std::uniform_int_distribution<std::uint32_t> e(0, maxdeg);
    Poly p(f);
    for (int t = 0; t < terms; ++t) {
        std::vector<std::uint32_t> exps(nvars);
        for (auto& x : exps) x = e(rng) / 2;
        p.add_term(Monomial::from_exponents(exps), Scalar(f, coef(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("monomial order is graded lex with variable 0 first") {
    Monomial x = Monomial::var(0), y = Monomial::var(1);
    CHECK(y < x);
    CHECK(x < y * y);
    CHECK(y * y < x * y);
    CHECK(x * y < x * x);
    CHECK_FALSE(x < x);
    CHECK((x * y).degree() == 2);
    CHECK((x * x * y).exponent(0) == 2);
}

TEST_CASE("canonical text") {
    Field q = Field::rationals();
    Poly x = Poly::variable(q, 0), y = Poly::variable(q, 1);
    CHECK((x * x * Scalar(q, 2) - y).to_string(xyz) == "2*x^2 - y");
    CHECK((y - x).to_string(xyz) == "-x + y");
    CHECK(Poly(q).to_string(xyz) == "0");
    CHECK((Poly::constant(q, 3) + x * Scalar(q, 1, 2)).to_string(xyz) == "1/2*x + 3");
    Field f = Field::prime(5);
    CHECK((Poly::variable(f, 0) * Scalar(f, -1)).to_string(xyz) == "4*x");
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(3);
    for (Field f : {Field::rationals(), Field::prime(3)}) {
        for (int k = 0; k < 40; ++k) {
            Poly a = random_poly(f, rng, 3, 4, 4), b = random_poly(f, rng, 3, 4, 4), c = random_poly(f, rng, 3, 4, 3);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            CHECK((a - a).is_zero());
            CHECK(a.pow(3) == a * a * a);
            Vec pt{Scalar(f, 2), Scalar(f, -1), Scalar(f, 3)};
            CHECK(evaluate(a * b, pt) == evaluate(a, pt) * evaluate(b, pt));
            CHECK(evaluate(a + b, pt) == evaluate(a, pt) + evaluate(b, pt));
        }
    }
}

TEST_CASE("differential is the t-linear coefficient of f(point + t e_k)") {
    std::mt19937_64 rng(4);
    Field q = Field::rationals();
    for (int k = 0; k < 20; ++k) {
        Poly f = random_poly(q, rng, 3, 6, 6);
        Vec pt{Scalar(q, 1, 2), Scalar(q, -2), Scalar(q, 3)};
        Vec d = differential(f, pt);
        for (Var v = 0; v < 3; ++v) {
            // t is variable 0 of the one-variable ring
            std::vector<Poly> images;
            for (Var w = 0; w < 3; ++w) {
                Poly img = Poly::constant(q, pt[w]);
                if (w == v) img += Poly::variable(q, 0);
                images.push_back(img);
            }
            Poly line = substitute(f, images);
            CHECK(line.coefficient(Monomial::var(0)) == d[v]);
        }
        for (Var v = 0; v < 3; ++v) CHECK(evaluate(partial(f, v), pt) == d[v]);
    }
}

TEST_CASE("derivations satisfy Leibniz") {
    std::mt19937_64 rng(8);
    Field f = Field::prime(7);
    std::vector<Poly> images;
    for (int v = 0; v < 3; ++v) images.push_back(random_poly(f, rng, 3, 2, 3));
    for (int k = 0; k < 20; ++k) {
        Poly a = random_poly(f, rng, 3, 4, 3), b = random_poly(f, rng, 3, 4, 3);
        CHECK(derivation(a * b, images) == derivation(a, images) * b + a * derivation(b, images));
    }
}

TEST_CASE("substitution is a ring homomorphism") {
    std::mt19937_64 rng(12);
    Field q = Field::rationals();
    std::vector<Poly> lin;
    for (int v = 0; v < 3; ++v) lin.push_back(random_poly(q, rng, 3, 2, 2).homogeneous_part(1));
    for (int k = 0; k < 20; ++k) {
        Poly a = random_poly(q, rng, 3, 4, 3), b = random_poly(q, rng, 3, 4, 3);
        CHECK(substitute(a * b, lin) == substitute(a, lin) * substitute(b, lin));
        CHECK(substitute_linear(a, lin) == substitute(a, lin));
    }
    CHECK_THROWS(substitute(Poly::variable(q, 5), lin));
}

TEST_CASE("monomial enumeration") {
    auto binom = [](std::size_t n, std::size_t k) {
        std::size_t r = 1;
        for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    };
    for (std::size_t n = 1; n <= 5; ++n)
        for (std::uint32_t k = 0; k <= 4; ++k) {
            auto ms = monomials_of_degree(n, k);
            CHECK(ms.size() == binom(n + k - 1, k));
            CHECK(std::is_sorted(ms.begin(), ms.end()));
            CHECK(std::adjacent_find(ms.begin(), ms.end()) == ms.end());
        }
}

TEST_CASE("jacobian rank") {
    Field q = Field::rationals();
    Poly x = Poly::variable(q, 0), y = Poly::variable(q, 1), z = Poly::variable(q, 2);
    std::vector<Poly> fs{x + y + z, x * y + y * z + z * x, x * y * z};
    Vec generic{Scalar(q, 1), Scalar(q, 2), Scalar(q, 3)};
    Vec repeated{Scalar(q, 1), Scalar(q, 1), Scalar(q, 3)};
    CHECK(jacobian_rank(fs, generic) == 3);
    CHECK(jacobian_rank(fs, repeated) == 2);
    CHECK(jacobian_rank(fs, generic, {0, 1}) == 2);
    CHECK(jacobian_rank(fs, repeated, {}, Exec::serial) == 2);
}
