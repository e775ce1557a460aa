#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "nilcent/centralizer.hpp"
#include "nilcent/invariants.hpp"
#include "nilcent/polyring.hpp"

namespace nilcent {

struct NonIntegralExponent : std::logic_error {
    using std::logic_error::logic_error;
};
struct SaturationViolated : std::logic_error {
    using std::logic_error::logic_error;
};

// A word in the acting basis r_0, r_1, ... of the setting.
using Word = std::vector<Var>;

// Element of U(r) in PBW normal form. A PBW monomial r_0^{a_0} r_1^{a_1} ...
// is stored as the commutative Monomial with the same exponents, so the
// symbol of an element is read off its top-degree terms directly.
struct UElement {
    Poly pbw;
    unsigned cap = 0;

    int degree() const { return pbw.degree(); }
    friend bool operator==(const UElement& a, const UElement& b) { return a.pbw == b.pbw; }
};

// Factors of the word, in basis order.
Word word_of(const Monomial& m);

// The enveloping algebra of the setting's acting algebra (g_e, or k_e for
// sp/so) truncated at a degree cap. Products that would exceed the cap throw
// CapExceeded. Normal forms are memoised; the cache is mutex-guarded.
class Enveloping {
public:
    Enveloping(const Setting& s, unsigned cap);

    const Setting& setting() const { return *s_; }
    Field field() const { return s_->field(); }
    std::size_t dim() const { return s_->acting().size(); }
    unsigned cap() const { return cap_; }
    // [r_a, r_b] in acting coordinates.
    const Vec& bracket(std::size_t a, std::size_t b) const { return table_[a * dim() + b]; }
    std::string name(Var v) const { return s_->acting_names()[v]; }

    UElement zero() const;
    UElement one() const;
    UElement generator(Var v) const;
    UElement linear(const Vec& x) const;  // x in acting coordinates

    // Rewrites the leftmost descent xy -> yx + [x, y] until sorted.
    UElement normalize(const Word& w) const;
    // Same rewriting with the descent chosen at random at every step; no memo.
    UElement normalize(const Word& w, std::mt19937_64& rng) const;

    UElement multiply(const UElement& a, const UElement& b) const;
    UElement commutator(const UElement& a, const UElement& b) const;
    // ad r_x as a derivation: stays within the degree of the argument.
    UElement ad(Var x, const UElement& a) const;

    std::string to_string(const UElement& u) const;

private:
    UElement normalize_impl(const Word& w, std::mt19937_64* rng) const;
    void check_len(std::size_t len) const;

    const Setting* s_;
    unsigned cap_;
    std::vector<Vec> table_;
    mutable std::mutex mu_;
    mutable std::map<Word, Poly> memo_;
};

// x^{[p]}: the p-th matrix power of x, p the characteristic. x and the result
// are in acting coordinates. NotInAlgebra if the power leaves the algebra.
Vec p_power_restricted(const Setting& s, const Vec& x);

// r_v^p - image, with image = r_v^{[p]} for the genuine p-centre generator.
UElement p_centre_element(const Enveloping& u, Var v, const Vec& image);
UElement p_centre_generator(const Enveloping& u, Var v);

struct CentralityReport {
    bool pass = true;
    std::size_t checked = 0;
    std::optional<Var> failing;
};
// [u, r_y] = 0 in normal form for every basis r_y.
CentralityReport verify_central(const Enveloping& u, const UElement& z);

// Element of S(U(r)): multisets of PBW monomials with coefficients.
using SymKey = std::vector<Monomial>;  // sorted
struct SymUElement {
    Field field = Field::rationals();
    std::map<SymKey, Scalar> terms;
};
SymUElement sym_product(const SymUElement& a, const SymUElement& b);

// Sum over the set partitions of the factor positions of a PBW monomial; each
// block keeps the factor order of the monomial, so it is itself a PBW monomial.
SymUElement milner_mu(const UElement& u);

// pi: evaluate the monomial as a matrix product; gl: coordinates in g_e
// (SaturationViolated otherwise); sp/so: the sigma-fixed half (X + sigma X)/2.
// Result in acting coordinates. pi(1) is the identity matrix, projected.
Vec pi(const Enveloping& u, const Monomial& m);
Vec pi(const Enveloping& u, const UElement& x);

// beta = S(pi) o mu, valued in S(r) = polynomials in the acting variables.
Poly beta_map(const Enveloping& u, const UElement& x);

// ad x on S(r) for x in acting coordinates.
Poly ad_sym(const Enveloping& u, const Vec& x, const Poly& f);

struct EnvelopeCheck {
    bool pass = true;
    std::size_t checked = 0;
    std::string failure;  // first failing case, empty on pass
};
// All over the PBW monomials of degree <= u.cap() (1 <= degree for mu):
// the top-degree part of beta(m) is m;
EnvelopeCheck verify_gr_beta(const Enveloping& u);
// beta(ad x . m) = ad x . beta(m) for every basis x;
EnvelopeCheck verify_beta_equivariance(const Enveloping& u);
// pi(ad x . m) = [x, pi(m)] for every basis x;
EnvelopeCheck verify_pi_equivariance(const Enveloping& u);
// the component of mu(m) with deg m factors is the product of the mu(r_j);
EnvelopeCheck verify_mu_leading(const Enveloping& u);
// beta is injective on each filtration level (square, full-rank matrix);
EnvelopeCheck verify_beta_bijective(const Enveloping& u);
// gl only: beta(Ad g . m) = Ad g . beta(m) for g = 1 + t xi, xi a nilpotent
// basis element, t in {1, 2}.
EnvelopeCheck verify_beta_group(const Enveloping& u);
// Normal forms agree under `trials` random rewriting orders, words up to max_len.
EnvelopeCheck verify_confluence(const Enveloping& u, unsigned max_len, unsigned trials, std::uint64_t seed);

struct ZassenhausBound {
    std::size_t dim = 0;
    std::size_t index = 0;
    std::size_t exponent = 0;
    mpz_class bound;
};
// p^{(dim - ind)/2} for the acting algebra (gl and sp). The index is the
// stabiliser dimension at alpha computed over Q. so is rejected: the index
// available there is that of k_e on p_e^*, not ind(k_e).
ZassenhausBound zassenhaus_bound(const Partition& lambda, Case c, std::uint64_t p);

}  // namespace nilcent
