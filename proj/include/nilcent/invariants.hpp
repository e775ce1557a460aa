#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "nilcent/centralizer.hpp"
#include "nilcent/polyring.hpp"

namespace nilcent {

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// sgn(w) prod_k xi_{i_k}^{i_{w k}, s_k} with s_k = lambda_{i_{wk}} - lambda_{i_k} + mu_{i_k} - 1,
// where i_1 < ... < i_d is the support of mu and w permutes 0..d-1.
// Zero if any factor is out of range.
Poly theta(const Centralizer& g, const std::vector<int>& w, const std::vector<int>& mu, Field f);

// x_r = sum of theta over S_{d_r} x compositions. The parallel path splits the
// work over (mu, w(0)); both paths give the same canonical polynomial.
Poly elementary_invariant(const Centralizer& g, int r, Field f, Exec exec = Exec::parallel);
std::vector<Poly> elementary_invariants(const Centralizer& g, Field f, Exec exec = Exec::parallel);

// sigma extended to an algebra automorphism of S(g_e).
Poly sigma_poly(const Form& form, const Poly& x);

enum class Target { k, p };
// Restriction of a polynomial on g_e^* to k_e^* (zeta variables) or p_e^*
// (eta variables): xi_i^{j,lambda_j-1-s} -> 1/2 zeta_i^{j,s} (resp. eta),
// then rewritten in the retained elements.
Poly restrict_to(const Form& form, const Poly& x, Target t, Field f);

// Generators of the invariant algebra of the setting's module: x_r (gl),
// x_r|k for r even (sp), x_r|p for r + d_r even (so). Parallel to
// generator_indices.
std::vector<Poly> module_generators(const Setting& s, Exec exec = Exec::parallel);

// The derivation of S(module) extending v -> [x, v], for x in the acting algebra
// (g_e coordinates).
Poly ad_derivation(const Setting& s, const Vec& x, const Poly& f);
// Images of the module variables under v -> [x, v].
std::vector<Poly> ad_images(const Setting& s, const Vec& x);

struct InvarianceResult {
    bool pass = true;
    std::size_t checked = 0;
    std::optional<std::size_t> xi;  // first failing basis element
    std::optional<int> r;
};
// ad(xi) x_r = 0 for all basis xi of g_e and all r; parallel over (xi, r).
InvarianceResult verify_ad_invariance(const Centralizer& g, Field f, Exec exec = Exec::parallel);
InvarianceResult verify_ad_invariance(const Centralizer& g, const std::vector<Poly>& xs, Field f,
                                      Exec exec = Exec::parallel);

// Ad(g_t) x = x as a polynomial identity in t, for g_t = 1 + t xi_a. xi_a must be
// nilpotent (i != j, or i = j with s > 0). The variable t is numbered g.dim().
bool group_invariant(const Centralizer& g, const Poly& x, std::size_t a);
// Images of the g_e variables under v -> Ad(1 + t xi_a) v.
std::vector<Poly> group_images(const Centralizer& g, std::size_t a, Field f);

struct SigmaParityResult {
    bool pass = true;
    std::vector<int> failing;
};
SigmaParityResult verify_sigma_parity(const Form& form, const std::vector<Poly>& xs);

struct GradedRow {
    unsigned degree = 0;
    std::size_t invariant = 0;  // dim of the derivation kernel
    std::size_t generated = 0;  // dim of the p-th powers plus generators
};
// Per-degree comparison for degrees 0..dmax. Throws CapExceeded if a degree
// needs a kernel matrix with more than max_entries entries.
std::vector<GradedRow> graded_invariant_dims(const Setting& s, unsigned dmax,
                                             std::size_t max_entries = 20'000'000,
                                             Exec exec = Exec::parallel);

}  // namespace nilcent
