#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilcent/centralizer.hpp"
#include "nilcent/polyring.hpp"

namespace nilcent {

struct FieldTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Points of g_e^* are vectors of coordinates on the dual basis (xi_i^{j,s})^*.
using DualPoint = Vec;

// coad(x, gamma)(y) = gamma([y, x]).
DualPoint coad(const Centralizer& g, const Vec& x, const DualPoint& gamma);
// The same action from the closed form on dual basis vectors:
// ad^*(xi_i^{j,s})(xi_k^{l,r})^* = delta_{ik}(xi_j^{l,r-s})^* - delta_{jl}(xi_k^{i,r-s})^*.
DualPoint coad_dual_formula(const Centralizer& g, std::size_t a, const DualPoint& gamma);

// a_1..a_n: greedy smallest positive integers, pairwise distinct mod p; for
// sp/so also a_{i'} = -a_i on paired blocks and l_i a_i pairwise distinct.
// Throws FieldTooSmall if F_p has no admissible choice.
std::vector<Scalar> alpha_coefficients(const Partition& lambda, Case c, Field f);

enum class PointKind { alpha, beta, betabar };

// alpha = sum a_i (xi_i^{i,lambda_i-1})^*, beta = sum_{i<n} (xi_i^{i+1,lambda_{i+1}-1})^*,
// betabar = beta + beta' (sp) or beta - beta' (so).
DualPoint special_point(const Setting& s, PointKind kind);
DualPoint beta_prime(const Setting& s);
// alpha and betabar rebuilt from their zeta^*/eta^* expansions.
DualPoint alpha_from_expansion(const Setting& s);
DualPoint betabar_from_expansion(const Setting& s);
// Dual spanning vector (zeta_i^{j,s})^* or (eta_i^{j,s})^*; zero when the label
// is out of range.
DualPoint zeta_dual(const Form& form, int i, int j, int s, Field f);
DualPoint eta_dual(const Form& form, int i, int j, int s, Field f);

// gamma vanishes on the complement of the setting's module (eta's for sp,
// zeta's for so); always true for gl.
bool in_module_dual(const Setting& s, const DualPoint& gamma);
// Values gamma(m) on the module basis: the coordinates used by restricted
// polynomials.
Vec module_values(const Setting& s, const DualPoint& gamma);

// (xi_i^{j,s})^* -> t^{i-j+1} (xi_i^{j,s})^*
DualPoint rho_action(const Centralizer& g, const Scalar& t, const DualPoint& gamma);

// ad^*(xi_i^{j,s}) alpha = a_i (xi_j^{i,lambda_i-1-s})^* - a_j (xi_j^{i,lambda_j-1-s})^*
DualPoint coad_alpha_closed_form(const Centralizer& g, std::size_t a, const std::vector<Scalar>& coeffs);
// ad^*(zeta_i^{j,s}) alpha = a_i (D_j^{i,lambda_j-1-s})^* - a_j (D_j^{i,lambda_i-1-s})^*
// with D = zeta (sp) or eta (so). No l_i factors: with (D)^* built from the same
// combination as D, weighting by l_i overcounts paired blocks by 2.
DualPoint coad_alpha_zeta_closed_form(const Setting& s, int i, int j, int sh, const std::vector<Scalar>& coeffs);

struct StabiliserReport {
    std::vector<Vec> kernel;  // in acting-basis coordinates
    std::size_t dimension = 0;
};
StabiliserReport stabiliser(const Setting& s, const DualPoint& gamma);

struct IndexReport {
    std::size_t stabiliser_dim = 0;
    std::size_t closed_form = 0;
    bool pass = false;
};
// N (gl), N/2 (sp), (N - #odd)/2 (so on p_e^*).
std::size_t index_closed_form(const Partition& lambda, Case c);
IndexReport index_report(const Setting& s);

struct DominanceReport {
    bool pass = true;
    std::size_t targets = 0;
    std::vector<std::string> missing;
};
// span{coad(x, alpha)} contains every off-diagonal dual direction of the module.
DominanceReport dominance_span_check(const Setting& s);

struct ProbeRow {
    std::string point;
    std::size_t rank = 0;
    std::size_t expected = 0;
    bool pass = false;
};
// Rank of the generator differentials at beta and alpha+beta (gl) or betabar
// and alpha+betabar (sp/so).
std::vector<ProbeRow> jacobian_probe(const Setting& s, Exec exec = Exec::parallel);
std::vector<ProbeRow> jacobian_probe(const Setting& s, const std::vector<Poly>& generators, Exec exec = Exec::parallel);

// d_beta x_r on U = span{(xi_i^{1,s})^*} is (-1)^{d-1} at the coordinate of
// xi_d^{1, lambda_1 - lambda_d + t_r - 1} and zero elsewhere on U, for every r.
bool beta_differential_check(const Centralizer& g, const std::vector<Poly>& xs, Field f);

}  // namespace nilcent
