#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nilcent/combinatorics.hpp"
#include "nilcent/linalg.hpp"

namespace nilcent {

struct NotInAlgebra : std::logic_error {
    using std::logic_error::logic_error;
};

// xi_i^{j,s}: sends e^t w_i to e^{s+t} w_j. s is the raw shift, so the symbol
// is nonzero iff lambda_j - min(lambda_i, lambda_j) <= s < lambda_j.
struct BasisIndex {
    int i = 0, j = 0, s = 0;
    auto operator<=>(const BasisIndex&) const = default;
    std::string to_string() const;
};

// Sparse integer combination of basis positions.
using Term = std::pair<std::size_t, std::int64_t>;
using Combo = std::vector<Term>;

Vec to_vec(const Combo& c, Field f, std::size_t dim);

// The centraliser g_e of a nilpotent e of Jordan type lambda.
class Centralizer {
public:
    explicit Centralizer(Partition lambda);

    const Partition& partition() const { return lambda_; }
    const std::vector<BasisIndex>& basis() const { return basis_; }
    std::size_t dim() const { return basis_.size(); }

    bool in_range(int i, int j, int s) const;
    std::optional<std::size_t> find(int i, int j, int s) const;
    std::size_t position(const BasisIndex& b) const;

    // Row/column of e^t w_i in the V-basis.
    std::size_t v_index(int i, int t) const { return offset_[static_cast<std::size_t>(i - 1)] + static_cast<std::size_t>(t); }

    Matrix e_matrix(Field f) const;
    Matrix as_matrix(std::size_t a, Field f) const;
    Matrix as_matrix(const Vec& x) const;
    // Coordinates of a matrix in g_e; NotInAlgebra if it does not centralise e.
    Vec coordinates(const Matrix& m) const;

    // Associative product of basis elements: xi_i^{j,s} xi_k^{l,t} = delta_{li} xi_k^{j,s+t}.
    std::optional<std::size_t> product(std::size_t a, std::size_t b) const;
    // Structure constants, from the closed form.
    const Combo& bracket(std::size_t a, std::size_t b) const { return table_[a * dim() + b]; }
    Vec bracket(const Vec& x, const Vec& y) const;

    struct Split {
        std::vector<std::size_t> lower, diagonal, upper;  // i < j, i = j, i > j
    };
    Split triangular_split() const;

    std::string name(std::size_t a) const;

private:
    Partition lambda_;
    std::vector<BasisIndex> basis_;
    std::vector<std::size_t> offset_;
    std::vector<std::vector<std::vector<std::int64_t>>> lookup_;  // [i][j][s] -> position or -1
    std::vector<Combo> table_;
};

// Bilinear form data for sp (eps = -1) and so (eps = +1): the involution i -> i',
// Gram matrix, the involution sigma of g_e and the zeta/eta spanning sets.
class Form {
public:
    Form(const Centralizer& g, Case c);

    Case kind() const { return case_; }
    int eps() const { return epsilon(case_); }
    const Involution& involution() const { return inv_; }
    int prime(int i) const { return inv_(i); }

    int varpi(int i, int j) const { return i <= j ? 1 : -1; }
    // eps_{i,j,s} with 0 <= s < min(lambda_i, lambda_j)
    int sign(int i, int j, int s) const;
    int l(int i) const { return inv_.fixed(i) ? 1 : 2; }

    // J(r, c) = (v_r, v_c) over the V-basis.
    Matrix gram(Field f) const;
    // sigma(xi_i^{j, lambda_j-1-s}) = eps_{i,j,s} xi_{j'}^{i', lambda_i-1-s}
    std::pair<int, std::size_t> sigma(std::size_t a) const;
    Vec sigma(const Vec& x) const;
    // -J^{-1} X^T J
    Matrix sigma_matrix(const Matrix& x) const;

    struct Element {
        BasisIndex label;  // (i, j, s) with the unshifted s of the zeta/eta labels
        Combo vec;         // in g_e coordinates; the same combination gives the dual vector
    };
    // One of zeta_{label} / eta_{label} expressed via a retained element.
    struct Relation {
        int sign = 0;  // 0: the element is zero
        std::size_t target = 0;
    };
    const std::vector<Element>& zeta() const { return zeta_; }
    const std::vector<Element>& eta() const { return eta_; }
    // Label of the basis position a: xi_i^{j,t} is labelled (i, j, lambda_j-1-t).
    BasisIndex label(std::size_t a) const;
    Relation zeta_of(std::size_t a) const { return zeta_rel_[a]; }
    Relation eta_of(std::size_t a) const { return eta_rel_[a]; }

    const Centralizer& algebra() const { return *g_; }

private:
    const Centralizer* g_;
    Case case_;
    Involution inv_;
    std::vector<Element> zeta_, eta_;
    std::vector<Relation> zeta_rel_, eta_rel_;
};

// Acting algebra and module per case: g_e on g_e (gl), k_e on k_e (sp),
// k_e on p_e (so). Vectors are in g_e coordinates throughout.
class Setting {
public:
    Setting(const Partition& lambda, Case c, Field f);
    Setting(const Setting&) = delete;
    Setting& operator=(const Setting&) = delete;
    Setting(Setting&&) = default;

    Case kind() const { return case_; }
    Field field() const { return field_; }
    const Centralizer& g() const { return *g_; }
    const Form& form() const;
    bool has_form() const { return form_ != nullptr; }

    const std::vector<Vec>& acting() const { return acting_; }
    const std::vector<Vec>& module() const { return module_; }
    const std::vector<std::string>& module_names() const { return module_names_; }
    const std::vector<std::string>& acting_names() const { return acting_names_; }

    // Coordinates of a g_e vector in the module basis; NotInAlgebra if outside.
    Vec module_coordinates(const Vec& x) const;
    Vec acting_coordinates(const Vec& x) const;

private:
    Vec coords(const Vec& x, const std::vector<Vec>& basis, const std::vector<std::size_t>& lead) const;

    Case case_;
    Field field_;
    std::unique_ptr<Centralizer> g_;
    std::unique_ptr<Form> form_;
    std::vector<Vec> acting_, module_;
    std::vector<std::size_t> acting_lead_, module_lead_;
    std::vector<std::string> acting_names_, module_names_;
};

}  // namespace nilcent
