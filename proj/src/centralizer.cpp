#include "nilcent/centralizer.hpp"

#include <algorithm>

namespace nilcent {

std::string BasisIndex::to_string() const {
    return std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(s);
}

Vec to_vec(const Combo& c, Field f, std::size_t dim) {
    Vec v = zero_vec(f, dim);
    for (const auto& [pos, coef] : c) v[pos] += Scalar(f, coef);
    return v;
}

Centralizer::Centralizer(Partition lambda) : lambda_(std::move(lambda)) {
    const int n = static_cast<int>(lambda_.n());
    std::size_t off = 0;
    for (int i = 1; i <= n; ++i) {
        offset_.push_back(off);
        off += static_cast<std::size_t>(lambda_[i]);
    }
    lookup_.assign(static_cast<std::size_t>(n), std::vector<std::vector<std::int64_t>>(static_cast<std::size_t>(n)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            auto& slot = lookup_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
            slot.assign(static_cast<std::size_t>(lambda_[j]), -1);
            for (int s = lambda_[j] - std::min(lambda_[i], lambda_[j]); s < lambda_[j]; ++s) {
                slot[static_cast<std::size_t>(s)] = static_cast<std::int64_t>(basis_.size());
                basis_.push_back({i, j, s});
            }
        }

    const std::size_t d = dim();
    table_.resize(d * d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            Combo c;
            auto ab = product(a, b), ba = product(b, a);
            if (ab && ba && *ab == *ba) {
                // cancels
            } else {
                if (ab) c.push_back({*ab, 1});
                if (ba) c.push_back({*ba, -1});
            }
            table_[a * d + b] = std::move(c);
        }
}

bool Centralizer::in_range(int i, int j, int s) const { return find(i, j, s).has_value(); }

std::optional<std::size_t> Centralizer::find(int i, int j, int s) const {
    const int n = static_cast<int>(lambda_.n());
    if (i < 1 || i > n || j < 1 || j > n || s < 0 || s >= lambda_[j]) return std::nullopt;
    auto pos = lookup_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(s)];
    if (pos < 0) return std::nullopt;
    return static_cast<std::size_t>(pos);
}

std::size_t Centralizer::position(const BasisIndex& b) const {
    auto p = find(b.i, b.j, b.s);
    if (!p) throw std::out_of_range("basis index out of range: " + b.to_string());
    return *p;
}

Matrix Centralizer::e_matrix(Field f) const {
    Matrix m(f, static_cast<std::size_t>(lambda_.N()), static_cast<std::size_t>(lambda_.N()));
    for (int i = 1; i <= static_cast<int>(lambda_.n()); ++i)
        for (int t = 0; t + 1 < lambda_[i]; ++t) m(v_index(i, t + 1), v_index(i, t)) = Scalar(f, 1);
    return m;
}

Matrix Centralizer::as_matrix(std::size_t a, Field f) const {
    const auto& b = basis_.at(a);
    Matrix m(f, static_cast<std::size_t>(lambda_.N()), static_cast<std::size_t>(lambda_.N()));
    for (int t = 0; t < lambda_[b.i] && b.s + t < lambda_[b.j]; ++t)
        m(v_index(b.j, b.s + t), v_index(b.i, t)) = Scalar(f, 1);
    return m;
}

Matrix Centralizer::as_matrix(const Vec& x) const {
    if (x.size() != dim()) throw std::invalid_argument("as_matrix: wrong length");
    Field f = x.empty() ? Field::rationals() : x[0].field();
    Matrix m(f, static_cast<std::size_t>(lambda_.N()), static_cast<std::size_t>(lambda_.N()));
    for (std::size_t a = 0; a < dim(); ++a) {
        if (x[a].is_zero()) continue;
        const auto& b = basis_[a];
        for (int t = 0; t < lambda_[b.i] && b.s + t < lambda_[b.j]; ++t)
            m(v_index(b.j, b.s + t), v_index(b.i, t)) += x[a];
    }
    return m;
}

Vec Centralizer::coordinates(const Matrix& m) const {
    Vec x = zero_vec(m.field(), dim());
    for (std::size_t a = 0; a < dim(); ++a) {
        const auto& b = basis_[a];
        x[a] = m(v_index(b.j, b.s), v_index(b.i, 0));
    }
    if (!(as_matrix(x) == m)) throw NotInAlgebra("matrix does not centralise e");
    return x;
}

std::optional<std::size_t> Centralizer::product(std::size_t a, std::size_t b) const {
    const auto& x = basis_[a];
    const auto& y = basis_[b];
    if (y.j != x.i) return std::nullopt;
    const int s = x.s + y.s;
    if (s >= lambda_[x.j]) return std::nullopt;
    auto pos = find(y.i, x.j, s);
    if (!pos) throw std::logic_error("product left the centraliser");
    return pos;
}

Vec Centralizer::bracket(const Vec& x, const Vec& y) const {
    Field f = x.at(0).field();
    Vec out = zero_vec(f, dim());
    for (std::size_t a = 0; a < dim(); ++a) {
        if (x[a].is_zero()) continue;
        for (std::size_t b = 0; b < dim(); ++b) {
            if (y[b].is_zero()) continue;
            Scalar c = x[a] * y[b];
            for (const auto& [pos, coef] : bracket(a, b)) out[pos] += c * Scalar(f, coef);
        }
    }
    return out;
}

Centralizer::Split Centralizer::triangular_split() const {
    Split s;
    for (std::size_t a = 0; a < dim(); ++a) {
        const auto& b = basis_[a];
        (b.i < b.j ? s.lower : b.i == b.j ? s.diagonal : s.upper).push_back(a);
    }
    return s;
}

std::string Centralizer::name(std::size_t a) const { return "xi[" + basis_.at(a).to_string() + "]"; }

Form::Form(const Centralizer& g, Case c) : g_(&g), case_(c), inv_(nilcent::involution(g.partition(), c)) {
    const std::size_t d = g.dim();
    zeta_rel_.resize(d);
    eta_rel_.resize(d);
    std::vector<bool> done(d, false);
    for (std::size_t a = 0; a < d; ++a) {
        if (done[a]) continue;
        const std::size_t b = sigma(a).second;
        BasisIndex la = label(a), lb = label(b);
        // canonical representative: the smaller label
        std::size_t canon = la <= lb ? a : b, other = la <= lb ? b : a;
        BasisIndex lc = label(canon);
        int ec = sign(lc.i, lc.j, lc.s);
        done[a] = done[b] = true;
        if (canon == other) {
            if (1 + ec != 0) {
                zeta_rel_[canon] = {1, zeta_.size()};
                zeta_.push_back({lc, {{canon, 1 + ec}}});
            }
            if (1 - ec != 0) {
                eta_rel_[canon] = {1, eta_.size()};
                eta_.push_back({lc, {{canon, 1 - ec}}});
            }
            continue;
        }
        zeta_rel_[canon] = {1, zeta_.size()};
        zeta_.push_back({lc, {{canon, 1}, {other, ec}}});
        eta_rel_[canon] = {1, eta_.size()};
        eta_.push_back({lc, {{canon, 1}, {other, -ec}}});
        BasisIndex lo = label(other);
        int eo = sign(lo.i, lo.j, lo.s);
        zeta_rel_[other] = {eo, zeta_rel_[canon].target};
        eta_rel_[other] = {-eo, eta_rel_[canon].target};
    }
}

BasisIndex Form::label(std::size_t a) const {
    const auto& b = g_->basis().at(a);
    return {b.i, b.j, g_->partition()[b.j] - 1 - b.s};
}

int Form::sign(int i, int j, int s) const {
    const auto& lam = g_->partition();
    int v = ((lam[j] - s) % 2 == 0) ? 1 : -1;
    return v * varpi(i, prime(i)) * varpi(j, prime(j));
}

Matrix Form::gram(Field f) const {
    const auto& lam = g_->partition();
    const std::size_t N = static_cast<std::size_t>(lam.N());
    Matrix J(f, N, N);
    for (int i = 1; i <= static_cast<int>(lam.n()); ++i)
        for (int a = 0; a < lam[i]; ++a) {
            int b = lam[i] - 1 - a;
            int v = (a % 2 == 0 ? 1 : -1) * varpi(i, prime(i));
            J(g_->v_index(i, a), g_->v_index(prime(i), b)) = Scalar(f, v);
        }
    return J;
}

std::pair<int, std::size_t> Form::sigma(std::size_t a) const {
    const auto& lam = g_->partition();
    BasisIndex l = label(a);
    int ip = prime(l.i), jp = prime(l.j);
    auto pos = g_->find(jp, ip, lam[l.i] - 1 - l.s);
    if (!pos) throw std::logic_error("sigma left the basis");
    return {sign(l.i, l.j, l.s), *pos};
}

Vec Form::sigma(const Vec& x) const {
    Field f = x.at(0).field();
    Vec out = zero_vec(f, x.size());
    for (std::size_t a = 0; a < x.size(); ++a) {
        if (x[a].is_zero()) continue;
        auto [e, b] = sigma(a);
        out[b] += Scalar(f, e) * x[a];
    }
    return out;
}

Matrix Form::sigma_matrix(const Matrix& x) const {
    Matrix J = gram(x.field());
    return Scalar(x.field(), -1) * (inverse(J) * x.transpose() * J);
}

Setting::Setting(const Partition& lambda, Case c, Field f)
    : case_(c), field_(f), g_(std::make_unique<Centralizer>(lambda)) {
    const std::size_t d = g_->dim();
    if (c == Case::gl) {
        for (std::size_t a = 0; a < d; ++a) {
            Vec v = zero_vec(f, d);
            v[a] = Scalar(f, 1);
            acting_.push_back(v);
            module_.push_back(v);
            acting_lead_.push_back(a);
            module_lead_.push_back(a);
            acting_names_.push_back(g_->name(a));
            module_names_.push_back(g_->name(a));
        }
        return;
    }
    if (f.characteristic() == 2) throw std::invalid_argument("sp/so need characteristic other than 2");
    form_ = std::make_unique<Form>(*g_, c);
    for (const auto& z : form_->zeta()) {
        acting_.push_back(to_vec(z.vec, f, d));
        acting_lead_.push_back(z.vec.front().first);
        acting_names_.push_back("zeta[" + z.label.to_string() + "]");
    }
    const auto& mod = c == Case::sp ? form_->zeta() : form_->eta();
    for (const auto& z : mod) {
        module_.push_back(to_vec(z.vec, f, d));
        module_lead_.push_back(z.vec.front().first);
        module_names_.push_back((c == Case::sp ? "zeta[" : "eta[") + z.label.to_string() + "]");
    }
}

const Form& Setting::form() const {
    if (!form_) throw std::logic_error("gl setting has no form");
    return *form_;
}

Vec Setting::coords(const Vec& x, const std::vector<Vec>& basis, const std::vector<std::size_t>& lead) const {
    Vec c = zero_vec(field_, basis.size());
    Vec rebuilt = zero_vec(field_, x.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        c[k] = x[lead[k]] / basis[k][lead[k]];
        if (c[k].is_zero()) continue;
        for (std::size_t a = 0; a < x.size(); ++a)
            if (!basis[k][a].is_zero()) rebuilt[a] += c[k] * basis[k][a];
    }
    if (rebuilt != x) throw NotInAlgebra("vector outside the subspace");
    return c;
}

Vec Setting::module_coordinates(const Vec& x) const { return coords(x, module_, module_lead_); }
Vec Setting::acting_coordinates(const Vec& x) const { return coords(x, acting_, acting_lead_); }

}  // namespace nilcent
