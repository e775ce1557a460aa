#include "nilcent/coadjoint.hpp"

#include <algorithm>

#include "nilcent/invariants.hpp"

namespace nilcent {

namespace {

void add_at(const Centralizer& g, DualPoint& v, int i, int j, int s, const Scalar& c) {
    if (auto p = g.find(i, j, s)) v[*p] += c;
}

Scalar pair(const DualPoint& gamma, const Vec& x) {
    Scalar t(gamma.at(0).field(), 0);
    for (std::size_t a = 0; a < x.size(); ++a)
        if (!x[a].is_zero() && !gamma[a].is_zero()) t += gamma[a] * x[a];
    return t;
}

DualPoint dual_of(const Form& form, int i, int j, int s, Field f, int sign_of_partner) {
    const Centralizer& g = form.algebra();
    const auto& lam = g.partition();
    DualPoint v = zero_vec(f, g.dim());
    const int n = static_cast<int>(lam.n());
    if (i < 1 || i > n || j < 1 || j > n || s < 0 || s >= std::min(lam[i], lam[j])) return v;
    add_at(g, v, i, j, lam[j] - 1 - s, Scalar(f, 1));
    add_at(g, v, form.prime(j), form.prime(i), lam[i] - 1 - s, Scalar(f, sign_of_partner * form.sign(i, j, s)));
    return v;
}

}  // namespace

DualPoint coad(const Centralizer& g, const Vec& x, const DualPoint& gamma) {
    Field f = gamma.at(0).field();
    DualPoint out = zero_vec(f, g.dim());
    for (std::size_t b = 0; b < g.dim(); ++b)
        for (std::size_t a = 0; a < g.dim(); ++a) {
            if (x[a].is_zero()) continue;
            for (const auto& [pos, c] : g.bracket(b, a))
                if (!gamma[pos].is_zero()) out[b] += x[a] * gamma[pos] * Scalar(f, c);
        }
    return out;
}

DualPoint coad_dual_formula(const Centralizer& g, std::size_t a, const DualPoint& gamma) {
    Field f = gamma.at(0).field();
    DualPoint out = zero_vec(f, g.dim());
    const auto& x = g.basis().at(a);
    for (std::size_t b = 0; b < g.dim(); ++b) {
        if (gamma[b].is_zero()) continue;
        const auto& y = g.basis()[b];
        if (x.i == y.i) add_at(g, out, x.j, y.j, y.s - x.s, gamma[b]);
        if (x.j == y.j) add_at(g, out, y.i, x.i, y.s - x.s, -gamma[b]);
    }
    return out;
}

std::vector<Scalar> alpha_coefficients(const Partition& lambda, Case c, Field f) {
    const int n = static_cast<int>(lambda.n());
    Involution inv = c == Case::gl ? Involution([&] {
        std::vector<int> id(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i)] = i + 1;
        return id;
    }())
                                   : involution(lambda, c);
    auto l = [&](int i) { return c == Case::gl || inv.fixed(i) ? 1 : 2; };
    std::vector<std::optional<Scalar>> a(static_cast<std::size_t>(n));
    auto at = [&](int i) -> std::optional<Scalar>& { return a[static_cast<std::size_t>(i - 1)]; };
    auto admissible_so_far = [&]() {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                if (!at(i) || !at(j)) continue;
                if (*at(i) == *at(j)) return false;
                if (c != Case::gl && Scalar(f, l(i)) * *at(i) == Scalar(f, l(j)) * *at(j)) return false;
            }
        return true;
    };
    const std::int64_t limit = f.is_rational() ? std::int64_t{1} << 40 : static_cast<std::int64_t>(f.characteristic());
    for (int i = 1; i <= n; ++i) {
        if (at(i)) continue;
        bool found = false;
        for (std::int64_t v = 1; v < limit && !found; ++v) {
            at(i) = Scalar(f, v);
            if (inv(i) != i) at(inv(i)) = Scalar(f, -v);
            found = admissible_so_far();
            if (!found && inv(i) != i) at(inv(i)).reset();
        }
        if (!found)
            throw FieldTooSmall("no admissible alpha coefficients for " + lambda.to_string() + " " + case_name(c) +
                                " over " + f.name());
    }
    std::vector<Scalar> out;
    for (auto& v : a) out.push_back(*v);
    return out;
}

DualPoint special_point(const Setting& s, PointKind kind) {
    const Centralizer& g = s.g();
    const auto& lam = g.partition();
    const int n = static_cast<int>(lam.n());
    const Field f = s.field();
    DualPoint v = zero_vec(f, g.dim());
    switch (kind) {
        case PointKind::alpha: {
            auto a = alpha_coefficients(lam, s.kind(), f);
            for (int i = 1; i <= n; ++i) add_at(g, v, i, i, lam[i] - 1, a[static_cast<std::size_t>(i - 1)]);
            return v;
        }
        case PointKind::beta:
            for (int i = 1; i < n; ++i) add_at(g, v, i, i + 1, lam[i + 1] - 1, Scalar(f, 1));
            return v;
        case PointKind::betabar: {
            DualPoint b = special_point(s, PointKind::beta), bp = beta_prime(s);
            const Scalar sign(f, s.kind() == Case::sp ? 1 : -1);
            for (std::size_t k = 0; k < v.size(); ++k) v[k] = b[k] + sign * bp[k];
            return v;
        }
    }
    return v;
}

DualPoint beta_prime(const Setting& s) {
    const Form& form = s.form();
    const Centralizer& g = s.g();
    const auto& lam = g.partition();
    DualPoint v = zero_vec(s.field(), g.dim());
    for (int i = 1; i < static_cast<int>(lam.n()); ++i)
        if (i + 1 != form.prime(i))
            add_at(g, v, form.prime(i + 1), form.prime(i), lam[i] - 1, Scalar(s.field(), form.sign(i, i + 1, 0)));
    return v;
}

DualPoint zeta_dual(const Form& form, int i, int j, int s, Field f) { return dual_of(form, i, j, s, f, 1); }
DualPoint eta_dual(const Form& form, int i, int j, int s, Field f) { return dual_of(form, i, j, s, f, -1); }

namespace {

DualPoint module_dual(const Setting& s, int i, int j, int sh) {
    return s.kind() == Case::sp ? zeta_dual(s.form(), i, j, sh, s.field()) : eta_dual(s.form(), i, j, sh, s.field());
}

void axpy(DualPoint& y, const Scalar& c, const DualPoint& x) {
    for (std::size_t k = 0; k < y.size(); ++k)
        if (!x[k].is_zero()) y[k] += c * x[k];
}

}  // namespace

DualPoint alpha_from_expansion(const Setting& s) {
    const Form& form = s.form();
    const auto& lam = s.g().partition();
    const Field f = s.field();
    auto a = alpha_coefficients(lam, s.kind(), f);
    DualPoint v = zero_vec(f, s.g().dim());
    for (int i = 1; i <= static_cast<int>(lam.n()); ++i) {
        if (i > form.prime(i)) continue;
        Scalar c = a[static_cast<std::size_t>(i - 1)];
        if (i == form.prime(i)) c *= Scalar(f, 1, 2);
        axpy(v, c, module_dual(s, i, i, 0));
    }
    return v;
}

DualPoint betabar_from_expansion(const Setting& s) {
    const Form& form = s.form();
    const auto& lam = s.g().partition();
    const Field f = s.field();
    DualPoint v = zero_vec(f, s.g().dim());
    for (int i = 1; i < static_cast<int>(lam.n()); ++i) {
        Scalar c = i + 1 == form.prime(i) ? Scalar(f, 1, 2) : Scalar(f, 1);
        axpy(v, c, module_dual(s, i, i + 1, 0));
    }
    return v;
}

bool in_module_dual(const Setting& s, const DualPoint& gamma) {
    if (s.kind() == Case::gl) return true;
    const auto& other = s.kind() == Case::sp ? s.form().eta() : s.form().zeta();
    for (const auto& el : other)
        if (!pair(gamma, to_vec(el.vec, s.field(), s.g().dim())).is_zero()) return false;
    return true;
}

Vec module_values(const Setting& s, const DualPoint& gamma) {
    Vec out;
    for (const auto& m : s.module()) out.push_back(pair(gamma, m));
    return out;
}

DualPoint rho_action(const Centralizer& g, const Scalar& t, const DualPoint& gamma) {
    if (t.is_zero()) throw DivisionByZero("rho_action needs t != 0");
    DualPoint out = gamma;
    for (std::size_t a = 0; a < g.dim(); ++a) {
        const auto& b = g.basis()[a];
        out[a] *= t.pow(b.i - b.j + 1);
    }
    return out;
}

DualPoint coad_alpha_closed_form(const Centralizer& g, std::size_t a, const std::vector<Scalar>& coeffs) {
    const auto& lam = g.partition();
    const auto& x = g.basis().at(a);
    Field f = coeffs.at(0).field();
    DualPoint v = zero_vec(f, g.dim());
    add_at(g, v, x.j, x.i, lam[x.i] - 1 - x.s, coeffs[static_cast<std::size_t>(x.i - 1)]);
    add_at(g, v, x.j, x.i, lam[x.j] - 1 - x.s, -coeffs[static_cast<std::size_t>(x.j - 1)]);
    return v;
}

DualPoint coad_alpha_zeta_closed_form(const Setting& s, int i, int j, int sh, const std::vector<Scalar>& coeffs) {
    const auto& lam = s.g().partition();
    DualPoint v = zero_vec(s.field(), s.g().dim());
    axpy(v, coeffs[static_cast<std::size_t>(i - 1)], module_dual(s, j, i, lam[j] - 1 - sh));
    axpy(v, -coeffs[static_cast<std::size_t>(j - 1)], module_dual(s, j, i, lam[i] - 1 - sh));
    return v;
}

StabiliserReport stabiliser(const Setting& s, const DualPoint& gamma) {
    const auto& acting = s.acting();
    Matrix m(s.field(), s.g().dim(), acting.size());
    for (std::size_t c = 0; c < acting.size(); ++c) {
        DualPoint img = coad(s.g(), acting[c], gamma);
        for (std::size_t r = 0; r < img.size(); ++r) m(r, c) = img[r];
    }
    StabiliserReport rep;
    rep.kernel = nullspace(m);
    rep.dimension = rep.kernel.size();
    return rep;
}

std::size_t index_closed_form(const Partition& lambda, Case c) {
    switch (c) {
        case Case::gl: return static_cast<std::size_t>(lambda.N());
        case Case::sp: return static_cast<std::size_t>(lambda.N() / 2);
        case Case::so: return static_cast<std::size_t>((lambda.N() - lambda.odd_parts()) / 2);
    }
    return 0;
}

IndexReport index_report(const Setting& s) {
    IndexReport rep;
    rep.stabiliser_dim = stabiliser(s, special_point(s, PointKind::alpha)).dimension;
    rep.closed_form = index_closed_form(s.g().partition(), s.kind());
    rep.pass = rep.stabiliser_dim == rep.closed_form;
    return rep;
}

DominanceReport dominance_span_check(const Setting& s) {
    const Centralizer& g = s.g();
    const Field f = s.field();
    DualPoint alpha = special_point(s, PointKind::alpha);
    std::vector<Vec> span;
    for (const auto& x : s.acting()) span.push_back(coad(g, x, alpha));

    std::vector<std::pair<std::string, Vec>> targets;
    if (s.kind() == Case::gl) {
        for (std::size_t a = 0; a < g.dim(); ++a) {
            const auto& b = g.basis()[a];
            if (b.i == b.j) continue;
            Vec v = zero_vec(f, g.dim());
            v[a] = Scalar(f, 1);
            targets.emplace_back(g.name(a) + "*", v);
        }
    } else {
        const auto& els = s.kind() == Case::sp ? s.form().zeta() : s.form().eta();
        for (std::size_t k = 0; k < els.size(); ++k)
            if (els[k].label.i != els[k].label.j)
                targets.emplace_back(s.module_names()[k] + "*", to_vec(els[k].vec, f, g.dim()));
    }

    DominanceReport rep;
    rep.targets = targets.size();
    const std::size_t base = span.empty() ? 0 : rank(Matrix::from_rows(f, span, g.dim()));
    for (const auto& [name, v] : targets) {
        auto rows = span;
        rows.push_back(v);
        if (rank(Matrix::from_rows(f, rows, g.dim())) != base) rep.missing.push_back(name);
    }
    rep.pass = rep.missing.empty();
    return rep;
}

std::vector<ProbeRow> jacobian_probe(const Setting& s, Exec exec) {
    return jacobian_probe(s, module_generators(s, exec), exec);
}

std::vector<ProbeRow> jacobian_probe(const Setting& s, const std::vector<Poly>& generators, Exec exec) {
    const std::size_t m = static_cast<std::size_t>(invariant_count(s.g().partition(), s.kind()));
    DualPoint alpha = special_point(s, PointKind::alpha);
    DualPoint b = special_point(s, s.kind() == Case::gl ? PointKind::beta : PointKind::betabar);
    DualPoint sum = alpha;
    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += b[k];
    const std::string bname = s.kind() == Case::gl ? "beta" : "betabar";
    std::vector<ProbeRow> rows;
    for (const auto& [name, pt] : std::vector<std::pair<std::string, DualPoint>>{
             {bname, b}, {"alpha", alpha}, {"alpha+" + bname, sum}}) {
        ProbeRow row;
        row.point = name;
        row.rank = jacobian_rank(generators, module_values(s, pt), {}, exec);
        row.expected = m;
        row.pass = row.rank == m;
        rows.push_back(row);
    }
    return rows;
}

bool beta_differential_check(const Centralizer& g, const std::vector<Poly>& xs, Field f) {
    const auto& lam = g.partition();
    const int n = static_cast<int>(lam.n());
    DualPoint beta = zero_vec(f, g.dim());
    for (int i = 1; i < n; ++i) add_at(g, beta, i, i + 1, lam[i + 1] - 1, Scalar(f, 1));
    std::vector<std::size_t> U;
    for (std::size_t a = 0; a < g.dim(); ++a)
        if (g.basis()[a].j == 1) U.push_back(a);
    auto d = degree_sequence(lam);
    for (int r = 1; r <= lam.N(); ++r) {
        const int dr = d[static_cast<std::size_t>(r - 1)];
        int before = 0;
        for (int j = 1; j < dr; ++j) before += lam[j];
        const int tr = r - before;
        auto target = g.find(dr, 1, lam[1] - lam[dr] + tr - 1);
        if (!target) return false;
        Vec diff = differential(xs.at(static_cast<std::size_t>(r - 1)), beta);
        const Scalar expect(f, dr % 2 ? 1 : -1);
        for (auto a : U)
            if (diff[a] != (a == *target ? expect : Scalar(f, 0))) return false;
    }
    return true;
}

}  // namespace nilcent
