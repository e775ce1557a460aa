#include "nilcent/invariants.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace nilcent {

namespace {

using IntPoly = std::map<Monomial, std::int64_t>;

// Sum of theta(w, mu) over the permutations w with w(0) = first.
void theta_sum(const Centralizer& g, const std::vector<int>& mu, int first, IntPoly& acc) {
    const auto& lam = g.partition();
    std::vector<int> supp;
    for (std::size_t k = 0; k < mu.size(); ++k)
        if (mu[k] > 0) supp.push_back(static_cast<int>(k) + 1);
    const int d = static_cast<int>(supp.size());
    // factor k of the product when w(k) = t, or -1 if it is out of range
    std::vector<std::int64_t> pos(static_cast<std::size_t>(d * d), -1);
    for (int k = 0; k < d; ++k)
        for (int t = 0; t < d; ++t) {
            int ik = supp[static_cast<std::size_t>(k)], it = supp[static_cast<std::size_t>(t)];
            int s = lam[it] - lam[ik] + mu[static_cast<std::size_t>(ik - 1)] - 1;
            if (auto p = g.find(ik, it, s)) pos[static_cast<std::size_t>(k * d + t)] = static_cast<std::int64_t>(*p);
        }
    if (pos[static_cast<std::size_t>(first)] < 0) return;
    std::vector<int> w(static_cast<std::size_t>(d));
    w[0] = first;
    for (int t = 0, k = 1; t < d; ++t)
        if (t != first) w[static_cast<std::size_t>(k++)] = t;
    do {
        bool zero = false;
        std::vector<std::uint32_t> exps(g.dim(), 0);
        for (int k = 0; k < d && !zero; ++k) {
            auto p = pos[static_cast<std::size_t>(k * d + w[static_cast<std::size_t>(k)])];
            if (p < 0)
                zero = true;
            else
                ++exps[static_cast<std::size_t>(p)];
        }
        if (zero) continue;
        acc[Monomial::from_exponents(exps)] += permutation_sign(w);
    } while (std::next_permutation(w.begin() + 1, w.end()));
}

Poly to_poly(const IntPoly& acc, Field f) {
    Poly p(f);
    for (const auto& [m, c] : acc) p.add_term(m, Scalar(f, c));
    return p;
}

}  // namespace

Poly theta(const Centralizer& g, const std::vector<int>& w, const std::vector<int>& mu, Field f) {
    const auto& lam = g.partition();
    std::vector<int> supp;
    for (std::size_t k = 0; k < mu.size(); ++k)
        if (mu[k] > 0) supp.push_back(static_cast<int>(k) + 1);
    if (w.size() != supp.size()) throw std::invalid_argument("theta: permutation length differs from l(mu)");
    Monomial m;
    for (std::size_t k = 0; k < supp.size(); ++k) {
        int ik = supp[k], iw = supp[static_cast<std::size_t>(w[k])];
        int s = lam[iw] - lam[ik] + mu[static_cast<std::size_t>(ik - 1)] - 1;
        auto p = g.find(ik, iw, s);
        if (!p) return Poly(f);
        m = m * Monomial::var(static_cast<Var>(*p));
    }
    return Poly::term(Scalar(f, permutation_sign(w)), m);
}

Poly elementary_invariant(const Centralizer& g, int r, Field f, Exec exec) {
    const auto& lam = g.partition();
    if (r < 1 || r > lam.N()) throw std::out_of_range("r out of range");
    const int d = degree_sequence(lam)[static_cast<std::size_t>(r - 1)];
    const auto comps = compositions(lam, r, d);
    const std::size_t tasks = comps.size() * static_cast<std::size_t>(d);
    std::vector<IntPoly> parts(tasks);
    auto run = [&](std::size_t t) {
        theta_sum(g, comps[t / static_cast<std::size_t>(d)], static_cast<int>(t % static_cast<std::size_t>(d)), parts[t]);
    };
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t t = 0; t < static_cast<std::int64_t>(tasks); ++t) run(static_cast<std::size_t>(t));
    } else {
        for (std::size_t t = 0; t < tasks; ++t) run(t);
    }
    IntPoly total;
    for (const auto& part : parts)
        for (const auto& [m, c] : part) total[m] += c;
    return to_poly(total, f);
}

std::vector<Poly> elementary_invariants(const Centralizer& g, Field f, Exec exec) {
    std::vector<Poly> xs;
    for (int r = 1; r <= g.partition().N(); ++r) xs.push_back(elementary_invariant(g, r, f, exec));
    return xs;
}

Poly sigma_poly(const Form& form, const Poly& x) {
    const std::size_t d = form.algebra().dim();
    std::vector<Poly> images;
    for (std::size_t a = 0; a < d; ++a) {
        auto [e, b] = form.sigma(a);
        images.push_back(Poly::term(Scalar(x.field(), e), Monomial::var(static_cast<Var>(b))));
    }
    return substitute_linear(x, images);
}

Poly restrict_to(const Form& form, const Poly& x, Target t, Field f) {
    const std::size_t d = form.algebra().dim();
    std::vector<Poly> images;
    const Scalar half(f, 1, 2);
    for (std::size_t a = 0; a < d; ++a) {
        auto rel = t == Target::k ? form.zeta_of(a) : form.eta_of(a);
        if (rel.sign == 0)
            images.emplace_back(f);
        else
            images.push_back(Poly::term(half * Scalar(f, rel.sign), Monomial::var(static_cast<Var>(rel.target))));
    }
    return substitute_linear(x, images);
}

std::vector<Poly> module_generators(const Setting& s, Exec exec) {
    const auto& lam = s.g().partition();
    auto xs = elementary_invariants(s.g(), s.field(), exec);
    std::vector<Poly> out;
    for (int r : generator_indices(lam, s.kind())) {
        const Poly& x = xs[static_cast<std::size_t>(r - 1)];
        switch (s.kind()) {
            case Case::gl: out.push_back(x); break;
            case Case::sp: out.push_back(restrict_to(s.form(), x, Target::k, s.field())); break;
            case Case::so: out.push_back(restrict_to(s.form(), x, Target::p, s.field())); break;
        }
    }
    return out;
}

std::vector<Poly> ad_images(const Setting& s, const Vec& x) {
    std::vector<Poly> images;
    for (const auto& m : s.module()) images.push_back(Poly::linear(s.module_coordinates(s.g().bracket(x, m))));
    return images;
}

Poly ad_derivation(const Setting& s, const Vec& x, const Poly& f) { return derivation(f, ad_images(s, x)); }

InvarianceResult verify_ad_invariance(const Centralizer& g, Field f, Exec exec) {
    return verify_ad_invariance(g, elementary_invariants(g, f, exec), f, exec);
}

InvarianceResult verify_ad_invariance(const Centralizer& g, const std::vector<Poly>& xs, Field f, Exec exec) {
    const std::size_t d = g.dim();
    std::vector<std::vector<Poly>> images(d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            Poly p(f);
            for (const auto& [pos, coef] : g.bracket(a, b)) p.add_term(Monomial::var(static_cast<Var>(pos)), Scalar(f, coef));
            images[a].push_back(std::move(p));
        }
    const std::size_t tasks = d * xs.size();
    std::vector<char> bad(tasks, 0);
    auto run = [&](std::size_t t) { bad[t] = !derivation(xs[t % xs.size()], images[t / xs.size()]).is_zero(); };
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t t = 0; t < static_cast<std::int64_t>(tasks); ++t) run(static_cast<std::size_t>(t));
    } else {
        for (std::size_t t = 0; t < tasks; ++t) run(t);
    }
    InvarianceResult res;
    res.checked = tasks;
    auto it = std::find(bad.begin(), bad.end(), 1);
    if (it != bad.end()) {
        auto t = static_cast<std::size_t>(it - bad.begin());
        res.pass = false;
        res.xi = t / xs.size();
        res.r = static_cast<int>(t % xs.size()) + 1;
    }
    return res;
}

std::vector<Poly> group_images(const Centralizer& g, std::size_t a, Field f) {
    const auto& x = g.basis().at(a);
    if (x.i == x.j && x.s == 0) throw std::invalid_argument("group_images: xi must be nilpotent");
    struct Piece {
        unsigned t;
        std::int64_t coef;
        std::optional<std::size_t> pos;  // nullopt: the identity
    };
    std::vector<Piece> fwd{{0, 1, std::nullopt}, {1, 1, a}};
    std::vector<Piece> inv{{0, 1, std::nullopt}};
    if (x.i != x.j) {
        inv.push_back({1, -1, a});
    } else {
        for (unsigned k = 1;; ++k) {
            auto p = g.find(x.i, x.i, static_cast<int>(k) * x.s);
            if (!p) break;
            inv.push_back({k, k % 2 ? -1 : 1, *p});
        }
    }
    const Var t = static_cast<Var>(g.dim());
    std::vector<Poly> images;
    for (std::size_t b = 0; b < g.dim(); ++b) {
        Poly img(f);
        for (const auto& u : fwd)
            for (const auto& w : inv) {
                std::optional<std::size_t> left = u.pos ? g.product(*u.pos, b) : std::optional<std::size_t>(b);
                if (!left) continue;
                std::optional<std::size_t> full = w.pos ? g.product(*left, *w.pos) : left;
                if (!full) continue;
                img.add_term(Monomial::var(static_cast<Var>(*full)) * Monomial::var(t, u.t + w.t),
                             Scalar(f, u.coef * w.coef));
            }
        images.push_back(std::move(img));
    }
    return images;
}

bool group_invariant(const Centralizer& g, const Poly& x, std::size_t a) {
    return substitute(x, group_images(g, a, x.field())) == x;
}

SigmaParityResult verify_sigma_parity(const Form& form, const std::vector<Poly>& xs) {
    SigmaParityResult res;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        const int r = static_cast<int>(k) + 1;
        Poly expect = r % 2 ? -xs[k] : xs[k];
        if (sigma_poly(form, xs[k]) != expect) {
            res.pass = false;
            res.failing.push_back(r);
        }
    }
    return res;
}

namespace {

std::size_t span_dim(const std::vector<Poly>& polys, const std::map<Monomial, std::size_t>& index, Field f,
                     Exec exec) {
    if (polys.empty() || index.empty()) return 0;
    Matrix m(f, polys.size(), index.size());
    for (std::size_t r = 0; r < polys.size(); ++r)
        for (const auto& [mono, c] : polys[r].terms()) m(r, index.at(mono)) = c;
    return rank(m, exec);
}

}  // namespace

std::vector<GradedRow> graded_invariant_dims(const Setting& s, unsigned dmax, std::size_t max_entries, Exec exec) {
    const Field f = s.field();
    const std::size_t n = s.module().size();
    std::vector<std::vector<Poly>> images;
    for (const auto& x : s.acting()) images.push_back(ad_images(s, x));

    struct Letter {
        Poly poly;
        unsigned degree;
    };
    std::vector<Letter> letters;
    if (!f.is_rational()) {
        const auto p = static_cast<unsigned>(f.characteristic());
        for (std::size_t v = 0; v < n; ++v)
            letters.push_back({Poly::term(Scalar(f, 1), Monomial::var(static_cast<Var>(v), p)), p});
    }
    for (auto& gen : module_generators(s, exec))
        if (!gen.is_zero()) {
            if (!gen.is_homogeneous()) throw std::logic_error("generator is not homogeneous");
            auto deg = static_cast<unsigned>(gen.degree());
            letters.push_back({std::move(gen), deg});
        }

    std::vector<GradedRow> rows;
    for (unsigned k = 0; k <= dmax; ++k) {
        auto monos = monomials_of_degree(n, k);
        if (monos.size() * monos.size() * std::max<std::size_t>(1, images.size()) > max_entries)
            throw CapExceeded("graded_invariant_dims: kernel matrix too large at degree " + std::to_string(k));
        std::map<Monomial, std::size_t> index;
        for (std::size_t c = 0; c < monos.size(); ++c) index.emplace(monos[c], c);

        // (a) kernel of f -> (ad(x) f)_x
        Matrix m(f, monos.size(), monos.size() * images.size());
        for (std::size_t r = 0; r < monos.size(); ++r) {
            Poly mono = Poly::term(Scalar(f, 1), monos[r]);
            for (std::size_t x = 0; x < images.size(); ++x) {
                const Poly d = derivation(mono, images[x]);
                for (const auto& [mm, c] : d.terms()) m(r, x * monos.size() + index.at(mm)) = c;
            }
        }
        const std::size_t kernel = monos.size() - (images.empty() ? 0 : rank(m, exec));

        // (b) products of letters of total degree k
        std::vector<Poly> products;
        std::function<void(std::size_t, unsigned, const Poly&)> rec = [&](std::size_t from, unsigned left,
                                                                          const Poly& acc) {
            if (left == 0) {
                products.push_back(acc);
                return;
            }
            for (std::size_t l = from; l < letters.size(); ++l)
                if (letters[l].degree > 0 && letters[l].degree <= left) rec(l, left - letters[l].degree, acc * letters[l].poly);
        };
        rec(0, k, Poly::constant(f, 1));
        rows.push_back({k, kernel, span_dim(products, index, f, exec)});
    }
    return rows;
}

}  // namespace nilcent
