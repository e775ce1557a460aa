#include "nilcent/enveloping.hpp"

#include <algorithm>

#include "nilcent/coadjoint.hpp"

namespace nilcent {

Word word_of(const Monomial& m) {
    Word w;
    for (const auto& [v, e] : m.factors()) w.insert(w.end(), e, v);
    return w;
}

namespace {

Monomial monomial_of(const Word& w) {
    Monomial m;
    for (Var v : w) m = m * Monomial::var(v);
    return m;
}

Vec unit(Field f, std::size_t n, std::size_t k) {
    Vec v = zero_vec(f, n);
    v[k] = Scalar(f, 1);
    return v;
}

// acting coordinates -> g_e coordinates
Vec embed(const Setting& s, const Vec& x) {
    Vec out = zero_vec(s.field(), s.g().dim());
    for (std::size_t a = 0; a < x.size(); ++a) {
        if (x[a].is_zero()) continue;
        const Vec& basis = s.acting()[a];
        for (std::size_t k = 0; k < out.size(); ++k)
            if (!basis[k].is_zero()) out[k] += x[a] * basis[k];
    }
    return out;
}

Vec acting_bracket(const Enveloping& u, const Vec& x, const Vec& y) {
    Vec out = zero_vec(u.field(), u.dim());
    for (std::size_t a = 0; a < x.size(); ++a) {
        if (x[a].is_zero()) continue;
        for (std::size_t b = 0; b < y.size(); ++b) {
            if (y[b].is_zero()) continue;
            Scalar c = x[a] * y[b];
            const Vec& br = u.bracket(a, b);
            for (std::size_t k = 0; k < out.size(); ++k)
                if (!br[k].is_zero()) out[k] += c * br[k];
        }
    }
    return out;
}

std::string key_text(const Enveloping& u, const Monomial& m) {
    return UElement{Poly::term(Scalar(u.field(), 1), m), u.cap()}.pbw.to_string([&](Var v) { return u.name(v); });
}

std::vector<Monomial> monomials_up_to(std::size_t n, unsigned cap) {
    std::vector<Monomial> out;
    for (unsigned d = 0; d <= cap; ++d) {
        auto ms = monomials_of_degree(n, d);
        out.insert(out.end(), ms.begin(), ms.end());
    }
    return out;
}

}  // namespace

Enveloping::Enveloping(const Setting& s, unsigned cap) : s_(&s), cap_(cap) {
    const std::size_t n = dim();
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            table_[a * n + b] = s.acting_coordinates(s.g().bracket(s.acting()[a], s.acting()[b]));
}

void Enveloping::check_len(std::size_t len) const {
    if (len > cap_)
        throw CapExceeded("enveloping: degree " + std::to_string(len) + " exceeds cap " + std::to_string(cap_));
}

UElement Enveloping::zero() const { return {Poly(field()), cap_}; }
UElement Enveloping::one() const { return {Poly::constant(field(), 1), cap_}; }
UElement Enveloping::generator(Var v) const {
    check_len(1);
    return {Poly::variable(field(), v), cap_};
}
UElement Enveloping::linear(const Vec& x) const {
    check_len(1);
    return {Poly::linear(x), cap_};
}

UElement Enveloping::normalize(const Word& w) const { return normalize_impl(w, nullptr); }
UElement Enveloping::normalize(const Word& w, std::mt19937_64& rng) const { return normalize_impl(w, &rng); }

UElement Enveloping::normalize_impl(const Word& w, std::mt19937_64* rng) const {
    check_len(w.size());
    std::vector<std::size_t> descents;
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
        if (w[k] > w[k + 1]) descents.push_back(k);
    if (descents.empty()) return {Poly::term(Scalar(field(), 1), monomial_of(w)), cap_};
    if (!rng) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find(w);
        if (it != memo_.end()) return {it->second, cap_};
    }
    std::size_t k = descents.front();
    if (rng) k = descents[std::uniform_int_distribution<std::size_t>(0, descents.size() - 1)(*rng)];

    Word swapped = w;
    std::swap(swapped[k], swapped[k + 1]);
    Poly out = normalize_impl(swapped, rng).pbw;
    const Vec& br = bracket(w[k], w[k + 1]);
    for (std::size_t c = 0; c < br.size(); ++c) {
        if (br[c].is_zero()) continue;
        Word shorter(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
        shorter.push_back(static_cast<Var>(c));
        shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(k + 2), w.end());
        out += normalize_impl(shorter, rng).pbw * br[c];
    }
    if (!rng) {
        std::lock_guard<std::mutex> lock(mu_);
        memo_.emplace(w, out);
    }
    return {out, cap_};
}

UElement Enveloping::multiply(const UElement& a, const UElement& b) const {
    Poly out(field());
    for (const auto& [ma, ca] : a.pbw.terms()) {
        Word wa = word_of(ma);
        for (const auto& [mb, cb] : b.pbw.terms()) {
            Word w = wa;
            Word wb = word_of(mb);
            w.insert(w.end(), wb.begin(), wb.end());
            out += normalize(w).pbw * (ca * cb);
        }
    }
    return {out, cap_};
}

UElement Enveloping::commutator(const UElement& a, const UElement& b) const {
    return {multiply(a, b).pbw - multiply(b, a).pbw, cap_};
}

UElement Enveloping::ad(Var x, const UElement& a) const {
    Poly out(field());
    for (const auto& [m, c] : a.pbw.terms()) {
        Word w = word_of(m);
        for (std::size_t k = 0; k < w.size(); ++k) {
            const Vec& br = bracket(x, w[k]);
            for (std::size_t t = 0; t < br.size(); ++t) {
                if (br[t].is_zero()) continue;
                Word v = w;
                v[k] = static_cast<Var>(t);
                out += normalize(v).pbw * (c * br[t]);
            }
        }
    }
    return {out, cap_};
}

std::string Enveloping::to_string(const UElement& u) const {
    return u.pbw.to_string([&](Var v) { return name(v); });
}

Vec p_power_restricted(const Setting& s, const Vec& x) {
    const std::uint64_t p = s.field().characteristic();
    if (p == 0) throw std::invalid_argument("p_power_restricted: needs a field of positive characteristic");
    Matrix base = s.g().as_matrix(embed(s, x));
    Matrix acc = Matrix::identity(s.field(), base.rows());
    for (std::uint64_t e = p; e > 0; e >>= 1) {
        if (e & 1) acc = acc * base;
        if (e > 1) base = base * base;
    }
    return s.acting_coordinates(s.g().coordinates(acc));
}

UElement p_centre_element(const Enveloping& u, Var v, const Vec& image) {
    const std::uint64_t p = u.field().characteristic();
    if (p == 0) throw std::invalid_argument("p_centre_element: needs a field of positive characteristic");
    if (u.cap() < p + 1)
        throw CapExceeded("p-centre: cap " + std::to_string(u.cap()) + " below p + 1 = " + std::to_string(p + 1));
    UElement z = u.normalize(Word(p, v));
    z.pbw -= Poly::linear(image);
    return z;
}

UElement p_centre_generator(const Enveloping& u, Var v) {
    return p_centre_element(u, v, p_power_restricted(u.setting(), unit(u.field(), u.dim(), v)));
}

CentralityReport verify_central(const Enveloping& u, const UElement& z) {
    CentralityReport rep;
    for (Var y = 0; y < u.dim(); ++y) {
        ++rep.checked;
        if (!u.commutator(z, u.generator(y)).pbw.is_zero()) {
            rep.pass = false;
            rep.failing = y;
            break;
        }
    }
    return rep;
}

SymUElement sym_product(const SymUElement& a, const SymUElement& b) {
    SymUElement out{a.field, {}};
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms) {
            SymKey k = ka;
            k.insert(k.end(), kb.begin(), kb.end());
            std::sort(k.begin(), k.end());
            Scalar& slot = out.terms.try_emplace(k, Scalar(a.field, 0)).first->second;
            slot += ca * cb;
            if (slot.is_zero()) out.terms.erase(k);
        }
    return out;
}

SymUElement milner_mu(const UElement& u) {
    const Field f = u.pbw.field();
    SymUElement out{f, {}};
    for (const auto& [m, c] : u.pbw.terms()) {
        Word w = word_of(m);
        for (const auto& part : set_partitions(static_cast<int>(w.size()))) {
            SymKey key;
            for (const auto& block : part) {
                Word sub;
                for (int pos : block) sub.push_back(w[static_cast<std::size_t>(pos)]);
                key.push_back(monomial_of(sub));
            }
            std::sort(key.begin(), key.end());
            Scalar& slot = out.terms.try_emplace(key, Scalar(f, 0)).first->second;
            slot += c;
            if (slot.is_zero()) out.terms.erase(key);
        }
    }
    return out;
}

Vec pi(const Enveloping& u, const Monomial& m) {
    const Setting& s = u.setting();
    const Centralizer& g = s.g();
    Matrix prod = Matrix::identity(s.field(), static_cast<std::size_t>(g.partition().N()));
    for (Var v : word_of(m)) prod = prod * g.as_matrix(s.acting()[v]);
    Vec x;
    try {
        x = g.coordinates(prod);
    } catch (const NotInAlgebra&) {
        throw SaturationViolated("pi: product left the centraliser");
    }
    if (s.kind() != Case::gl) {
        Vec sx = s.form().sigma(x);
        Scalar half(s.field(), 1, 2);
        for (std::size_t k = 0; k < x.size(); ++k) x[k] = half * (x[k] + sx[k]);
    }
    return s.acting_coordinates(x);
}

Vec pi(const Enveloping& u, const UElement& x) {
    Vec out = zero_vec(u.field(), u.dim());
    for (const auto& [m, c] : x.pbw.terms()) {
        Vec v = pi(u, m);
        for (std::size_t k = 0; k < out.size(); ++k) out[k] += c * v[k];
    }
    return out;
}

Poly beta_map(const Enveloping& u, const UElement& x) {
    SymUElement mu = milner_mu(x);
    std::map<Monomial, Poly> cache;
    Poly out(u.field());
    for (const auto& [key, c] : mu.terms) {
        Poly term = Poly::constant(u.field(), c);
        for (const auto& m : key) {
            auto it = cache.find(m);
            if (it == cache.end()) it = cache.emplace(m, Poly::linear(pi(u, m))).first;
            term = term * it->second;
        }
        out += term;
    }
    return out;
}

Poly ad_sym(const Enveloping& u, const Vec& x, const Poly& f) {
    std::vector<Poly> images;
    for (std::size_t v = 0; v < u.dim(); ++v)
        images.push_back(Poly::linear(acting_bracket(u, x, unit(u.field(), u.dim(), v))));
    return derivation(f, images);
}

EnvelopeCheck verify_gr_beta(const Enveloping& u) {
    EnvelopeCheck rep;
    for (const auto& m : monomials_up_to(u.dim(), u.cap())) {
        ++rep.checked;
        Poly b = beta_map(u, UElement{Poly::term(Scalar(u.field(), 1), m), u.cap()});
        Poly symbol = Poly::term(Scalar(u.field(), 1), m);
        if (b.degree() != static_cast<int>(m.degree()) || b.homogeneous_part(m.degree()) != symbol) {
            rep.pass = false;
            rep.failure = "beta(" + key_text(u, m) + ")";
            break;
        }
    }
    return rep;
}

EnvelopeCheck verify_beta_equivariance(const Enveloping& u) {
    EnvelopeCheck rep;
    for (const auto& m : monomials_up_to(u.dim(), u.cap())) {
        UElement um{Poly::term(Scalar(u.field(), 1), m), u.cap()};
        Poly bm = beta_map(u, um);
        for (Var x = 0; x < u.dim(); ++x) {
            ++rep.checked;
            if (beta_map(u, u.ad(x, um)) != ad_sym(u, unit(u.field(), u.dim(), x), bm)) {
                rep.pass = false;
                rep.failure = "x = " + u.name(x) + ", m = " + key_text(u, m);
                return rep;
            }
        }
    }
    return rep;
}

EnvelopeCheck verify_pi_equivariance(const Enveloping& u) {
    EnvelopeCheck rep;
    for (const auto& m : monomials_up_to(u.dim(), u.cap())) {
        UElement um{Poly::term(Scalar(u.field(), 1), m), u.cap()};
        Vec pm = pi(u, m);
        for (Var x = 0; x < u.dim(); ++x) {
            ++rep.checked;
            if (pi(u, u.ad(x, um)) != acting_bracket(u, unit(u.field(), u.dim(), x), pm)) {
                rep.pass = false;
                rep.failure = "x = " + u.name(x) + ", m = " + key_text(u, m);
                return rep;
            }
        }
    }
    return rep;
}

EnvelopeCheck verify_mu_leading(const Enveloping& u) {
    EnvelopeCheck rep;
    const Field f = u.field();
    for (const auto& m : monomials_up_to(u.dim(), u.cap())) {
        if (m.degree() == 0) continue;
        ++rep.checked;
        SymUElement lead{f, {{SymKey{}, Scalar(f, 1)}}};
        for (Var v : word_of(m)) lead = sym_product(lead, milner_mu(UElement{Poly::variable(f, v), u.cap()}));
        SymUElement mu = milner_mu(UElement{Poly::term(Scalar(f, 1), m), u.cap()});
        std::erase_if(mu.terms, [&](const auto& kv) { return kv.first.size() != m.degree(); });
        if (mu.terms != lead.terms) {
            rep.pass = false;
            rep.failure = "mu(" + key_text(u, m) + ")";
            break;
        }
    }
    return rep;
}

EnvelopeCheck verify_beta_bijective(const Enveloping& u) {
    EnvelopeCheck rep;
    const auto ms = monomials_up_to(u.dim(), u.cap());
    std::map<Monomial, std::size_t> col;
    for (std::size_t k = 0; k < ms.size(); ++k) col[ms[k]] = k;
    Matrix m(u.field(), ms.size(), ms.size());
    for (std::size_t r = 0; r < ms.size(); ++r) {
        Poly b = beta_map(u, UElement{Poly::term(Scalar(u.field(), 1), ms[r]), u.cap()});
        for (const auto& [mono, c] : b.terms()) m(r, col.at(mono)) = c;
    }
    // Levels are leading blocks since ms is sorted by degree.
    std::size_t level_end = 0;
    for (unsigned d = 0; d <= u.cap(); ++d) {
        while (level_end < ms.size() && ms[level_end].degree() <= d) ++level_end;
        Matrix block(u.field(), level_end, level_end);
        for (std::size_t r = 0; r < level_end; ++r)
            for (std::size_t c = 0; c < level_end; ++c) block(r, c) = m(r, c);
        ++rep.checked;
        if (rank(block) != level_end) {
            rep.pass = false;
            rep.failure = "level " + std::to_string(d);
            break;
        }
    }
    return rep;
}

EnvelopeCheck verify_beta_group(const Enveloping& u) {
    EnvelopeCheck rep;
    const Setting& s = u.setting();
    if (s.kind() != Case::gl) throw std::invalid_argument("verify_beta_group: gl only");
    const Centralizer& g = s.g();
    const Field f = u.field();
    const auto ms = monomials_up_to(u.dim(), u.cap());
    for (std::size_t a = 0; a < g.dim(); ++a) {
        const BasisIndex& b = g.basis()[a];
        if (b.i == b.j && b.s == 0) continue;
        for (int t = 1; t <= 2; ++t) {
            Matrix gt = Matrix::identity(f, static_cast<std::size_t>(g.partition().N())) + Scalar(f, t) * g.as_matrix(a, f);
            Matrix ginv = inverse(gt);
            std::vector<Poly> images;
            std::vector<UElement> u_images;
            for (Var v = 0; v < u.dim(); ++v) {
                Vec img = s.acting_coordinates(g.coordinates(gt * g.as_matrix(s.acting()[v]) * ginv));
                images.push_back(Poly::linear(img));
                u_images.push_back(u.linear(img));
            }
            for (const auto& m : ms) {
                ++rep.checked;
                UElement moved = u.one();
                for (Var v : word_of(m)) moved = u.multiply(moved, u_images[v]);
                Poly lhs = beta_map(u, moved);
                Poly rhs = substitute_linear(beta_map(u, UElement{Poly::term(Scalar(f, 1), m), u.cap()}), images);
                if (lhs != rhs) {
                    rep.pass = false;
                    rep.failure = "xi = " + g.name(a) + ", t = " + std::to_string(t) + ", m = " + key_text(u, m);
                    return rep;
                }
            }
        }
    }
    return rep;
}

EnvelopeCheck verify_confluence(const Enveloping& u, unsigned max_len, unsigned trials, std::uint64_t seed) {
    EnvelopeCheck rep;
    if (u.dim() == 0) return rep;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Var> letter(0, static_cast<Var>(u.dim() - 1));
    std::uniform_int_distribution<unsigned> length(2, std::max(2u, max_len));
    for (unsigned k = 0; k < trials; ++k) {
        Word w(length(rng));
        for (auto& x : w) x = letter(rng);
        ++rep.checked;
        if (u.normalize(w) != u.normalize(w, rng)) {
            rep.pass = false;
            rep.failure = "word of length " + std::to_string(w.size()) + " at trial " + std::to_string(k);
            break;
        }
    }
    return rep;
}

ZassenhausBound zassenhaus_bound(const Partition& lambda, Case c, std::uint64_t p) {
    if (c == Case::so) throw std::invalid_argument("zassenhaus_bound: so is not supported");
    if (!is_prime(p)) throw std::invalid_argument("zassenhaus_bound: p must be prime");
    Setting s(lambda, c, Field::rationals());
    ZassenhausBound out;
    out.dim = s.acting().size();
    out.index = index_report(s).stabiliser_dim;
    if (out.index > out.dim || (out.dim - out.index) % 2 != 0)
        throw NonIntegralExponent("zassenhaus_bound: dim " + std::to_string(out.dim) + ", index " +
                                  std::to_string(out.index));
    out.exponent = (out.dim - out.index) / 2;
    mpz_ui_pow_ui(out.bound.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(out.exponent));
    return out;
}

}  // namespace nilcent
