#include "nilcent/polyring.hpp"

#include <algorithm>
#include <stdexcept>

namespace nilcent {

Monomial Monomial::var(Var v, std::uint32_t e) {
    Monomial m;
    if (e > 0) {
        m.f_.push_back({v, e});
        m.deg_ = e;
    }
    return m;
}

Monomial Monomial::from_exponents(const std::vector<std::uint32_t>& exps) {
    Monomial m;
    for (std::size_t v = 0; v < exps.size(); ++v)
        if (exps[v] > 0) {
            m.f_.push_back({static_cast<Var>(v), exps[v]});
            m.deg_ += exps[v];
        }
    return m;
}

std::uint32_t Monomial::exponent(Var v) const {
    auto it = std::lower_bound(f_.begin(), f_.end(), std::make_pair(v, std::uint32_t{0}));
    return it != f_.end() && it->first == v ? it->second : 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    m.f_.reserve(a.f_.size() + b.f_.size());
    std::size_t x = 0, y = 0;
    while (x < a.f_.size() || y < b.f_.size()) {
        if (y == b.f_.size() || (x < a.f_.size() && a.f_[x].first < b.f_[y].first)) {
            m.f_.push_back(a.f_[x++]);
        } else if (x == a.f_.size() || b.f_[y].first < a.f_[x].first) {
            m.f_.push_back(b.f_[y++]);
        } else {
            m.f_.push_back({a.f_[x].first, a.f_[x].second + b.f_[y].second});
            ++x;
            ++y;
        }
    }
    m.deg_ = a.deg_ + b.deg_;
    return m;
}

bool operator<(const Monomial& a, const Monomial& b) {
    if (a.deg_ != b.deg_) return a.deg_ < b.deg_;
    const std::size_t n = std::min(a.f_.size(), b.f_.size());
    for (std::size_t k = 0; k < n; ++k) {
        if (a.f_[k].first != b.f_[k].first) return a.f_[k].first > b.f_[k].first;
        if (a.f_[k].second != b.f_[k].second) return a.f_[k].second < b.f_[k].second;
    }
    return false;  // equal degree and equal prefix means equal
}

Poly Poly::constant(Field f, const Scalar& c) {
    Poly p(f);
    p.add_term(Monomial(), c);
    return p;
}

Poly Poly::variable(Field f, Var v) {
    Poly p(f);
    p.add_term(Monomial::var(v), Scalar(f, 1));
    return p;
}

Poly Poly::term(const Scalar& c, const Monomial& m) {
    Poly p(c.field());
    p.add_term(m, c);
    return p;
}

Poly Poly::linear(const Vec& coef) {
    if (coef.empty()) throw std::invalid_argument("Poly::linear of an empty vector");
    Poly p(coef[0].field());
    for (std::size_t v = 0; v < coef.size(); ++v) p.add_term(Monomial::var(static_cast<Var>(v)), coef[v]);
    return p;
}

void Poly::check(const Poly& o) const {
    if (field_ != o.field_) throw FieldMismatch("polynomial field mismatch");
}

int Poly::degree() const { return t_.empty() ? -1 : static_cast<int>(t_.rbegin()->first.degree()); }

bool Poly::is_homogeneous() const {
    return t_.empty() || t_.begin()->first.degree() == t_.rbegin()->first.degree();
}

Poly Poly::homogeneous_part(std::uint32_t k) const {
    Poly p(field_);
    for (const auto& [m, c] : t_)
        if (m.degree() == k) p.t_.emplace_hint(p.t_.end(), m, c);
    return p;
}

Scalar Poly::coefficient(const Monomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? Scalar(field_, 0) : it->second;
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
    if (c.field() != field_) throw FieldMismatch("coefficient field mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = t_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& [m, c] : p.t_) c = -c;
    return p;
}

Poly& Poly::operator+=(const Poly& o) {
    check(o);
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check(o);
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto& [m, x] : t_) x *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check(b);
    Poly p(a.field_);
    for (const auto& [ma, ca] : a.t_)
        for (const auto& [mb, cb] : b.t_) p.add_term(ma * mb, ca * cb);
    return p;
}

Poly Poly::pow(unsigned e) const {
    Poly result = constant(field_, 1), base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

std::string Poly::to_string(const std::function<std::string(Var)>& name) const {
    if (t_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string coef = c.to_string();
        bool negative = field_.is_rational() && coef[0] == '-';
        if (negative) coef.erase(0, 1);
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        std::string body;
        for (const auto& [v, e] : m.factors()) {
            if (!body.empty()) body += "*";
            body += name(v);
            if (e > 1) body += "^" + std::to_string(e);
        }
        if (body.empty())
            out += coef;
        else if (coef == "1")
            out += body;
        else
            out += coef + "*" + body;
    }
    return out;
}

Scalar evaluate(const Poly& f, const Vec& point) {
    Scalar total(f.field(), 0);
    for (const auto& [m, c] : f.terms()) {
        Scalar t = c;
        for (const auto& [v, e] : m.factors()) {
            if (v >= point.size()) throw std::out_of_range("evaluate: point too short");
            t *= point[v].pow(e);
        }
        total += t;
    }
    return total;
}

Poly partial(const Poly& f, Var v) {
    Poly p(f.field());
    for (const auto& [m, c] : f.terms()) {
        std::uint32_t e = m.exponent(v);
        if (e == 0) continue;
        Monomial r;
        for (const auto& [w, k] : m.factors()) r = r * Monomial::var(w, w == v ? k - 1 : k);
        p.add_term(r, c * Scalar(f.field(), static_cast<std::int64_t>(e)));
    }
    return p;
}

Poly substitute(const Poly& f, const std::vector<Poly>& images) {
    Poly out(f.field());
    // powers of images, filled on demand
    std::map<std::pair<Var, std::uint32_t>, Poly> cache;
    auto power = [&](Var v, std::uint32_t e) -> const Poly& {
        auto key = std::make_pair(v, e);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        if (v >= images.size()) throw std::out_of_range("substitute: variable without an image");
        Poly p = e == 1 ? images[v] : images[v].pow(e);
        return cache.emplace(key, std::move(p)).first->second;
    };
    for (const auto& [m, c] : f.terms()) {
        Poly t = Poly::constant(f.field(), c);
        for (const auto& [v, e] : m.factors()) {
            t = t * power(v, e);
            if (t.is_zero()) break;
        }
        out += t;
    }
    return out;
}

Poly substitute_linear(const Poly& f, const std::vector<Poly>& images) {
    for (const auto& im : images)
        if (im.degree() > 1) throw std::invalid_argument("substitute_linear: image of degree > 1");
    return substitute(f, images);
}

Vec differential(const Poly& f, const Vec& point) {
    Vec d = zero_vec(f.field(), point.size());
    for (const auto& [m, c] : f.terms()) {
        for (const auto& [v, e] : m.factors()) {
            if (v >= point.size()) throw std::out_of_range("differential: point too short");
            Scalar t = c * Scalar(f.field(), static_cast<std::int64_t>(e));
            for (const auto& [w, k] : m.factors()) t *= point[w].pow(w == v ? k - 1 : k);
            d[v] += t;
        }
    }
    return d;
}

Poly derivation(const Poly& f, const std::vector<Poly>& images) {
    Poly out(f.field());
    for (const auto& [m, c] : f.terms()) {
        for (const auto& [v, e] : m.factors()) {
            if (v >= images.size()) throw std::out_of_range("derivation: variable without an image");
            if (images[v].is_zero()) continue;
            Monomial rest;
            for (const auto& [w, k] : m.factors()) rest = rest * Monomial::var(w, w == v ? k - 1 : k);
            out += Poly::term(c * Scalar(f.field(), static_cast<std::int64_t>(e)), rest) * images[v];
        }
    }
    return out;
}

std::size_t jacobian_rank(const std::vector<Poly>& fs, const Vec& point, const std::vector<Var>& subspace,
                          Exec exec) {
    if (fs.empty()) return 0;
    Field f = fs[0].field();
    std::vector<Var> cols = subspace;
    if (cols.empty())
        for (std::size_t v = 0; v < point.size(); ++v) cols.push_back(static_cast<Var>(v));
    Matrix m(f, fs.size(), cols.size());
    for (std::size_t r = 0; r < fs.size(); ++r) {
        Vec d = differential(fs[r], point);
        for (std::size_t k = 0; k < cols.size(); ++k) m(r, k) = d.at(cols[k]);
    }
    return rank(m, exec);
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t k) {
    std::vector<Monomial> out;
    std::vector<std::uint32_t> exps(nvars, 0);
    // enumerate exponent vectors in decreasing lex order, which is decreasing monomial order
    std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t v, std::uint32_t left) {
        if (v + 1 == nvars) {
            exps[v] = left;
            out.push_back(Monomial::from_exponents(exps));
            exps[v] = 0;
            return;
        }
        for (std::uint32_t e = left + 1; e-- > 0;) {
            exps[v] = e;
            rec(v + 1, left - e);
        }
        exps[v] = 0;
    };
    if (nvars == 0) {
        if (k == 0) out.push_back(Monomial());
        return out;
    }
    rec(0, k);
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace nilcent
