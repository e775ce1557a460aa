#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nilcent/coadjoint.hpp"
#include "nilcent/enveloping.hpp"
#include "nilcent/invariants.hpp"

namespace nilcent::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct JobConfig {
    std::string command;
    std::string lambda;
    std::string kase = "gl";
    std::string field = "q";
    int r = 0;  // 0: all
    unsigned degree_cap = 0;  // 0: command default
    std::string suite = "all";
    std::string check = "all";
    std::string out;
    std::uint64_t seed = 1;
};

class Report {
public:
    void add(std::string name, std::string anchor, json expected, json actual, bool pass) {
        checks_.push_back({{"name", std::move(name)},
                           {"anchor", std::move(anchor)},
                           {"expected", std::move(expected)},
                           {"actual", std::move(actual)},
                           {"pass", pass}});
        pass_ = pass_ && pass;
    }
    void add_equal(std::string name, std::string anchor, const json& expected, const json& actual) {
        add(std::move(name), std::move(anchor), expected, actual, expected == actual);
    }
    bool pass() const { return pass_; }
    json& result() { return result_; }
    const json& checks() const { return checks_; }
    const json& result() const { return result_; }

private:
    json checks_ = json::array();
    json result_ = json::object();
    bool pass_ = true;
};

json poly_json(const Poly& p, const std::function<std::string(Var)>& name) {
    json terms = json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        json factors = json::array();
        for (const auto& [v, e] : it->first.factors()) factors.push_back({name(v), e});
        terms.push_back({{"coefficient", it->second.to_string()}, {"factors", factors}});
    }
    return {{"text", p.to_string(name)}, {"terms", terms}};
}

json int_matrix(const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(std::stoll(m(r, c).to_string()));
        rows.push_back(row);
    }
    return rows;
}

Vec unit(Field f, std::size_t n, std::size_t k) {
    Vec v = zero_vec(f, n);
    v[k] = Scalar(f, 1);
    return v;
}

std::string element_names(const std::vector<Form::Element>& family, Var v, const char* prefix) {
    return std::string(prefix) + "[" + family[v].label.to_string() + "]";
}

// Which r to report on: --r if given, else 1..N.
std::vector<int> selected_rs(const JobConfig& cfg, const Partition& lam) {
    if (cfg.r != 0) {
        if (cfg.r < 1 || cfg.r > lam.N()) throw UsageError("--r must lie in 1.." + std::to_string(lam.N()));
        return {cfg.r};
    }
    std::vector<int> rs;
    for (int r = 1; r <= lam.N(); ++r) rs.push_back(r);
    return rs;
}

std::uint64_t need_prime(const Setting& s, const std::string& what) {
    if (s.field().is_rational()) throw UsageError(what + " needs --field fp:<p>");
    return s.field().characteristic();
}

// ---- basis ----

void cmd_basis(const Setting& s, Report& rep) {
    const Centralizer& g = s.g();
    const auto& lam = g.partition();
    json basis = json::array();
    for (std::size_t a = 0; a < g.dim(); ++a) {
        const auto& b = g.basis()[a];
        basis.push_back({{"i", b.i}, {"j", b.j}, {"s", b.s}, {"name", g.name(a)}});
    }
    auto& res = rep.result();
    res["dim"] = g.dim();
    res["basis"] = basis;
    res["e"] = int_matrix(g.e_matrix(Field::rationals()));
    if (s.kind() != Case::gl) {
        json inv = json::array();
        for (int i = 1; i <= static_cast<int>(lam.n()); ++i) inv.push_back(s.form().prime(i));
        res["involution"] = inv;
        Form fq(g, s.kind());
        res["gram"] = int_matrix(fq.gram(Field::rationals()));
        res["acting"] = s.acting_names();
        res["module"] = s.module_names();
    }
    std::size_t expected = 0;
    for (std::size_t i = 1; i <= lam.n(); ++i)
        for (std::size_t j = 1; j <= lam.n(); ++j) expected += static_cast<std::size_t>(std::min(lam[i], lam[j]));
    rep.add_equal("dimension", "dim g_e is the sum of min(lambda_i, lambda_j)", expected, g.dim());
}

// ---- invariants ----

void cmd_invariants(const JobConfig& cfg, const Setting& s, Report& rep) {
    const Centralizer& g = s.g();
    const auto& lam = g.partition();
    auto xs = elementary_invariants(g, s.field());
    auto degs = degree_sequence(lam);
    auto gname = [&](Var v) { return g.name(v); };
    auto& res = rep.result();
    res["degrees"] = degs;
    res["generators"] = generator_indices(lam, s.kind());
    json list = json::array();
    for (int r : selected_rs(cfg, lam)) {
        const Poly& x = xs[static_cast<std::size_t>(r - 1)];
        json entry = {{"r", r}, {"degree", degs[static_cast<std::size_t>(r - 1)]}};
        entry["polynomial"] = poly_json(x, gname);
        if (s.kind() != Case::gl) {
            const Form& form = s.form();
            Poly k = restrict_to(form, x, Target::k, s.field());
            Poly p = restrict_to(form, x, Target::p, s.field());
            entry["restriction_k"] = poly_json(k, [&](Var v) { return element_names(form.zeta(), v, "zeta"); });
            entry["restriction_p"] = poly_json(p, [&](Var v) { return element_names(form.eta(), v, "eta"); });
        }
        list.push_back(entry);
        bool homogeneous = x.is_homogeneous() && x.degree() == degs[static_cast<std::size_t>(r - 1)];
        rep.add("homogeneous r=" + std::to_string(r), "x_r is homogeneous of degree d_r",
                degs[static_cast<std::size_t>(r - 1)], x.degree(), homogeneous);
    }
    res["invariants"] = list;
}

// ---- verify suites ----

void suite_invariance(const Setting& s, Report& rep) {
    const Centralizer& g = s.g();
    auto xs = elementary_invariants(g, s.field());
    auto inv = verify_ad_invariance(g, xs, s.field());
    json actual = "none";
    if (!inv.pass) actual = "xi = " + g.name(*inv.xi) + ", r = " + std::to_string(*inv.r);
    rep.add("ad_invariance", "ad(xi) x_r = 0 for every basis xi and every r", "none", actual, inv.pass);

    std::size_t failures = 0, checked = 0;
    for (std::size_t a = 0; a < g.dim(); ++a) {
        const auto& b = g.basis()[a];
        if (b.i == b.j && b.s == 0) continue;
        for (const auto& x : xs) {
            ++checked;
            if (!group_invariant(g, x, a)) ++failures;
        }
    }
    rep.add_equal("group_invariance", "x_r(Ad^*(1 + t xi) gamma) = x_r(gamma) as a polynomial in t", 0, failures);
    rep.result()["group_checks"] = checked;

    if (s.kind() != Case::gl) {
        std::size_t bad = 0;
        auto gens = module_generators(s);
        for (const auto& x : s.acting())
            for (const auto& gen : gens)
                if (!ad_derivation(s, x, gen).is_zero()) ++bad;
        rep.add_equal("module_invariance", "the restricted generators are invariant under the acting algebra", 0, bad);
    }
}

void suite_parity(const Setting& s, Report& rep) {
    auto xs = elementary_invariants(s.g(), s.field());
    for (std::size_t k = 0; k < xs.size(); ++k) {
        int r = static_cast<int>(k + 1);
        Poly sx = sigma_poly(s.form(), xs[k]);
        Poly expected = r % 2 == 0 ? xs[k] : -xs[k];
        rep.add("sigma_parity r=" + std::to_string(r), "sigma(x_r) = (-1)^r x_r", r % 2 == 0 ? "x_r" : "-x_r",
                sx == expected ? (r % 2 == 0 ? "x_r" : "-x_r") : "other", sx == expected);
    }
}

void suite_restriction(const Setting& s, Report& rep) {
    const Form& form = s.form();
    const auto& lam = s.g().partition();
    auto xs = elementary_invariants(s.g(), s.field());
    auto degs = degree_sequence(lam);
    for (Target t : {Target::k, Target::p}) {
        const std::string tn = t == Target::k ? "k" : "p";
        std::vector<Poly> survivors;
        for (std::size_t k = 0; k < xs.size(); ++k) {
            int r = static_cast<int>(k + 1);
            bool vanish = t == Target::k ? r % 2 != 0 : (r + degs[k]) % 2 != 0;
            Poly res = restrict_to(form, xs[k], t, s.field());
            if (!vanish) survivors.push_back(res);
            rep.add("restriction r=" + std::to_string(r) + " to " + tn,
                    t == Target::k ? "x_r vanishes on k_e^* exactly for odd r"
                                   : "x_r vanishes on p_e^* exactly for odd r + d_r",
                    vanish ? "zero" : "nonzero", res.is_zero() ? "zero" : "nonzero", vanish == res.is_zero());
        }
        bool distinct = true;
        for (std::size_t a = 0; a < survivors.size(); ++a)
            for (std::size_t b = a + 1; b < survivors.size(); ++b)
                if (survivors[a] == survivors[b]) distinct = false;
        rep.add("distinct restrictions to " + tn, "the surviving restrictions are pairwise distinct", true, distinct,
                distinct);
    }
}

void suite_counting(const Setting& s, Report& rep) {
    const auto& lam = s.g().partition();
    int expected = 0;
    switch (s.kind()) {
        case Case::gl: expected = lam.N(); break;
        case Case::sp: expected = lam.N() / 2; break;
        case Case::so: expected = (lam.N() + lam.odd_parts()) / 2; break;
    }
    rep.add_equal("generator_count", "number of surviving x_r equals the closed form", expected,
                  generator_indices(lam, s.kind()).size());
}

void suite_stabiliser(const Setting& s, Report& rep) {
    auto idx = index_report(s);
    rep.add("stabiliser_dimension", "dim of the stabiliser of alpha equals the index", idx.closed_form,
            idx.stabiliser_dim, idx.pass);
    DualPoint alpha = special_point(s, PointKind::alpha);
    rep.add("alpha_in_module_dual", "alpha lies in the dual of the module", true, in_module_dual(s, alpha),
            in_module_dual(s, alpha));
    auto dom = dominance_span_check(s);
    rep.add("dominance_span", "coad(-, alpha) spans every off-diagonal dual direction", json::array(),
            dom.missing, dom.pass);
    rep.result()["index"] = idx.closed_form;
}

void suite_jacobian(const Setting& s, Report& rep) {
    for (const auto& row : jacobian_probe(s))
        rep.add("jacobian at " + row.point, "generator differentials have full rank", row.expected, row.rank,
                row.pass);
}

void suite_graded(const JobConfig& cfg, const Setting& s, Report& rep) {
    std::uint64_t p = need_prime(s, "the graded suite");
    unsigned dmax = cfg.degree_cap ? cfg.degree_cap : static_cast<unsigned>(std::max<std::uint64_t>(6, p + 1));
    for (const auto& row : graded_invariant_dims(s, dmax))
        rep.add("graded degree " + std::to_string(row.degree),
                "invariants agree with the algebra of p-th powers and generators", row.invariant, row.generated,
                row.invariant == row.generated);
}

void suite_oracles(const Setting& s, Report& rep) {
    const Centralizer& g = s.g();
    const Field f = s.field();
    const std::size_t n = g.dim();
    std::vector<Matrix> mats;
    for (std::size_t a = 0; a < n; ++a) mats.push_back(g.as_matrix(a, f));

    std::size_t bad = 0;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (!(g.as_matrix(to_vec(g.bracket(a, b), f, n)) == mats[a] * mats[b] - mats[b] * mats[a])) ++bad;
    rep.add_equal("bracket_vs_commutator", "structure constants agree with the matrix commutator", 0, bad);

    bad = 0;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t k = 0; k < n; ++k) {
            Vec gamma = unit(f, n, k);
            if (coad(g, unit(f, n, a), gamma) != coad_dual_formula(g, a, gamma)) ++bad;
        }
    rep.add_equal("coadjoint_formula", "closed-form coadjoint action on dual basis vectors agrees with the pairing",
                  0, bad);

    auto coeffs = alpha_coefficients(g.partition(), s.kind(), f);
    DualPoint alpha = special_point(s, PointKind::alpha);
    bad = 0;
    for (std::size_t a = 0; a < n; ++a)
        if (coad(g, unit(f, n, a), alpha) != coad_alpha_closed_form(g, a, coeffs)) ++bad;
    rep.add_equal("coadjoint_alpha", "closed-form coad(xi, alpha) agrees with the pairing", 0, bad);

    if (s.kind() == Case::gl) return;
    const Form& form = s.form();
    bad = 0;
    for (std::size_t a = 0; a < n; ++a)
        if (!(g.as_matrix(form.sigma(unit(f, n, a))) == form.sigma_matrix(mats[a]))) ++bad;
    rep.add_equal("sigma_vs_matrix", "sigma on labels agrees with -J^{-1} X^T J", 0, bad);

    bad = 0;
    for (std::size_t a = 0; a < n; ++a) {
        auto L = form.label(a);
        DualPoint z = zeta_dual(form, L.i, L.j, L.s, f);
        if (is_zero(z)) continue;
        if (coad(g, z, alpha) != coad_alpha_zeta_closed_form(s, L.i, L.j, L.s, coeffs)) ++bad;
    }
    rep.add_equal("coadjoint_alpha_zeta", "closed-form coad(zeta, alpha) agrees with the pairing", 0, bad);
}

const std::vector<std::string> kSuites = {"invariance", "parity",   "restriction", "counting",
                                          "stabiliser", "jacobian", "graded",      "oracles"};

void cmd_verify(const JobConfig& cfg, const Setting& s, Report& rep) {
    const bool all = cfg.suite == "all";
    const bool typed = s.kind() != Case::gl;
    auto want = [&](const std::string& name) { return all || cfg.suite == name; };
    if (!all && std::find(kSuites.begin(), kSuites.end(), cfg.suite) == kSuites.end())
        throw UsageError("unknown suite: " + cfg.suite);
    if (!all && !typed && (cfg.suite == "parity" || cfg.suite == "restriction"))
        throw UsageError("suite " + cfg.suite + " needs --case sp or so");

    json ran = json::array();
    auto go = [&](const std::string& name, const std::function<void()>& fn) {
        if (!want(name)) return;
        ran.push_back(name);
        fn();
    };
    go("invariance", [&] { suite_invariance(s, rep); });
    if (typed) {
        go("parity", [&] { suite_parity(s, rep); });
        go("restriction", [&] { suite_restriction(s, rep); });
    }
    go("counting", [&] { suite_counting(s, rep); });
    go("stabiliser", [&] { suite_stabiliser(s, rep); });
    go("jacobian", [&] { suite_jacobian(s, rep); });
    // Expensive: only on request.
    if (cfg.suite == "graded") go("graded", [&] { suite_graded(cfg, s, rep); });
    go("oracles", [&] { suite_oracles(s, rep); });
    rep.result()["suites"] = ran;
}

// ---- index ----

void cmd_index(const Setting& s, Report& rep) {
    auto idx = index_report(s);
    rep.result()["stabiliser_dim"] = idx.stabiliser_dim;
    rep.result()["index"] = idx.closed_form;
    rep.add("index", "dim of the stabiliser of alpha equals the closed-form index", idx.closed_form,
            idx.stabiliser_dim, idx.pass);
}

// ---- envelope ----

std::size_t bell(unsigned m) {
    // Bell triangle
    std::vector<std::size_t> row{1};
    for (unsigned k = 0; k < m; ++k) {
        std::vector<std::size_t> next{row.back()};
        for (std::size_t x : row) next.push_back(next.back() + x);
        row = next;
    }
    return row.front();
}

void record(Report& rep, const std::string& name, const std::string& anchor, const EnvelopeCheck& c) {
    rep.add(name, anchor, "pass", c.pass ? json("pass") : json(c.failure), c.pass);
}

void cmd_envelope(const JobConfig& cfg, const Setting& s, Report& rep) {
    const std::vector<std::string> checks = {"milner", "grbeta", "pcentre", "bound"};
    const bool all = cfg.check == "all";
    if (!all && std::find(checks.begin(), checks.end(), cfg.check) == checks.end())
        throw UsageError("unknown check: " + cfg.check);
    const unsigned cap = cfg.degree_cap ? cfg.degree_cap : 3;
    auto want = [&](const std::string& name) { return all || cfg.check == name; };
    json ran = json::array();

    if (want("milner")) {
        ran.push_back("milner");
        Enveloping u(s, cap);
        record(rep, "mu_leading_term", "mu(v_1...v_m) = mu(v_1)...mu(v_m) modulo fewer factors", verify_mu_leading(u));
        for (unsigned m = 1; m <= cap && u.dim() > 0; ++m) {
            // Coefficients add up to Bell(m) even when repeated factors merge terms.
            Scalar total(u.field(), 0);
            Monomial mono;
            for (unsigned k = 0; k < m; ++k) mono = mono * Monomial::var(static_cast<Var>(k % u.dim()));
            const SymUElement mu = milner_mu(UElement{Poly::term(Scalar(u.field(), 1), mono), cap});
            for (const auto& [key, c] : mu.terms) total += c;
            rep.add_equal("mu_term_count m=" + std::to_string(m), "mu sums over the Bell(m) set partitions",
                          Scalar(u.field(), static_cast<std::int64_t>(bell(m))).to_string(), total.to_string());
        }
    }
    if (want("grbeta")) {
        ran.push_back("grbeta");
        Enveloping u(s, cap);
        record(rep, "pbw_confluence", "normal form is independent of the rewriting order",
               verify_confluence(u, std::min(cap, 4u), 200, cfg.seed));
        record(rep, "gr_beta", "the top-degree part of beta(u) is the symbol of u", verify_gr_beta(u));
        record(rep, "beta_bijective", "beta is bijective on every filtration level", verify_beta_bijective(u));
        record(rep, "pi_equivariance", "pi(ad x . u) = [x, pi(u)]", verify_pi_equivariance(u));
        record(rep, "beta_equivariance", "beta(ad x . u) = ad x . beta(u)", verify_beta_equivariance(u));
        if (s.kind() == Case::gl)
            record(rep, "beta_group_equivariance", "beta(Ad(1 + t xi) u) = Ad(1 + t xi) beta(u)",
                   verify_beta_group(u));
    }
    if (want("pcentre") && !(all && s.field().is_rational())) {
        ran.push_back("pcentre");
        std::uint64_t p = need_prime(s, "the pcentre check");
        Enveloping u(s, static_cast<unsigned>(p + 1));
        for (Var v = 0; v < u.dim(); ++v) {
            auto c = verify_central(u, p_centre_generator(u, v));
            rep.add("central " + u.name(v), "v^p - v^[p] commutes with every generator", "none",
                    c.pass ? json("none") : json(u.name(*c.failing)), c.pass);
        }
    }
    if (want("bound") && !(all && (s.field().is_rational() || s.kind() == Case::so))) {
        ran.push_back("bound");
        std::uint64_t p = need_prime(s, "the bound check");
        if (s.kind() == Case::so) throw UsageError("the bound check supports gl and sp only");
        auto z = zassenhaus_bound(s.g().partition(), s.kind(), p);
        rep.result()["bound"] = {{"dim", z.dim}, {"index", z.index}, {"exponent", z.exponent},
                                 {"value", z.bound.get_str()}};
        rep.add_equal("bound_exponent", "dim - index = 2 * exponent", z.dim - z.index, 2 * z.exponent);
    }
    rep.result()["checks_run"] = ran;
}

json job_echo(const JobConfig& cfg) {
    json j = {{"command", cfg.command}, {"lambda", cfg.lambda}, {"case", cfg.kase}, {"field", cfg.field}};
    if (cfg.r) j["r"] = cfg.r;
    if (cfg.degree_cap) j["degree_cap"] = cfg.degree_cap;
    if (cfg.command == "verify") j["suite"] = cfg.suite;
    if (cfg.command == "envelope") j["check"] = cfg.check;
    j["seed"] = cfg.seed;
    return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    JobConfig cfg;
    CLI::App app{"Invariants of nilpotent centralisers: construction and verification"};
    app.require_subcommand(1);
    auto common = [&](CLI::App* sub) {
        sub->add_option("--lambda", cfg.lambda, "Jordan type, e.g. 3,2,1")->required();
        sub->add_option("--case", cfg.kase, "gl, sp or so");
        sub->add_option("--field", cfg.field, "q or fp:<prime>");
        sub->add_option("--r", cfg.r, "restrict to one x_r");
        sub->add_option("--degree-cap", cfg.degree_cap, "degree bound");
        sub->add_option("--out", cfg.out, "write the JSON report here");
        sub->add_option("--seed", cfg.seed, "seed for randomised checks");
    };
    common(app.add_subcommand("basis", "basis, bracket data and form of g_e"));
    common(app.add_subcommand("invariants", "the invariants x_r (restricted generators for sp/so)"));
    common(app.add_subcommand("index", "stabiliser dimension at alpha against the index"));
    auto* verify = app.add_subcommand("verify", "run verification suites");
    common(verify);
    verify->add_option("--suite", cfg.suite, "invariance|parity|restriction|counting|stabiliser|jacobian|graded|oracles|all");
    auto* envelope = app.add_subcommand("envelope", "enveloping algebra checks");
    common(envelope);
    envelope->add_option("--check", cfg.check, "milner|pcentre|grbeta|bound|all");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage: " << e.what() << "\n";
        return 2;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    auto start = std::chrono::steady_clock::now();
    Report rep;
    try {
        Partition lam = Partition::parse(cfg.lambda);
        Case c = parse_case(cfg.kase);
        Field f = Field::parse(cfg.field);
        check_case(lam, c);
        Setting s(lam, c, f);
        if (cfg.command == "basis") cmd_basis(s, rep);
        else if (cfg.command == "invariants") cmd_invariants(cfg, s, rep);
        else if (cfg.command == "verify") cmd_verify(cfg, s, rep);
        else if (cfg.command == "index") cmd_index(s, rep);
        else cmd_envelope(cfg, s, rep);
    } catch (const UsageError& e) {
        err << "usage: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "usage: " << e.what() << "\n";
        return 2;
    } catch (const FieldTooSmall& e) {
        err << "usage: " << e.what() << "\n";
        return 2;
    } catch (const CapExceeded& e) {
        err << "usage: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    json report = {{"schema", kSchema},
                   {"job", job_echo(cfg)},
                   {"result", rep.result()},
                   {"checks", rep.checks()},
                   {"pass", rep.pass()},
                   {"timing", {{"seconds", seconds}}}};
    if (cfg.out.empty()) {
        out << report.dump(2) << "\n";
    } else {
        std::ofstream file(cfg.out);
        if (!file) {
            err << "usage: cannot write " << cfg.out << "\n";
            return 2;
        }
        file << report.dump(2) << "\n";
        out << (rep.pass() ? "pass" : "FAIL") << ": " << rep.checks().size() << " checks, report in " << cfg.out
            << "\n";
    }
    return rep.pass() ? 0 : 1;
}

}  // namespace nilcent::cli
