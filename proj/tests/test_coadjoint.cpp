#include <doctest.h>

#include <set>

#include "common.hpp"
#include "nilcent/coadjoint.hpp"
#include "nilcent/invariants.hpp"
#include "oracles.hpp"

using namespace nilcent;
using testutil::unit;

namespace {

// gamma([y, x]) for every basis y, from explicit matrices.
DualPoint pairing(const Partition& lam, const Vec& x, const DualPoint& gamma) {
    const Field f = gamma.front().field();
    auto b = oracle::basis(lam);
    const std::size_t d = b.size();
    DualPoint out = zero_vec(f, d);
    for (std::size_t a = 0; a < d; ++a)
        if (!x[a].is_zero())
            for (std::size_t y = 0; y < d; ++y) {
                auto mx = oracle::shift_map(lam, b[a][0], b[a][1], b[a][2]);
                auto my = oracle::shift_map(lam, b[y][0], b[y][1], b[y][2]);
                auto c = oracle::coords(lam, b, oracle::sub(oracle::mul(my, mx), oracle::mul(mx, my)));
                Scalar v(f, 0);
                for (std::size_t k = 0; k < d; ++k)
                    if (c[k]) v += Scalar(f, c[k]) * gamma[k];
                out[y] += x[a] * v;
            }
    return out;
}

}  // namespace

TEST_CASE("coadjoint action against the pairing") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& lam : partitions_of(n)) {
            Centralizer g(lam);
            Field f = Field::prime(7);
            const std::size_t d = g.dim();
            for (std::size_t a = 0; a < d; ++a)
                for (std::size_t k = 0; k < d; ++k) {
                    DualPoint gamma = unit(f, d, k);
                    DualPoint want = pairing(lam, unit(f, d, a), gamma);
                    CHECK(coad(g, unit(f, d, a), gamma) == want);
                    CHECK(coad_dual_formula(g, a, gamma) == want);
                }
        }
}

TEST_CASE("alpha coefficients") {
    Field q = Field::rationals();
    auto a = alpha_coefficients(Partition::parse("3,2,1"), Case::gl, q);
    CHECK(a == std::vector<Scalar>{Scalar(q, 1), Scalar(q, 2), Scalar(q, 3)});
    CHECK_THROWS_AS(alpha_coefficients(Partition::parse("1,1,1"), Case::gl, Field::prime(3)), FieldTooSmall);
    CHECK_NOTHROW(alpha_coefficients(Partition::parse("1,1"), Case::gl, Field::prime(3)));
    for (const auto& [lam, c] : testutil::settings_up_to(8)) {
        auto co = alpha_coefficients(lam, c, q);
        const int n = static_cast<int>(lam.n());
        std::set<std::string> seen, weighted;
        for (int i = 1; i <= n; ++i) {
            const Scalar& ai = co[static_cast<std::size_t>(i - 1)];
            CHECK_FALSE(ai.is_zero());
            seen.insert(ai.to_string());
            if (c == Case::gl) continue;
            int ip = involution(lam, c)(i);
            if (ip != i) CHECK(co[static_cast<std::size_t>(ip - 1)] == -ai);
            weighted.insert((Scalar(q, ip == i ? 1 : 2) * ai).to_string());
        }
        CHECK(seen.size() == static_cast<std::size_t>(n));
        if (c != Case::gl) CHECK(weighted.size() == static_cast<std::size_t>(n));
    }
}

TEST_CASE("closed-form coadjoint action at alpha") {
    for (const auto& [lam, c] : testutil::settings_up_to(7)) {
        Field q = Field::rationals();
        Setting s(lam, c, q);
        const Centralizer& g = s.g();
        auto co = alpha_coefficients(lam, c, q);
        DualPoint alpha = special_point(s, PointKind::alpha);
        for (std::size_t a = 0; a < g.dim(); ++a)
            CHECK(coad(g, unit(q, g.dim(), a), alpha) == coad_alpha_closed_form(g, a, co));
        if (c == Case::gl) continue;
        const Form& form = s.form();
        for (std::size_t a = 0; a < g.dim(); ++a) {
            auto L = form.label(a);
            DualPoint z = zeta_dual(form, L.i, L.j, L.s, q);
            if (is_zero(z)) continue;
            CHECK(coad(g, z, alpha) == coad_alpha_zeta_closed_form(s, L.i, L.j, L.s, co));
        }
    }
}

TEST_CASE("coad(xi_2^{1,1}, alpha) for lambda = (2,1)") {
    Field q = Field::rationals();
    Setting s(Partition::parse("2,1"), Case::gl, q);
    const Centralizer& g = s.g();
    auto co = alpha_coefficients(g.partition(), Case::gl, q);
    DualPoint got = coad(g, unit(q, g.dim(), *g.find(2, 1, 1)), special_point(s, PointKind::alpha));
    DualPoint want = zero_vec(q, g.dim());
    want[*g.find(1, 2, 0)] = -co[0];
    CHECK(got == want);
}

TEST_CASE("l_i weighting overcounts paired blocks") {
    // sp, lambda = (1,1): the blocks are paired, zeta_1^{2,0} = 2 xi_1^{2,0}.
    Field q = Field::rationals();
    Setting s(Partition::parse("1,1"), Case::sp, q);
    const Form& form = s.form();
    const Centralizer& g = s.g();
    auto co = alpha_coefficients(g.partition(), Case::sp, q);
    DualPoint z = zeta_dual(form, 1, 2, 0, q);
    DualPoint got = coad(g, z, special_point(s, PointKind::alpha));
    DualPoint want = zero_vec(q, g.dim());
    want[*g.find(2, 1, 0)] = Scalar(q, 4);
    CHECK(got == want);
    CHECK(coad_alpha_zeta_closed_form(s, 1, 2, 0, co) == want);
}

TEST_CASE("special points and their expansions") {
    for (const auto& [lam, c] : testutil::settings_up_to(7, false)) {
        Setting s(lam, c, Field::rationals());
        CHECK(alpha_from_expansion(s) == special_point(s, PointKind::alpha));
        CHECK(betabar_from_expansion(s) == special_point(s, PointKind::betabar));
        CHECK(in_module_dual(s, special_point(s, PointKind::alpha)));
        CHECK(in_module_dual(s, special_point(s, PointKind::betabar)));
    }
    Setting s(Partition::parse("3,2"), Case::gl, Field::rationals());
    CHECK(in_module_dual(s, special_point(s, PointKind::beta)));
    DualPoint b = special_point(s, PointKind::beta);
    CHECK(b[*s.g().find(1, 2, 1)] == Scalar(Field::rationals(), 1));
}

TEST_CASE("rho scales by t^{i-j+1}") {
    Field q = Field::rationals();
    Centralizer g(Partition::parse("2,1"));
    DualPoint gamma = zero_vec(q, g.dim());
    for (std::size_t a = 0; a < g.dim(); ++a) gamma[a] = Scalar(q, 1);
    DualPoint r = rho_action(g, Scalar(q, 2), gamma);
    for (std::size_t a = 0; a < g.dim(); ++a) {
        const auto& b = g.basis()[a];
        CHECK(r[a] == Scalar(q, 2).pow(b.i - b.j + 1));
    }
}

TEST_CASE("index and stabilisers") {
    CHECK(index_closed_form(Partition::parse("3,1"), Case::so) == 1);
    CHECK(index_closed_form(Partition::parse("2,2"), Case::sp) == 2);
    CHECK(index_closed_form(Partition::parse("3,2"), Case::gl) == 5);
    for (const auto& [lam, c] : testutil::settings_up_to(6)) {
        Setting s(lam, c, Field::rationals());
        auto rep = index_report(s);
        CHECK(rep.pass);
        CHECK(dominance_span_check(s).pass);
        // the stabiliser of alpha really fixes alpha
        DualPoint alpha = special_point(s, PointKind::alpha);
        for (const auto& k : stabiliser(s, alpha).kernel) {
            Vec x = zero_vec(s.field(), s.g().dim());
            for (std::size_t a = 0; a < k.size(); ++a)
                for (std::size_t t = 0; t < x.size(); ++t) x[t] += k[a] * s.acting()[a][t];
            CHECK(is_zero(coad(s.g(), x, alpha)));
        }
    }
}

TEST_CASE("jacobian probes have full rank") {
    for (const auto& [lam, c] : testutil::settings_up_to(5)) {
        Setting s(lam, c, Field::rationals());
        for (const auto& row : jacobian_probe(s)) CHECK_MESSAGE(row.pass, lam.to_string(), " ", case_name(c), " ", row.point);
        auto serial = jacobian_probe(s, Exec::serial);
        CHECK(serial.size() == 3);
    }
}

TEST_CASE("differentials at beta") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& lam : partitions_of(n)) {
            Centralizer g(lam);
            auto xs = elementary_invariants(g, Field::rationals());
            CHECK(beta_differential_check(g, xs, Field::rationals()));
        }
}
