#include <cmath>
#include <complex>
#include <random>

#include <doctest.h>

#include "formulas.hpp"
#include "quadrature.hpp"
#include "zeta.hpp"

using namespace zetalab;

namespace {

constexpr double kPi = 3.141592653589793238462643;
constexpr double kLog2Pi = 1.837877066409345483560659;

const ZeroTable& ten_zeros() {
    static const ZeroTable t = [] {
        ZeroTable z = ZeroTable::scan(10, 1e-10);
        z.ensure_zeta_prime();
        return z;
    }();
    return t;
}

FormulaParams popov_params() {
    FormulaParams p;
    p.identity = Identity::popov_eq11;
    p.weight = Weight::lambda;
    p.r = 1;
    p.x = 10.5;
    return p;
}

} // namespace

TEST_SUITE_BEGIN("formulas");

TEST_CASE("frac weight") {
    CHECK(frac_weight(2.5) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(frac_weight(3.0) == 0.0);
    CHECK(frac_weight(11.0 / 10.5) == doctest::Approx(0.0453515).epsilon(1e-5));
    CHECK_THROWS_AS(frac_weight(0.0), Error);
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(1e-6, 100.0);
    for (int i = 0; i < 2000; ++i) {
        double w = frac_weight(dist(rng));
        REQUIRE(w >= 0.0);
        REQUIRE(w <= 0.25);
    }
}

TEST_CASE("lhs series") {
    auto tmu = ArithTable::build(Weight::mu, 64);
    FormulaParams p;
    p.identity = Identity::mobius_thm21;
    p.weight = Weight::mu;
    p.x = 10.5;
    p.n_terms = 11;
    // single term n = 11: (1/2) mu(11) w(11/10.5) / 11^2, computed directly
    double f = 11.0 / 10.5 - 1.0;
    double want = 0.5 * (-1.0) * (f - f * f) / 121.0;
    auto bd = lhs_series(p, tmu);
    CHECK(bd.value == doctest::Approx(want).epsilon(1e-12));
    CHECK(bd.value == doctest::Approx(-1.874e-4).epsilon(1e-3));
    CHECK(bd.components.at("partial_sum") == bd.value);

    // a stretch with no prime powers contributes nothing
    auto tl = ArithTable::build(Weight::lambda, 15);
    FormulaParams q;
    q.identity = Identity::theorem1;
    q.x = 13.2;
    q.n_terms = 15;
    CHECK(lhs_series(q, tl).value == 0.0);

    q.n_terms = 100;
    CHECK_THROWS_AS(lhs_series(q, tl), Error); // table too small
    FormulaParams bad = popov_params();
    bad.n_terms = 15;
    CHECK_THROWS_AS(lhs_series(bad, tmu), Error); // kind mismatch
}

TEST_CASE("published constant term") {
    CHECK(h_r_paper(1, 10.5) == doctest::Approx((2.0 - kLog2Pi) / 21.0).epsilon(1e-15));
    CHECK(h_r_paper(1, 10.5) == doctest::Approx(0.0077201).epsilon(1e-4));
    CHECK(h_r_paper(3, 2.0) == doctest::Approx(0.03125).epsilon(1e-10)); // zeta(-2) = 0
    CHECK_THROWS_AS(h_r_paper(2, 10.5), Error);
    try {
        h_r_paper(2, 10.5);
    } catch (const Error& e) {
        CHECK(e.code() == Status::degenerate_case);
    }
}

TEST_CASE("integrand recomposition and symmetry") {
    Precision cfg;
    Complex s(3.0, 0.0);
    Complex got = integrand(Weight::lambda, 1, 10.5, s, cfg);
    // product of independently evaluated factors
    Complex g = (2.0 - s) / (2.0 * s * (s - 1.0)) - zeta(1.0 - s, cfg) / (1.0 - s);
    Complex want = g * std::exp((s - 2.0) * std::log(10.5)) * zeta_prime(s, cfg) / zeta(s, cfg) / (2.0 - s);
    CHECK(std::abs(got - want) <= 1e-12);

    // finite and smooth on a circle around the r=1 double-pole location
    for (int j = 0; j < 16; ++j) {
        double th = 2.0 * kPi * j / 16.0;
        Complex z = integrand(Weight::lambda, 1, 10.5, Complex(1.0 + 0.3 * std::cos(th), 0.3 * std::sin(th)), cfg);
        REQUIRE(std::isfinite(z.real()));
        REQUIRE(std::isfinite(z.imag()));
    }

    Complex a = integrand(Weight::lambda, 1, 10.5, {1.4, 2.0}, cfg);
    Complex b = integrand(Weight::lambda, 1, 10.5, {1.4, -2.0}, cfg);
    CHECK(std::abs(a - std::conj(b)) <= 1e-14);

    Complex m = integrand(Weight::mu, 1, 10.5, s, cfg);
    Complex mwant = g * std::exp((s - 2.0) * std::log(10.5)) * (-1.0 / zeta(s, cfg)) / (2.0 - s);
    CHECK(std::abs(m - mwant) <= 1e-14);
}

TEST_CASE("residue oracle basics") {
    auto inv_s = [](Complex s) { return 1.0 / s; };
    CHECK(std::abs(residue_via_circle(inv_s, {0, 0}, 0.5, 256).real() - 1.0) <= 1e-12);
    Precision cfg;
    auto zf = [&](Complex s) { return zeta(s, cfg); };
    CHECK(std::abs(residue_via_circle(zf, {1, 0}, 0.3, 256) - Complex(1.0, 0.0)) <= 1e-10);
    CHECK_THROWS_AS(residue_via_circle(inv_s, {0, 0}, 0.5, 32), Error); // too few nodes

    // radius invariance where no leakage occurs
    Complex r1 = residue_via_circle(inv_s, {0, 0}, 0.5, 256, false);
    Complex r2 = residue_via_circle(inv_s, {0, 0}, 0.25, 256, false);
    Complex r3 = residue_via_circle(inv_s, {0, 0}, 0.125, 256, false);
    CHECK(std::abs(r1 - r2) <= 1e-8);
    CHECK(std::abs(r2 - r3) <= 1e-8);

    // a second pole inside the doubled radius trips the stability check
    auto leaky = [](Complex s) { return 1.0 / s + 1.0 / (s - 0.3); };
    try {
        residue_via_circle(leaky, {0, 0}, 0.5, 256, true);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Status::instability_error);
    }
}

TEST_CASE("residues match the published coefficients at r=1") {
    Precision cfg;
    auto f = [&](Complex s) { return integrand(Weight::lambda, 1, 10.5, s, cfg); };
    Complex res1 = residue_via_circle(f, {1.0, 0.0}, 0.25, 256);
    CHECK(std::abs(res1.real() - h_r_paper(1, 10.5)) <= 1e-10);
    CHECK(std::abs(res1.imag()) <= 1e-12);

    const auto& zt = ten_zeros();
    FormulaParams p = popov_params();
    for (int k = 1; k <= 3; ++k) {
        Complex rr = residue_via_circle(f, Complex(0.5, zt.entry(k).gamma), 0.25, 256);
        Complex term = zero_term_paper(p, zt.entry(k), cfg); // x^{rho-2}/(rho(rho-1))
        INFO("k = ", k);
        CHECK(std::abs(2.0 * rr - term) <= 1e-10);
    }
}

TEST_CASE("trivial-zero closed terms") {
    Precision cfg;
    FormulaParams p = popov_params();
    double z3 = zeta({3.0, 0.0}, cfg).real();
    double coeff = (2.0 - 2.0 * z3) / 12.0;
    CHECK(trivial_term_paper(p, 1, cfg) == doctest::Approx(coeff * std::pow(10.5, -4.0)).epsilon(1e-13));
    CHECK(trivial_term_paper(p, 1, cfg) == doctest::Approx(-2.7707e-6).epsilon(1e-4));

    FormulaParams m;
    m.identity = Identity::mobius_thm21;
    m.weight = Weight::mu;
    m.x = 10.5;
    double factor = kPi * kPi * 8.0 * (-1.0) / (2.0 * z3);
    CHECK(factor == doctest::Approx(-32.8424).epsilon(1e-4));
    CHECK(trivial_term_paper(m, 1, cfg) ==
          doctest::Approx(coeff * factor * std::pow(10.5, -4.0)).epsilon(1e-12));
    CHECK(trivial_term_paper(m, 1, cfg) == doctest::Approx(9.10e-5).epsilon(1e-2));

    // residue of the mu integrand at s = -2 agrees with the closed k=1 term
    // (both in the halved normalization of the mu identity)
    auto fm = [&](Complex s) { return integrand(Weight::mu, 1, 10.5, s, cfg); };
    Complex res = residue_via_circle(fm, {-2.0, 0.0}, 0.25, 256);
    CHECK(std::abs(res.real() - trivial_term_paper(m, 1, cfg)) <= 1e-10);

    // terms decay roughly like x^2 per k
    double t1 = std::abs(trivial_term_paper(p, 1, cfg));
    double t2 = std::abs(trivial_term_paper(p, 2, cfg));
    CHECK(t1 / t2 > 50.0);
}

TEST_CASE("geometric tail of the trivial sum") {
    Precision cfg;
    FormulaParams p = popov_params();
    p.n_trivial = 20;
    auto s20 = rhs_trivial_sum(p, cfg, false);
    p.n_trivial = 40;
    auto s40 = rhs_trivial_sum(p, cfg, false);
    CHECK(std::abs(s40.value - s20.value) <= s20.tail);
}

TEST_CASE("zero sum") {
    Precision cfg;
    const auto& zt = ten_zeros();
    FormulaParams p = popov_params();
    p.n_zeros = 0;
    CHECK(rhs_zero_sum(p, zt, cfg, false).value == 0.0);

    p.n_zeros = 1;
    std::vector<double> terms;
    auto one = rhs_zero_sum(p, zt, cfg, false, &terms);
    Complex rho(0.5, zt.entry(1).gamma);
    Complex direct = std::exp((rho - 2.0) * std::log(10.5)) / (rho * (rho - 1.0));
    CHECK(one.value == doctest::Approx(2.0 * direct.real()).epsilon(1e-13));
    CHECK(std::abs(one.value) < 6e-4); // |2 Re| bounded by the 2 x^{-3/2}/|rho|^2 envelope
    CHECK(one.imag_residue == 0.0);
    REQUIRE(terms.size() == 1);

    // exponent-1 theorem terms are half the published series terms, up to the
    // zeta(1-rho) creep
    FormulaParams t1 = p;
    t1.identity = Identity::theorem1;
    for (int k = 1; k <= 5; ++k) {
        Complex thm = zero_term_paper(t1, zt.entry(k), cfg);
        Complex pop = zero_term_paper(p, zt.entry(k), cfg);
        INFO("k = ", k);
        CHECK(std::abs(thm - 0.5 * pop) <= 1e-6 * std::abs(thm) + 1e-18);
    }

    FormulaParams m;
    m.identity = Identity::mobius_thm21;
    m.weight = Weight::mu;
    m.x = 10.5;
    m.n_zeros = 2;
    auto mv = rhs_zero_sum(m, zt, cfg, false);
    Complex zp = *zt.entry(1).zeta_prime;
    Complex mterm = std::exp((rho - 2.0) * std::log(10.5)) / (zp * rho * (rho - 1.0));
    CHECK(std::abs(mv.value) > 0.0);
    CHECK(std::isfinite(mv.value));
    Complex rho2(0.5, zt.entry(2).gamma);
    Complex mterm2 = std::exp((rho2 - 2.0) * std::log(10.5)) / (*zt.entry(2).zeta_prime * rho2 * (rho2 - 1.0));
    CHECK(mv.value == doctest::Approx(2.0 * mterm.real() + 2.0 * mterm2.real()).epsilon(1e-12));
}

TEST_CASE("mellin pair") {
    Precision cfg;
    auto m2 = mellin_pair_check({2, 0}, cfg);
    CHECK(m2.rhs.real() == doctest::Approx(0.75 - zeta({2, 0}, cfg).real() / 2.0).epsilon(1e-15));
    CHECK(m2.rhs.real() == doctest::Approx(-0.0724670).epsilon(1e-5));
    CHECK(m2.diff <= 1e-8);
    auto m3 = mellin_pair_check({3, 0}, cfg);
    CHECK(m3.rhs.real() == doctest::Approx(-0.0673523).epsilon(1e-5));
    CHECK(m3.diff <= 1e-8);
    CHECK_THROWS_AS(mellin_pair_check({1.0, 0.0}, cfg), Error);
    CHECK_THROWS_AS(mellin_pair_check({0.5, 0.0}, cfg), Error);
}

TEST_CASE("mellin pair at slow decay") {
    auto m = mellin_pair_check({1.5, 0.0});
    CHECK(m.diff <= 1e-7);
}

TEST_CASE("inversion identity, short line") {
    Precision cfg;
    auto c = inversion_check(2.25, 2.0, 300.0, cfg);
    CHECK(c.closed == doctest::Approx(-0.09375).epsilon(1e-15));
    CHECK(c.diff <= 1e-3);
    CHECK_THROWS_AS(inversion_check(0.9, 2.0, 300.0, cfg), Error);

    CHECK(std::abs(inversion_integrand_residue(2.25, {0.0, 0.0}, 0.4, cfg)) <= 1e-9);
    CHECK(std::abs(inversion_integrand_residue(2.25, {1.0, 0.0}, 0.4, cfg)) <= 1e-9);
}

TEST_CASE("verify: structure and smoke") {
    Precision cfg;
    auto table = ArithTable::build(Weight::lambda, 200'000);
    FormulaParams p = popov_params();
    p.n_terms = 200'000;
    p.n_zeros = 10;
    p.n_trivial = 10;
    p.rhs_mode = RhsMode::both;
    auto rep = verify(p, table, ten_zeros(), cfg);

    REQUIRE(rep.rhs_paper.has_value());
    REQUIRE(rep.rhs_oracle.has_value());
    for (const auto& side : {*rep.rhs_paper, *rep.rhs_oracle}) {
        double sum = side.components.at("h") + side.components.at("zero_sum") +
                     side.components.at("trivial_sum");
        CHECK(side.value == doctest::Approx(sum).epsilon(1e-12));
    }
    CHECK(rep.residual_paper == doctest::Approx(std::abs(rep.lhs.value - rep.rhs_paper->value)).epsilon(1e-15));
    CHECK(rep.residual_oracle == doctest::Approx(std::abs(rep.lhs.value - rep.rhs_oracle->value)).epsilon(1e-15));
    CHECK(rep.pass);
    CHECK(rep.residual_oracle <= rep.pass_bound);
    // published and oracle right sides agree on this identity
    CHECK(std::abs(rep.rhs_paper->value - rep.rhs_oracle->value) <= 1e-8);

    // determinism of the numbers (timing aside)
    auto rep2 = verify(p, table, ten_zeros(), cfg);
    CHECK(rep2.lhs.value == rep.lhs.value);
    CHECK(rep2.rhs_oracle->value == rep.rhs_oracle->value);
}

TEST_CASE("verify: input validation") {
    Precision cfg;
    auto table = ArithTable::build(Weight::lambda, 1000);
    FormulaParams p;
    p.identity = Identity::theorem1;
    p.r = 2;
    p.rhs_mode = RhsMode::paper_verbatim;
    p.n_terms = 1000;
    p.n_zeros = 2;
    p.n_trivial = 5;
    CHECK_THROWS_AS(verify(p, table, ten_zeros(), cfg), Error); // r=2 verbatim refused
    p.rhs_mode = RhsMode::both;
    CHECK_THROWS_AS(verify(p, table, ten_zeros(), cfg), Error);

    FormulaParams q = popov_params();
    q.n_terms = 1000;
    q.n_zeros = 99; // more than the table holds
    q.n_trivial = 5;
    CHECK_THROWS_AS(verify(q, table, ten_zeros(), cfg), Error);

    FormulaParams bad = popov_params();
    bad.x = 1.0;
    CHECK_THROWS_AS(bad.validate(), Error);
    FormulaParams bad2 = popov_params();
    bad2.weight = Weight::mu;
    CHECK_THROWS_AS(bad2.validate(), Error);
}

TEST_CASE("verify: mobius with empty sums") {
    Precision cfg;
    auto table = ArithTable::build(Weight::mu, 1000);
    FormulaParams p;
    p.identity = Identity::mobius_thm21;
    p.weight = Weight::mu;
    p.x = 10.5;
    p.n_terms = 1000;
    p.n_zeros = 0;
    p.n_trivial = 0;
    p.rhs_mode = RhsMode::paper_verbatim;
    auto rep = verify(p, table, ten_zeros(), cfg);
    CHECK(rep.rhs_paper->value == 0.0); // no constant term, empty sums
    CHECK(rep.rhs_paper->components.at("h") == 0.0);
}

TEST_CASE("lhs tail bound is sound") {
    // |lhs(10^6) - lhs(10^7)| <= tail_estimate(10^6)
    auto table = ArithTable::build(Weight::lambda, 10'000'000);
    FormulaParams p = popov_params();
    p.n_terms = 1'000'000;
    auto a = lhs_series(p, table);
    p.n_terms = 10'000'000;
    auto b = lhs_series(p, table);
    CHECK(std::abs(a.value - b.value) <= a.tail_estimate);
}

TEST_SUITE_END();
