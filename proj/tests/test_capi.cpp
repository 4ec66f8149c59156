#include <cmath>
#include <cstring>
#include <string>

#include <doctest.h>

#include "zetalab/zetalab.h"

TEST_SUITE_BEGIN("capi");

TEST_CASE("tables through the c surface") {
    zl_table* t = nullptr;
    REQUIRE(zl_table_build(ZL_WEIGHT_LAMBDA, 100, &t) == ZL_OK);
    CHECK(zl_table_limit(t) == 100);
    CHECK(zl_table_kind(t) == ZL_WEIGHT_LAMBDA);
    double v = 0.0;
    REQUIRE(zl_table_value(t, 8, &v) == ZL_OK);
    CHECK(v == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    double psi = 0.0;
    REQUIRE(zl_table_psi(t, 10.0, &psi) == ZL_OK);
    CHECK(psi == doctest::Approx(7.8320141).epsilon(1e-6));
    int64_t m = 0;
    CHECK(zl_table_mertens(t, 10.0, &m) == ZL_ERR_INVALID_ARGUMENT);
    CHECK(std::strlen(zl_last_error()) > 0);
    zl_table_free(t);

    zl_table* bad = nullptr;
    CHECK(zl_table_build(ZL_WEIGHT_MU, 0, &bad) == ZL_ERR_SIZE);
}

TEST_CASE("evaluators") {
    zl_precision cfg;
    zl_precision_default(&cfg);
    zl_complex out;
    REQUIRE(zl_zeta({2.0, 0.0}, &cfg, &out) == ZL_OK);
    CHECK(out.re == doctest::Approx(1.6449340668).epsilon(1e-10));
    CHECK(zl_zeta({1.0, 0.0}, &cfg, &out) == ZL_ERR_POLE);
    REQUIRE(zl_zeta_alt({2.0, 0.0}, &out) == ZL_OK);
    CHECK(out.re == doctest::Approx(1.6449340668).epsilon(1e-9));
    REQUIRE(zl_zeta_prime({0.0, 0.0}, &cfg, &out) == ZL_OK);
    CHECK(out.re == doctest::Approx(-0.9189385332).epsilon(1e-9));
    double d = 0.0;
    REQUIRE(zl_zeta_prime_trivial_closed(1, &cfg, &d) == ZL_OK);
    CHECK(d == doctest::Approx(-0.0304484571).epsilon(1e-7));
    char buf[64];
    REQUIRE(zl_bernoulli_string(6, buf, sizeof(buf)) == ZL_OK);
    CHECK(std::string(buf) == "-691/2730");
    REQUIRE(zl_rs_theta(100.0, &d) == ZL_OK);
    CHECK(d == doctest::Approx(87.9721652318).epsilon(1e-9));
    REQUIRE(zl_hardy_z(14.0, &cfg, &d) == ZL_OK);
}

TEST_CASE("zeros and refinement") {
    zl_precision cfg;
    zl_precision_default(&cfg);
    zl_zeros* z = nullptr;
    REQUIRE(zl_zeros_scan(3, 1e-10, &cfg, &z) == ZL_OK);
    CHECK(zl_zeros_count(z) == 3);
    double g = 0.0;
    REQUIRE(zl_zeros_gamma(z, 1, &g) == ZL_OK);
    CHECK(g == doctest::Approx(14.134725142).epsilon(1e-8));
    CHECK(zl_zeros_has_zeta_prime(z, 1) == 0);
    REQUIRE(zl_zeros_compute_zeta_prime(z, &cfg) == ZL_OK);
    CHECK(zl_zeros_has_zeta_prime(z, 1) == 1);
    zl_complex zp;
    REQUIRE(zl_zeros_zeta_prime(z, 1, &zp) == ZL_OK);
    CHECK(std::hypot(zp.re, zp.im) == doctest::Approx(0.7931604).epsilon(1e-5));
    CHECK(zl_zeros_validate(z, &cfg) == ZL_OK);

    const char* path = "/tmp/zetalab_capi_zeros.csv";
    REQUIRE(zl_zeros_save(z, path) == ZL_OK);
    zl_zeros* back = nullptr;
    REQUIRE(zl_zeros_load(path, &back) == ZL_OK);
    CHECK(zl_zeros_count(back) == 3);
    zl_zeros_free(back);
    zl_zeros_free(z);
    std::remove(path);

    double refined = 0.0;
    REQUIRE(zl_refine_zero(14.0, 14.2, 1e-9, 1, &cfg, &refined) == ZL_OK);
    CHECK(refined == doctest::Approx(14.134725).epsilon(1e-6));
    REQUIRE(zl_refine_zero(14.0, 14.2, 1e-9, 2, &cfg, &refined) == ZL_OK);
    CHECK(refined == doctest::Approx(14.134725).epsilon(1e-6));
    CHECK(zl_refine_zero(14.0, 14.05, 1e-9, 0, &cfg, &refined) == ZL_ERR_INVALID_ARGUMENT);
}

TEST_CASE("verification and report") {
    zl_precision cfg;
    zl_precision_default(&cfg);
    zl_zeros* z = nullptr;
    REQUIRE(zl_zeros_scan(5, 1e-10, &cfg, &z) == ZL_OK);
    zl_table* t = nullptr;
    REQUIRE(zl_table_build(ZL_WEIGHT_LAMBDA, 100'000, &t) == ZL_OK);

    zl_formula_params p;
    zl_formula_params_default(ZL_IDENTITY_POPOV, &p);
    p.n_terms = 100'000;
    p.n_zeros = 5;
    p.n_trivial = 8;
    zl_report* rep = nullptr;
    REQUIRE(zl_verify(&p, t, z, &cfg, &rep) == ZL_OK);
    CHECK(zl_report_pass(rep) == 1);
    double vals[4];
    REQUIRE(zl_report_side(rep, 1, vals) == ZL_OK);
    CHECK(vals[3] == doctest::Approx(vals[0] + vals[1] + vals[2]).epsilon(1e-12));
    CHECK(zl_report_residual_oracle(rep) <= zl_report_pass_bound(rep));
    char* json = nullptr;
    REQUIRE(zl_report_json(rep, &json) == ZL_OK);
    std::string j(json);
    zl_string_free(json);
    CHECK(j.find("\"identity\":\"popov_eq11\"") != std::string::npos);
    CHECK(j.find("\"rhs_oracle\"") != std::string::npos);
    zl_report_free(rep);

    // degenerate case surfaces with the right status
    zl_formula_params bad;
    zl_formula_params_default(ZL_IDENTITY_THEOREM1, &bad);
    bad.r = 2;
    bad.rhs_mode = ZL_RHS_PAPER;
    bad.n_terms = 100'000;
    bad.n_zeros = 2;
    zl_report* r2 = nullptr;
    CHECK(zl_verify(&bad, t, z, &cfg, &r2) == ZL_ERR_DEGENERATE);

    zl_table_free(t);
    zl_zeros_free(z);
}

TEST_CASE("checks") {
    zl_precision cfg;
    zl_precision_default(&cfg);
    zl_complex lhs, rhs;
    double diff = 0.0, tail = 0.0;
    REQUIRE(zl_check_mellin({2.0, 0.0}, &cfg, &lhs, &rhs, &diff, &tail) == ZL_OK);
    CHECK(diff <= 1e-8);
    double line = 0.0, closed = 0.0;
    REQUIRE(zl_check_inversion(1.5, 2.0, 200.0, &cfg, &line, &closed, &diff) == ZL_OK);
    CHECK(closed == doctest::Approx(-0.125).epsilon(1e-15));
    CHECK(diff <= 1e-3);
    zl_complex res;
    REQUIRE(zl_inversion_residue(2.25, {0.0, 0.0}, 0.4, &cfg, &res) == ZL_OK);
    CHECK(std::hypot(res.re, res.im) <= 1e-9);
    REQUIRE(zl_integrand_residue(ZL_WEIGHT_LAMBDA, 1, 10.5, {1.0, 0.0}, 0.25, 256, &cfg, &res) == ZL_OK);
    double h1 = 0.0;
    REQUIRE(zl_h_term_paper(1, 10.5, &cfg, &h1) == ZL_OK);
    CHECK(res.re == doctest::Approx(h1).epsilon(1e-9));
    CHECK(zl_h_term_paper(2, 10.5, &cfg, &h1) == ZL_ERR_DEGENERATE);
}

TEST_SUITE_END();
