// zetalab command-line front end: builds arithmetic tables, finds and stores
// critical-line zeros, verifies the fractional-part identities, and runs the
// proof-step checks (Mellin pair, line-integral inversion, residues).
//
// Exit codes: 0 success, 1 numerical-tolerance failure, 2 input/convergence
// failure, 64 usage error.

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zetalab/zetalab.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitTolerance = 1;
constexpr int kExitInput = 2;
constexpr int kExitUsage = 64;

int fail_input(const char* what, zl_status st) {
    std::fprintf(stderr, "zetalab: %s: %s (%s)\n", what, zl_last_error(), zl_status_name(st));
    return kExitInput;
}

struct ZerosDeleter {
    void operator()(zl_zeros* z) const { zl_zeros_free(z); }
};
struct TableDeleter {
    void operator()(zl_table* t) const { zl_table_free(t); }
};
struct ReportDeleter {
    void operator()(zl_report* r) const { zl_report_free(r); }
};

int cmd_zeros(int count, double tol, const std::string& out_path) {
    zl_precision cfg;
    zl_precision_default(&cfg);
    zl_zeros* raw = nullptr;
    if (zl_status st = zl_zeros_scan(count, tol, &cfg, &raw); st != ZL_OK)
        return fail_input("zero scan failed", st);
    std::unique_ptr<zl_zeros, ZerosDeleter> zeros(raw);
    if (zl_status st = zl_zeros_save(zeros.get(), out_path.c_str()); st != ZL_OK)
        return fail_input("saving zero table failed", st);
    double gmax = 0.0, maxz = 0.0;
    zl_zeros_gamma(zeros.get(), count, &gmax);
    if (zl_status st = zl_zeros_max_abs_z(zeros.get(), &cfg, &maxz); st != ZL_OK)
        return fail_input("revalidation failed", st);
    std::printf("zeros: count=%d gamma_max=%.12f max|Z(gamma)|=%.3e -> %s\n", count, gmax, maxz,
                out_path.c_str());
    return kExitOk;
}

int cmd_table(const std::string& kind, std::uint64_t limit, const std::string& out_path) {
    zl_table* raw = nullptr;
    zl_weight w = kind == "mu" ? ZL_WEIGHT_MU : ZL_WEIGHT_LAMBDA;
    if (zl_status st = zl_table_build(w, limit, &raw); st != ZL_OK)
        return fail_input("table build failed", st);
    std::unique_ptr<zl_table, TableDeleter> table(raw);
    std::FILE* f = out_path.empty() ? stdout : std::fopen(out_path.c_str(), "wb");
    if (!f) {
        std::fprintf(stderr, "zetalab: cannot open %s\n", out_path.c_str());
        return kExitInput;
    }
    std::fprintf(f, "n,value\n");
    for (std::uint64_t n = 1; n <= limit; ++n) {
        double v = 0.0;
        zl_table_value(table.get(), n, &v);
        if (w == ZL_WEIGHT_MU)
            std::fprintf(f, "%" PRIu64 ",%d\n", n, static_cast<int>(v));
        else
            std::fprintf(f, "%" PRIu64 ",%.15g\n", n, v);
    }
    if (f != stdout) std::fclose(f);
    return kExitOk;
}

void print_side(const char* name, const zl_report* rep, int side) {
    double vals[4];
    if (zl_report_side(rep, side, vals) != ZL_OK) return;
    std::printf("  %-10s h=%.15g zero_sum=%.15g trivial_sum=%.15g total=%.15g\n", name, vals[0],
                vals[1], vals[2], vals[3]);
}

int cmd_verify(const std::string& identity, int r, double x, std::uint64_t terms,
               const std::string& zeros_path, int nzeros, int trivial, const std::string& rhs,
               const std::string& json_out) {
    zl_precision cfg;
    zl_precision_default(&cfg);

    zl_identity id = identity == "popov"      ? ZL_IDENTITY_POPOV
                     : identity == "theorem1" ? ZL_IDENTITY_THEOREM1
                                              : ZL_IDENTITY_MOBIUS;
    zl_formula_params params;
    zl_formula_params_default(id, &params);
    params.r = id == ZL_IDENTITY_THEOREM1 ? r : 1;
    params.x = x;
    params.n_terms = terms;
    params.n_trivial = trivial;
    params.rhs_mode = rhs == "paper" ? ZL_RHS_PAPER : rhs == "oracle" ? ZL_RHS_ORACLE : ZL_RHS_BOTH;

    zl_zeros* zraw = nullptr;
    if (zl_status st = zl_zeros_load(zeros_path.c_str(), &zraw); st != ZL_OK)
        return fail_input("loading zero table failed", st);
    std::unique_ptr<zl_zeros, ZerosDeleter> zeros(zraw);
    if (zl_status st = zl_zeros_validate(zeros.get(), &cfg); st != ZL_OK)
        return fail_input("zero table validation failed", st);
    params.n_zeros = nzeros < zl_zeros_count(zeros.get()) ? nzeros : zl_zeros_count(zeros.get());

    // the mu identity weights each zero term by 1/zeta'(rho)
    if (id == ZL_IDENTITY_MOBIUS && params.rhs_mode != ZL_RHS_ORACLE) {
        bool missing = false;
        for (int k = 1; k <= params.n_zeros && !missing; ++k)
            missing = zl_zeros_has_zeta_prime(zeros.get(), k) == 0;
        if (missing) {
            std::fprintf(stderr, "zetalab: computing zeta'(rho) for %d zeros...\n",
                         zl_zeros_count(zeros.get()));
            if (zl_status st = zl_zeros_compute_zeta_prime(zeros.get(), &cfg); st != ZL_OK)
                return fail_input("zeta'(rho) computation failed", st);
            if (zl_status st = zl_zeros_save(zeros.get(), zeros_path.c_str()); st != ZL_OK)
                return fail_input("re-saving zero table failed", st);
        }
    }

    zl_table* traw = nullptr;
    zl_weight w = id == ZL_IDENTITY_MOBIUS ? ZL_WEIGHT_MU : ZL_WEIGHT_LAMBDA;
    if (zl_status st = zl_table_build(w, terms, &traw); st != ZL_OK)
        return fail_input("sieve failed", st);
    std::unique_ptr<zl_table, TableDeleter> table(traw);

    zl_report* rraw = nullptr;
    if (zl_status st = zl_verify(&params, table.get(), zeros.get(), &cfg, &rraw); st != ZL_OK)
        return fail_input("verification failed", st);
    std::unique_ptr<zl_report, ReportDeleter> rep(rraw);

    std::printf("verify %s: x=%.15g r=%d terms=%" PRIu64 " zeros=%d trivial=%d\n", identity.c_str(),
                x, params.r, terms, params.n_zeros, trivial);
    std::printf("  lhs        %.15g (tail bound %.3g)\n", zl_report_lhs_value(rep.get()),
                zl_report_lhs_tail(rep.get()));
    print_side("rhs_paper", rep.get(), 0);
    print_side("rhs_oracle", rep.get(), 1);
    double rp = zl_report_residual_paper(rep.get());
    double ro = zl_report_residual_oracle(rep.get());
    if (!std::isnan(rp)) std::printf("  residual_paper  %.15g\n", rp);
    if (!std::isnan(ro)) std::printf("  residual_oracle %.15g\n", ro);
    std::printf("  pass_bound %.15g -> %s (%" PRId64 " ms)\n", zl_report_pass_bound(rep.get()),
                zl_report_pass(rep.get()) ? "PASS" : "FAIL", zl_report_runtime_ms(rep.get()));

    if (!json_out.empty()) {
        char* json = nullptr;
        if (zl_status st = zl_report_json(rep.get(), &json); st != ZL_OK)
            return fail_input("report serialization failed", st);
        std::ofstream out(json_out);
        out << json << "\n";
        zl_string_free(json);
        if (!out) {
            std::fprintf(stderr, "zetalab: cannot write %s\n", json_out.c_str());
            return kExitInput;
        }
    }
    return zl_report_pass(rep.get()) ? kExitOk : kExitTolerance;
}

int cmd_check_mellin(double s_re) {
    zl_precision cfg;
    zl_precision_default(&cfg);
    zl_complex lhs, rhs;
    double diff = 0.0, tail = 0.0;
    if (zl_status st = zl_check_mellin({s_re, 0.0}, &cfg, &lhs, &rhs, &diff, &tail); st != ZL_OK)
        return fail_input("mellin check failed", st);
    double tol = s_re >= 2.0 ? 1e-8 : 1e-7;
    std::printf("mellin s=%.15g: quadrature=%.15g closed=%.15g diff=%.3e (tol %.0e, tail bound %.1e)\n",
                s_re, lhs.re, rhs.re, diff, tol, tail);
    return diff <= tol ? kExitOk : kExitTolerance;
}

int cmd_check_inversion(double u, double a, double T) {
    zl_precision cfg;
    zl_precision_default(&cfg);
    double line = 0.0, closed = 0.0, diff = 0.0;
    if (zl_status st = zl_check_inversion(u, a, T, &cfg, &line, &closed, &diff); st != ZL_OK)
        return fail_input("inversion check failed", st);
    std::printf("inversion u=%.15g a=%.15g T=%.15g: line=%.15g closed=%.15g diff=%.3e (tol 1e-3)\n",
                u, a, T, line, closed, diff);
    return diff <= 1e-3 ? kExitOk : kExitTolerance;
}

int cmd_check_residues(int r, double x, int k_zeros, double u) {
    zl_precision cfg;
    zl_precision_default(&cfg);
    bool ok = true;

    // the two cancelling poles of the line integrand
    zl_complex res0, res1;
    if (zl_status st = zl_inversion_residue(u, {0.0, 0.0}, 0.4, &cfg, &res0); st != ZL_OK)
        return fail_input("residue at s=0 failed", st);
    if (zl_status st = zl_inversion_residue(u, {1.0, 0.0}, 0.4, &cfg, &res1); st != ZL_OK)
        return fail_input("residue at s=1 failed", st);
    double m0 = std::hypot(res0.re, res0.im), m1 = std::hypot(res1.re, res1.im);
    std::printf("inversion integrand (u=%.15g): |res@0|=%.3e |res@1|=%.3e (tol 1e-9)\n", u, m0, m1);
    ok = ok && m0 <= 1e-9 && m1 <= 1e-9;

    // constant-term residue of the identity integrand
    zl_complex hres;
    zl_complex center = r == 1 ? zl_complex{1.0, 0.0} : zl_complex{2.0 - r, 0.0};
    if (zl_status st = zl_integrand_residue(ZL_WEIGHT_LAMBDA, r, x, center, 0.25, 256, &cfg, &hres);
        st != ZL_OK)
        return fail_input("constant-term residue failed", st);
    if (r == 1) {
        double h1 = 0.0;
        zl_h_term_paper(1, x, &cfg, &h1);
        std::printf("residue@s=1 (r=1, x=%.15g): %.15g vs h_1=%.15g diff=%.3e (tol 1e-8)\n", x,
                    hres.re, h1, std::abs(hres.re - h1));
        ok = ok && std::abs(hres.re - h1) <= 1e-8;
    } else {
        std::printf("residue@s=%d (r=%d, x=%.15g): %.15g %+.3ei", 2 - r, r, x, hres.re, hres.im);
        double hp = 0.0;
        if (zl_h_term_paper(r, x, &cfg, &hp) == ZL_OK)
            std::printf("  [printed h_r=%.15g, discrepancy %.3e]", hp, std::abs(hres.re - hp));
        std::printf("\n");
    }

    if (k_zeros > 0) {
        zl_zeros* zraw = nullptr;
        if (zl_status st = zl_zeros_scan(k_zeros, 1e-10, &cfg, &zraw); st != ZL_OK)
            return fail_input("zero scan failed", st);
        std::unique_ptr<zl_zeros, ZerosDeleter> zeros(zraw);
        for (int k = 1; k <= k_zeros; ++k) {
            double g = 0.0;
            zl_zeros_gamma(zeros.get(), k, &g);
            zl_complex res, term;
            zl_complex c{0.5 + 1.0 - r, g};
            if (zl_status st = zl_integrand_residue(ZL_WEIGHT_LAMBDA, r, x, c, 0.25, 256, &cfg, &res);
                st != ZL_OK)
                return fail_input("zero residue failed", st);
            if (r == 1) {
                zl_zero_term_paper(ZL_IDENTITY_POPOV, 1, x, g, nullptr, &cfg, &term);
                // the published series is the doubled identity: scale residue by 2
                double d = std::hypot(2.0 * res.re - term.re, 2.0 * res.im - term.im);
                std::printf("residue@rho_%d: 2*res=(%.9e,%.9e) vs closed=(%.9e,%.9e) diff=%.3e\n",
                            k, 2.0 * res.re, 2.0 * res.im, term.re, term.im, d);
                ok = ok && d <= 1e-8;
            } else {
                std::printf("residue@rho_%d+1-r: (%.9e,%.9e)\n", k, res.re, res.im);
            }
        }
    }
    std::printf("residues: %s\n", ok ? "PASS" : "FAIL");
    return ok ? kExitOk : kExitTolerance;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"zetalab: numerical verification of explicit-formula identities"};
    app.require_subcommand(1);

    auto* zeros = app.add_subcommand("zeros", "scan critical-line zeros and write a CSV table");
    int z_count = 100;
    double z_tol = 1e-10;
    std::string z_out = "zeros.csv";
    zeros->add_option("--count", z_count, "number of zeros")->required()->check(CLI::Range(1, 5000));
    zeros->add_option("--tol", z_tol, "refinement tolerance")->check(CLI::Range(1e-12, 1e-2));
    zeros->add_option("--out", z_out, "output CSV path")->required();

    auto* verify = app.add_subcommand("verify", "verify one of the identities end to end");
    std::string v_identity;
    int v_r = 1, v_nzeros = 1000, v_trivial = 40;
    double v_x = 10.5;
    std::uint64_t v_terms = 10'000'000;
    std::string v_zeros, v_rhs = "both", v_json;
    verify->add_option("identity", v_identity, "popov | theorem1 | mobius")
        ->required()
        ->check(CLI::IsMember({"popov", "theorem1", "mobius"}));
    verify->add_option("--x", v_x, "evaluation point (> 1)");
    verify->add_option("--r", v_r, "exponent r (theorem1)")->check(CLI::Range(1, 30));
    verify->add_option("--terms", v_terms, "series truncation");
    verify->add_option("--zeros", v_zeros, "zero-table CSV")->required();
    verify->add_option("--nzeros", v_nzeros, "zeros to use")->check(CLI::Range(0, 5000));
    verify->add_option("--trivial", v_trivial, "trivial-zero terms K")->check(CLI::Range(0, 80));
    verify->add_option("--rhs", v_rhs, "paper | oracle | both")
        ->check(CLI::IsMember({"paper", "oracle", "both"}));
    verify->add_option("--json", v_json, "write the report JSON here");

    auto* check = app.add_subcommand("check", "verify a proof step");
    check->require_subcommand(1);
    auto* mellin = check->add_subcommand("mellin", "integral transform pair");
    double m_s = 2.0;
    mellin->add_option("--s", m_s, "real s > 1")->required();
    auto* inversion = check->add_subcommand("inversion", "vertical-line inversion identity");
    double i_u = 2.25, i_a = 2.0, i_T = 2000.0;
    inversion->add_option("--u", i_u, "evaluation point u > 1")->required();
    inversion->add_option("--a", i_a, "line abscissa a > 1");
    inversion->add_option("--T", i_T, "truncation height")->check(CLI::Range(10.0, 10000.0));
    auto* residues = check->add_subcommand("residues", "circle-contour residues vs closed forms");
    int c_r = 1, c_k = 5;
    double c_x = 10.5, c_u = 2.25;
    std::string c_at;
    residues->add_option("--r", c_r, "exponent r")->check(CLI::Range(1, 30));
    residues->add_option("--x", c_x, "evaluation point");
    residues->add_option("--k", c_k, "zero poles to check")->check(CLI::Range(0, 50));
    residues->add_option("--u", c_u, "u for the inversion integrand");
    residues->add_option("--at", c_at, "pole selector (informational; all poles are always checked)");

    auto* table = app.add_subcommand("table", "dump an arithmetic-function table as CSV");
    std::string t_kind = "lambda", t_out;
    std::uint64_t t_limit = 100;
    table->add_option("--kind", t_kind, "lambda | mu")->check(CLI::IsMember({"lambda", "mu"}));
    table->add_option("--limit", t_limit, "table limit")
        ->required()
        ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{200'000'000}));
    table->add_option("--out", t_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (zeros->parsed()) return cmd_zeros(z_count, z_tol, z_out);
        if (verify->parsed())
            return cmd_verify(v_identity, v_r, v_x, v_terms, v_zeros, v_nzeros, v_trivial, v_rhs, v_json);
        if (check->parsed()) {
            if (mellin->parsed()) return cmd_check_mellin(m_s);
            if (inversion->parsed()) return cmd_check_inversion(i_u, i_a, i_T);
            if (residues->parsed()) return cmd_check_residues(c_r, c_x, c_k, c_u);
        }
        if (table->parsed()) return cmd_table(t_kind, t_limit, t_out);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "zetalab: %s\n", e.what());
        return kExitInput;
    }
    return kExitUsage;
}
