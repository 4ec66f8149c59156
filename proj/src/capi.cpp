#include "zetalab/zetalab.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <string>

#include "arith.hpp"
#include "bernoulli.hpp"
#include "formulas.hpp"
#include "hardy.hpp"
#include "zeros.hpp"
#include "zeta.hpp"

using namespace zetalab;

struct zl_table {
    ArithTable impl;
};
struct zl_zeros {
    ZeroTable impl;
};
struct zl_report {
    VerificationReport impl;
};

namespace {

thread_local std::string g_last_error;

zl_status to_c(Status s) {
    switch (s) {
        case Status::ok: return ZL_OK;
        case Status::invalid_argument: return ZL_ERR_INVALID_ARGUMENT;
        case Status::size_error: return ZL_ERR_SIZE;
        case Status::range_error: return ZL_ERR_RANGE;
        case Status::domain_error: return ZL_ERR_DOMAIN;
        case Status::pole_error: return ZL_ERR_POLE;
        case Status::degenerate_case: return ZL_ERR_DEGENERATE;
        case Status::convergence_error: return ZL_ERR_CONVERGENCE;
        case Status::instability_error: return ZL_ERR_INSTABILITY;
        case Status::validation_error: return ZL_ERR_VALIDATION;
        case Status::parse_error: return ZL_ERR_PARSE;
        case Status::io_error: return ZL_ERR_IO;
        case Status::data_error: return ZL_ERR_DATA;
        case Status::internal_error: return ZL_ERR_INTERNAL;
    }
    return ZL_ERR_INTERNAL;
}

template <class F>
zl_status guarded(F&& f) {
    try {
        f();
        return ZL_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return to_c(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return ZL_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return ZL_ERR_INTERNAL;
    }
}

Precision from_c(const zl_precision* cfg) {
    if (!cfg) return Precision{};
    Precision p;
    p.bernoulli_order = cfg->bernoulli_order;
    p.em_min_terms = cfg->em_min_terms;
    p.em_terms_per_2pi = cfg->em_terms_per_2pi;
    p.target_abs_err = cfg->target_abs_err;
    p.quad_nodes_per_panel = cfg->quad_nodes_per_panel;
    p.line_cutoff = cfg->line_cutoff;
    return p;
}

Complex from_c(zl_complex z) { return {z.re, z.im}; }
zl_complex to_c(Complex z) { return {z.real(), z.imag()}; }

FormulaParams params_from_c(const zl_formula_params* p) {
    FormulaParams q;
    q.identity = p->identity == ZL_IDENTITY_POPOV      ? Identity::popov_eq11
                 : p->identity == ZL_IDENTITY_THEOREM1 ? Identity::theorem1
                                                       : Identity::mobius_thm21;
    q.weight = p->weight == ZL_WEIGHT_LAMBDA ? Weight::lambda : Weight::mu;
    q.r = p->r;
    q.x = p->x;
    q.n_terms = p->n_terms;
    q.n_zeros = p->n_zeros;
    q.n_trivial = p->n_trivial;
    q.rhs_mode = p->rhs_mode == ZL_RHS_PAPER    ? RhsMode::paper_verbatim
                 : p->rhs_mode == ZL_RHS_ORACLE ? RhsMode::residue_oracle
                                                : RhsMode::both;
    return q;
}

} // namespace

extern "C" {

const char* zl_status_name(zl_status code) {
    switch (code) {
        case ZL_OK: return "ok";
        case ZL_ERR_INVALID_ARGUMENT: return "invalid_argument";
        case ZL_ERR_SIZE: return "size_error";
        case ZL_ERR_RANGE: return "range_error";
        case ZL_ERR_DOMAIN: return "domain_error";
        case ZL_ERR_POLE: return "pole_error";
        case ZL_ERR_DEGENERATE: return "degenerate_case";
        case ZL_ERR_CONVERGENCE: return "convergence_error";
        case ZL_ERR_INSTABILITY: return "instability_error";
        case ZL_ERR_VALIDATION: return "validation_error";
        case ZL_ERR_PARSE: return "parse_error";
        case ZL_ERR_IO: return "io_error";
        case ZL_ERR_DATA: return "data_error";
        case ZL_ERR_INTERNAL: return "internal_error";
    }
    return "?";
}

const char* zl_last_error(void) { return g_last_error.c_str(); }

void zl_precision_default(zl_precision* out) {
    Precision p;
    out->bernoulli_order = p.bernoulli_order;
    out->em_min_terms = p.em_min_terms;
    out->em_terms_per_2pi = p.em_terms_per_2pi;
    out->target_abs_err = p.target_abs_err;
    out->quad_nodes_per_panel = p.quad_nodes_per_panel;
    out->line_cutoff = p.line_cutoff;
}

zl_status zl_table_build(zl_weight kind, uint64_t limit, zl_table** out) {
    return guarded([&] {
        auto t = ArithTable::build(kind == ZL_WEIGHT_LAMBDA ? Weight::lambda : Weight::mu, limit);
        *out = new zl_table{std::move(t)};
    });
}

void zl_table_free(zl_table* t) { delete t; }

uint64_t zl_table_limit(const zl_table* t) { return t->impl.limit(); }

int zl_table_kind(const zl_table* t) {
    return t->impl.kind() == Weight::lambda ? ZL_WEIGHT_LAMBDA : ZL_WEIGHT_MU;
}

zl_status zl_table_value(const zl_table* t, uint64_t n, double* out) {
    return guarded([&] { *out = t->impl.value(n); });
}

zl_status zl_table_psi(const zl_table* t, double x, double* out) {
    return guarded([&] { *out = t->impl.chebyshev_psi(x); });
}

zl_status zl_table_mertens(const zl_table* t, double x, int64_t* out) {
    return guarded([&] { *out = t->impl.mertens(x); });
}

zl_status zl_zeta(zl_complex s, const zl_precision* cfg, zl_complex* out) {
    return guarded([&] { *out = to_c(zeta(from_c(s), from_c(cfg))); });
}

zl_status zl_zeta_prime(zl_complex s, const zl_precision* cfg, zl_complex* out) {
    return guarded([&] { *out = to_c(zeta_prime(from_c(s), from_c(cfg))); });
}

zl_status zl_zeta_alt(zl_complex s, zl_complex* out) {
    return guarded([&] { *out = to_c(zeta_alt_oracle(from_c(s))); });
}

zl_status zl_zeta_prime_trivial_closed(int n, const zl_precision* cfg, double* out) {
    return guarded([&] { *out = zeta_prime_trivial_closed(n, from_c(cfg)); });
}

zl_status zl_bernoulli_string(int j, char* buf, size_t bufsize) {
    return guarded([&] {
        auto strs = bernoulli_strings(j);
        const std::string& s = strs.back();
        if (s.size() + 1 > bufsize) fail(Status::size_error, "buffer too small");
        std::memcpy(buf, s.c_str(), s.size() + 1);
    });
}

zl_status zl_rs_theta(double t, double* out) {
    return guarded([&] { *out = rs_theta(t); });
}

zl_status zl_hardy_z(double t, const zl_precision* cfg, double* out) {
    return guarded([&] { *out = hardy_z(t, from_c(cfg)); });
}

zl_status zl_zeros_scan(int count, double tol, const zl_precision* cfg, zl_zeros** out) {
    return guarded([&] { *out = new zl_zeros{ZeroTable::scan(count, tol, from_c(cfg))}; });
}

zl_status zl_zeros_load(const char* path, zl_zeros** out) {
    return guarded([&] { *out = new zl_zeros{ZeroTable::load(path)}; });
}

zl_status zl_zeros_save(const zl_zeros* z, const char* path) {
    return guarded([&] { z->impl.save(path); });
}

zl_status zl_zeros_validate(const zl_zeros* z, const zl_precision* cfg) {
    return guarded([&] { z->impl.validate(from_c(cfg)); });
}

void zl_zeros_free(zl_zeros* z) { delete z; }

int zl_zeros_count(const zl_zeros* z) { return z->impl.count(); }

zl_status zl_zeros_gamma(const zl_zeros* z, int k, double* out) {
    return guarded([&] { *out = z->impl.entry(k).gamma; });
}

int zl_zeros_has_zeta_prime(const zl_zeros* z, int k) {
    if (k < 1 || k > z->impl.count()) return 0;
    return z->impl.entry(k).zeta_prime.has_value() ? 1 : 0;
}

zl_status zl_zeros_zeta_prime(const zl_zeros* z, int k, zl_complex* out) {
    return guarded([&] {
        const auto& e = z->impl.entry(k);
        if (!e.zeta_prime) fail(Status::data_error, "entry has no zeta_prime value");
        *out = to_c(*e.zeta_prime);
    });
}

zl_status zl_zeros_compute_zeta_prime(zl_zeros* z, const zl_precision* cfg) {
    return guarded([&] { z->impl.ensure_zeta_prime(from_c(cfg)); });
}

zl_status zl_zeros_max_abs_z(const zl_zeros* z, const zl_precision* cfg, double* out) {
    return guarded([&] { *out = z->impl.max_abs_z(from_c(cfg)); });
}

zl_status zl_refine_zero(double t_lo, double t_hi, double tol, int method,
                         const zl_precision* cfg, double* out) {
    return guarded([&] {
        RefineMethod m = method == 1   ? RefineMethod::bisection
                         : method == 2 ? RefineMethod::secant
                                       : RefineMethod::hybrid;
        *out = refine_zero(t_lo, t_hi, tol, from_c(cfg), m);
    });
}

void zl_formula_params_default(zl_identity identity, zl_formula_params* out) {
    out->identity = identity;
    out->weight = identity == ZL_IDENTITY_MOBIUS ? ZL_WEIGHT_MU : ZL_WEIGHT_LAMBDA;
    out->r = 1;
    out->x = 10.5;
    out->n_terms = 10'000'000;
    out->n_zeros = 1000;
    out->n_trivial = 40;
    out->rhs_mode = ZL_RHS_BOTH;
}

zl_status zl_verify(const zl_formula_params* p, const zl_table* t, const zl_zeros* z,
                    const zl_precision* cfg, zl_report** out) {
    return guarded([&] {
        static const ZeroTable empty_table;
        const ZeroTable& zt = z ? z->impl : empty_table;
        *out = new zl_report{verify(params_from_c(p), t->impl, zt, from_c(cfg))};
    });
}

void zl_report_free(zl_report* r) { delete r; }

double zl_report_lhs_value(const zl_report* r) { return r->impl.lhs.value; }
double zl_report_lhs_tail(const zl_report* r) { return r->impl.lhs.tail_estimate; }

zl_status zl_report_side(const zl_report* r, int side, double vals[4]) {
    return guarded([&] {
        const auto& opt = side == 0 ? r->impl.rhs_paper : r->impl.rhs_oracle;
        if (!opt) fail(Status::data_error, "requested side not present in report");
        vals[0] = opt->components.at("h");
        vals[1] = opt->components.at("zero_sum");
        vals[2] = opt->components.at("trivial_sum");
        vals[3] = opt->value;
    });
}

double zl_report_residual_paper(const zl_report* r) {
    return r->impl.rhs_paper ? r->impl.residual_paper : std::nan("");
}

double zl_report_residual_oracle(const zl_report* r) {
    return r->impl.rhs_oracle ? r->impl.residual_oracle : std::nan("");
}

double zl_report_pass_bound(const zl_report* r) { return r->impl.pass_bound; }
int zl_report_pass(const zl_report* r) { return r->impl.pass ? 1 : 0; }
int64_t zl_report_runtime_ms(const zl_report* r) { return r->impl.runtime_ms; }

zl_status zl_report_json(const zl_report* r, char** out) {
    return guarded([&] {
        std::string j = r->impl.to_json();
        char* buf = static_cast<char*>(std::malloc(j.size() + 1));
        if (!buf) fail(Status::internal_error, "out of memory");
        std::memcpy(buf, j.c_str(), j.size() + 1);
        *out = buf;
    });
}

void zl_string_free(char* s) { std::free(s); }

zl_status zl_check_mellin(zl_complex s, const zl_precision* cfg, zl_complex* lhs, zl_complex* rhs,
                          double* diff, double* tail_bound) {
    return guarded([&] {
        MellinCheck c = mellin_pair_check(from_c(s), from_c(cfg));
        *lhs = to_c(c.lhs);
        *rhs = to_c(c.rhs);
        *diff = c.diff;
        *tail_bound = c.tail_bound;
    });
}

zl_status zl_check_inversion(double u, double a, double T, const zl_precision* cfg,
                             double* line_integral, double* closed, double* diff) {
    return guarded([&] {
        InversionCheck c = inversion_check(u, a, T, from_c(cfg));
        *line_integral = c.line_integral;
        *closed = c.closed;
        *diff = c.diff;
    });
}

zl_status zl_inversion_residue(double u, zl_complex center, double radius,
                               const zl_precision* cfg, zl_complex* out) {
    return guarded([&] { *out = to_c(inversion_integrand_residue(u, from_c(center), radius, from_c(cfg))); });
}

zl_status zl_integrand_residue(zl_weight weight, int r, double x, zl_complex center, double radius,
                               int nodes, const zl_precision* cfg, zl_complex* out) {
    return guarded([&] {
        Precision p = from_c(cfg);
        auto f = [&](Complex s) {
            return integrand(weight == ZL_WEIGHT_LAMBDA ? Weight::lambda : Weight::mu, r, x, s, p);
        };
        *out = to_c(residue_via_circle(f, from_c(center), radius, nodes, true));
    });
}

zl_status zl_integrand_value(zl_weight weight, int r, double x, zl_complex s,
                             const zl_precision* cfg, zl_complex* out) {
    return guarded([&] {
        *out = to_c(integrand(weight == ZL_WEIGHT_LAMBDA ? Weight::lambda : Weight::mu, r, x,
                              from_c(s), from_c(cfg)));
    });
}

zl_status zl_h_term_paper(int r, double x, const zl_precision* cfg, double* out) {
    return guarded([&] { *out = h_r_paper(r, x, from_c(cfg)); });
}

zl_status zl_zero_term_paper(zl_identity identity, int r, double x, double gamma,
                             const zl_complex* zeta_prime_opt, const zl_precision* cfg,
                             zl_complex* out) {
    return guarded([&] {
        FormulaParams p;
        p.identity = identity == ZL_IDENTITY_POPOV      ? Identity::popov_eq11
                     : identity == ZL_IDENTITY_THEOREM1 ? Identity::theorem1
                                                        : Identity::mobius_thm21;
        p.weight = p.identity == Identity::mobius_thm21 ? Weight::mu : Weight::lambda;
        p.r = r;
        p.x = x;
        ZeroEntry e;
        e.index = 1;
        e.gamma = gamma;
        if (zeta_prime_opt) e.zeta_prime = from_c(*zeta_prime_opt);
        *out = to_c(zero_term_paper(p, e, from_c(cfg)));
    });
}

} // extern "C"
