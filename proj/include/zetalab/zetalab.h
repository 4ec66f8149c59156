/* zetalab — numerical verification of explicit-formula identities for the
 * von Mangoldt and Moebius weighted fractional-part series.
 *
 * C89-compatible surface over the C++ core: opaque handles, integer status
 * codes, no exceptions across the boundary.  All functions returning
 * zl_status leave outputs untouched on failure; zl_last_error() describes
 * the most recent failure on the calling thread.
 */
#ifndef ZETALAB_H
#define ZETALAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define ZETALAB_API_VERSION 1

typedef enum zl_status {
    ZL_OK = 0,
    ZL_ERR_INVALID_ARGUMENT,
    ZL_ERR_SIZE,
    ZL_ERR_RANGE,
    ZL_ERR_DOMAIN,
    ZL_ERR_POLE,
    ZL_ERR_DEGENERATE,
    ZL_ERR_CONVERGENCE,
    ZL_ERR_INSTABILITY,
    ZL_ERR_VALIDATION,
    ZL_ERR_PARSE,
    ZL_ERR_IO,
    ZL_ERR_DATA,
    ZL_ERR_INTERNAL
} zl_status;

const char* zl_status_name(zl_status code);
/* thread-local message for the last failing call */
const char* zl_last_error(void);

typedef struct zl_complex {
    double re, im;
} zl_complex;

typedef struct zl_precision {
    int bernoulli_order;      /* Euler-Maclaurin correction depth M */
    int em_min_terms;         /* main-sum floor */
    double em_terms_per_2pi;  /* main-sum slope vs |Im s| */
    double target_abs_err;
    int quad_nodes_per_panel;
    double line_cutoff;
} zl_precision;

void zl_precision_default(zl_precision* out);

/* ---- arithmetic tables (Lambda / mu) ---- */

typedef enum zl_weight { ZL_WEIGHT_LAMBDA = 0, ZL_WEIGHT_MU = 1 } zl_weight;

typedef struct zl_table zl_table;

zl_status zl_table_build(zl_weight kind, uint64_t limit, zl_table** out);
void zl_table_free(zl_table* t);
uint64_t zl_table_limit(const zl_table* t);
int zl_table_kind(const zl_table* t);
/* Lambda(n) or mu(n); n in [1, limit] */
zl_status zl_table_value(const zl_table* t, uint64_t n, double* out);
/* psi(x) = sum_{n<=x} Lambda(n); lambda tables only */
zl_status zl_table_psi(const zl_table* t, double x, double* out);
/* M(x) = sum_{n<=x} mu(n); mu tables only */
zl_status zl_table_mertens(const zl_table* t, double x, int64_t* out);

/* ---- zeta-function evaluators ---- */

zl_status zl_zeta(zl_complex s, const zl_precision* cfg, zl_complex* out);
zl_status zl_zeta_prime(zl_complex s, const zl_precision* cfg, zl_complex* out);
/* independent alternating-series cross-oracle */
zl_status zl_zeta_alt(zl_complex s, zl_complex* out);
/* zeta'(-2n) closed form, n in [1,30] */
zl_status zl_zeta_prime_trivial_closed(int n, const zl_precision* cfg, double* out);
/* exact Bernoulli number B_{2j} as "p/q"; j in [1,60] */
zl_status zl_bernoulli_string(int j, char* buf, size_t bufsize);
zl_status zl_rs_theta(double t, double* out);
zl_status zl_hardy_z(double t, const zl_precision* cfg, double* out);

/* ---- critical-line zeros ---- */

typedef struct zl_zeros zl_zeros;

zl_status zl_zeros_scan(int count, double tol, const zl_precision* cfg, zl_zeros** out);
zl_status zl_zeros_load(const char* path, zl_zeros** out);
zl_status zl_zeros_save(const zl_zeros* z, const char* path);
/* strict table invariants incl. |Z(gamma_k)| revalidation */
zl_status zl_zeros_validate(const zl_zeros* z, const zl_precision* cfg);
void zl_zeros_free(zl_zeros* z);
int zl_zeros_count(const zl_zeros* z);
/* k is 1-based */
zl_status zl_zeros_gamma(const zl_zeros* z, int k, double* out);
int zl_zeros_has_zeta_prime(const zl_zeros* z, int k);
zl_status zl_zeros_zeta_prime(const zl_zeros* z, int k, zl_complex* out);
/* fill zeta'(rho) for entries lacking it */
zl_status zl_zeros_compute_zeta_prime(zl_zeros* z, const zl_precision* cfg);
zl_status zl_zeros_max_abs_z(const zl_zeros* z, const zl_precision* cfg, double* out);
/* method: 0 hybrid, 1 bisection, 2 secant */
zl_status zl_refine_zero(double t_lo, double t_hi, double tol, int method,
                         const zl_precision* cfg, double* out);

/* ---- identity verification ---- */

typedef enum zl_identity {
    ZL_IDENTITY_POPOV = 0,
    ZL_IDENTITY_THEOREM1 = 1,
    ZL_IDENTITY_MOBIUS = 2
} zl_identity;

typedef enum zl_rhs_mode {
    ZL_RHS_PAPER = 0,
    ZL_RHS_ORACLE = 1,
    ZL_RHS_BOTH = 2
} zl_rhs_mode;

typedef struct zl_formula_params {
    zl_identity identity;
    zl_weight weight;
    int r;
    double x;
    uint64_t n_terms;
    int n_zeros;
    int n_trivial;
    zl_rhs_mode rhs_mode;
} zl_formula_params;

void zl_formula_params_default(zl_identity identity, zl_formula_params* out);

typedef struct zl_report zl_report;

zl_status zl_verify(const zl_formula_params* p, const zl_table* t, const zl_zeros* z,
                    const zl_precision* cfg, zl_report** out);
void zl_report_free(zl_report* r);
double zl_report_lhs_value(const zl_report* r);
double zl_report_lhs_tail(const zl_report* r);
/* side: 0 paper, 1 oracle; vals = {h, zero_sum, trivial_sum, total}; ZL_ERR_DATA if absent */
zl_status zl_report_side(const zl_report* r, int side, double vals[4]);
/* NaN when the side is absent */
double zl_report_residual_paper(const zl_report* r);
double zl_report_residual_oracle(const zl_report* r);
double zl_report_pass_bound(const zl_report* r);
int zl_report_pass(const zl_report* r);
int64_t zl_report_runtime_ms(const zl_report* r);
/* malloc'd JSON document (schema documented in the CLI); free with zl_string_free */
zl_status zl_report_json(const zl_report* r, char** out);
void zl_string_free(char* s);

/* ---- proof-step checks ---- */

zl_status zl_check_mellin(zl_complex s, const zl_precision* cfg, zl_complex* lhs, zl_complex* rhs,
                          double* diff, double* tail_bound);
zl_status zl_check_inversion(double u, double a, double T, const zl_precision* cfg,
                             double* line_integral, double* closed, double* diff);
/* residue of the inversion integrand about `center` (0 at s = 0 and s = 1) */
zl_status zl_inversion_residue(double u, zl_complex center, double radius,
                               const zl_precision* cfg, zl_complex* out);
/* residue of the identity integrand about `center` */
zl_status zl_integrand_residue(zl_weight weight, int r, double x, zl_complex center, double radius,
                               int nodes, const zl_precision* cfg, zl_complex* out);
/* pointwise integrand value */
zl_status zl_integrand_value(zl_weight weight, int r, double x, zl_complex s,
                             const zl_precision* cfg, zl_complex* out);
/* published closed forms for cross-checking the residues */
zl_status zl_h_term_paper(int r, double x, const zl_precision* cfg, double* out);
zl_status zl_zero_term_paper(zl_identity identity, int r, double x, double gamma,
                             const zl_complex* zeta_prime_opt, const zl_precision* cfg,
                             zl_complex* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ZETALAB_H */
