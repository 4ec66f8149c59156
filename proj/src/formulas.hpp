#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arith.hpp"
#include "precision.hpp"
#include "zeros.hpp"

namespace zetalab {

enum class Identity { popov_eq11, theorem1, mobius_thm21 };
enum class RhsMode { paper_verbatim, residue_oracle, both };

const char* identity_name(Identity id);
const char* weight_name(Weight w);

struct FormulaParams {
    Identity identity = Identity::popov_eq11;
    Weight weight = Weight::lambda;
    int r = 1;
    double x = 10.5;
    std::uint64_t n_terms = 10'000'000;
    int n_zeros = 1000;
    int n_trivial = 40;
    RhsMode rhs_mode = RhsMode::both;

    void validate() const;

    // The identity as published: Popov's formula carries the full series on
    // the left (no 1/2), so its two sides are twice the r = 1 theorem form.
    double identity_scale() const { return identity == Identity::popov_eq11 ? 2.0 : 1.0; }

    bool want_paper() const { return rhs_mode != RhsMode::residue_oracle; }
    bool want_oracle() const { return rhs_mode != RhsMode::paper_verbatim; }
};

struct SideBreakdown {
    double value = 0.0;
    std::map<std::string, double> components;
    double tail_estimate = 0.0;
    double imag_residue = 0.0;
};

struct VerificationReport {
    FormulaParams params;
    SideBreakdown lhs;
    std::optional<SideBreakdown> rhs_paper;
    std::optional<SideBreakdown> rhs_oracle;
    double residual_paper = 0.0;
    double residual_oracle = 0.0;
    double pass_bound = 0.0;
    bool pass = false;
    std::int64_t runtime_ms = 0;

    std::string to_json() const;
};

// {u} - {u}^2, in [0, 1/4].
double frac_weight(double u);

// Truncated left side, 1/2 * sum_{x < n <= n_terms} a(n) frac_weight(n/x) / n^{r+1},
// compensated ascending summation in fixed blocks.
SideBreakdown lhs_series(const FormulaParams& p, const ArithTable& t);

// The published constant term of the exponent-r identity (refuses r = 2,
// where the printed expression divides by 2 - r).
double h_r_paper(int r, double x, const Precision& cfg = {});

// Integrand of the shifted-line representation; weight selects the Dirichlet
// factor: zeta'/zeta for Lambda, -1/zeta for mu (the series sum mu(n) n^{-w}
// = 1/zeta(w) enters with the opposite sign from -zeta'/zeta, which is what
// lets one global sign serve every identity).
Complex integrand(Weight w, int r, double x, Complex s, const Precision& cfg = {});

// Residue by a trapezoidal circle contour.  With check_stability the result
// is recomputed at radius/2 and a disagreement > 1e-8 raises an instability
// error (pole leakage).
Complex residue_via_circle(const std::function<Complex(Complex)>& f, Complex center, double radius,
                           int nodes, bool check_stability = true);

// Closed-form per-zero and per-k terms in each identity's published scale.
Complex zero_term_paper(const FormulaParams& p, const ZeroEntry& z, const Precision& cfg = {});
double trivial_term_paper(const FormulaParams& p, int k, const Precision& cfg = {});

struct RhsComponent {
    double value = 0.0;
    double tail = 0.0;
    double imag_residue = 0.0;
};

// Sum over the first n_zeros zeros, each term 2 Re(term at 1/2 + i gamma).
// With oracle=true the terms are circle residues of the integrand (times the
// identity scale); otherwise the published coefficients.  paired_terms, when
// non-null, receives the individual paired terms.
RhsComponent rhs_zero_sum(const FormulaParams& p, const ZeroTable& zt, const Precision& cfg,
                          bool oracle, std::vector<double>* paired_terms = nullptr);

RhsComponent rhs_trivial_sum(const FormulaParams& p, const Precision& cfg, bool oracle);

// Constant term: published closed form or the circle residue at s = 1
// (r = 1) / s = 2 - r (r > 1).
RhsComponent rhs_h_term(const FormulaParams& p, const Precision& cfg, bool oracle);

SideBreakdown rhs_total(const FormulaParams& p, const ZeroTable& zt, const Precision& cfg, bool oracle);

struct MellinCheck {
    Complex lhs;       // quadrature of int_1^inf t^{-s-1}({t} - 1/2) dt
    Complex rhs;       // (s+1)/(2s(s-1)) - zeta(s)/s
    double diff = 0.0;
    double tail_bound = 0.0;
};
MellinCheck mellin_pair_check(Complex s, const Precision& cfg = {});

struct InversionCheck {
    double line_integral = 0.0;
    double closed = 0.0;
    double diff = 0.0;
};
// Vertical-line integral of ((s+1)/(2s(s-1)) - zeta(s)/s) u^{s+1}/(s+1) on
// Re s = a, |Im s| <= T, against ({u}^2 - {u})/2.
InversionCheck inversion_check(double u, double a, double T, const Precision& cfg = {});

// Residue of the same line integrand around `center` (the s = 0 and s = 1
// poles both cancel; expected 0).
Complex inversion_integrand_residue(double u, Complex center, double radius,
                                    const Precision& cfg = {});

VerificationReport verify(const FormulaParams& p, const ArithTable& t, const ZeroTable& zt,
                          const Precision& cfg = {});

} // namespace zetalab
