#pragma once

#include <cmath>
#include <complex>

#include "errors.hpp"

namespace zetalab {

using Complex = std::complex<double>;

// Accuracy policy shared by all analytic evaluators.
struct Precision {
    int bernoulli_order = 12;        // Euler-Maclaurin correction depth M (uses B_2 .. B_{2M})
    int em_min_terms = 30;           // floor for the main-sum length
    double em_terms_per_2pi = 1.5;   // main-sum slope: N = 10 * ceil(slope * |Im s| / 2pi)
    double target_abs_err = 1e-10;
    int quad_nodes_per_panel = 32;
    double line_cutoff = 2000.0;     // default |Im s| truncation for line integrals

    void validate() const {
        if (bernoulli_order < 4 || bernoulli_order > 60)
            fail(Status::invalid_argument, "bernoulli_order must be in [4,60]");
        if (!(target_abs_err > 0.0) || target_abs_err > 1e-6)
            fail(Status::invalid_argument, "target_abs_err must be in (0, 1e-6]");
        if (em_min_terms < 10) fail(Status::invalid_argument, "em_min_terms must be >= 10");
        if (!(em_terms_per_2pi > 0.0)) fail(Status::invalid_argument, "em_terms_per_2pi must be positive");
        if (quad_nodes_per_panel < 1) fail(Status::invalid_argument, "quad_nodes_per_panel must be >= 1");
        if (!(line_cutoff > 0.0)) fail(Status::invalid_argument, "line_cutoff must be positive");
    }
};

// Main-sum length policy. The 10 + |t|/2 floor keeps the Bernoulli tail
// decreasing no matter how the slope is configured.
inline int em_main_terms(double im_abs, const Precision& cfg) {
    constexpr double two_pi = 6.283185307179586476925287;
    double n = 10.0 * std::ceil(cfg.em_terms_per_2pi * im_abs / two_pi);
    double floor_n = 10.0 + std::ceil(im_abs / 2.0);
    return static_cast<int>(std::max({static_cast<double>(cfg.em_min_terms), n, floor_n}));
}

} // namespace zetalab
