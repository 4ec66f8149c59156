#pragma once

#include "precision.hpp"

namespace zetalab {

// Lanczos approximation, valid for Re z > 0 (internal callers never need the
// reflection half-plane).
Complex log_gamma(Complex z);
Complex gamma_fn(Complex z);

// Digamma via upward recurrence into the asymptotic region, Re z > 0.
Complex digamma(Complex z);

// sin/cos/cot of pi*z with the real part reduced exactly, so sin_pi(-k) == 0
// for integer k.
Complex sin_pi(Complex z);
Complex cos_pi(Complex z);
Complex cot_pi(Complex z);

// log(sin(pi z)) stable for large |Im z| (where sin overflows).
Complex log_sin_pi(Complex z);

} // namespace zetalab
