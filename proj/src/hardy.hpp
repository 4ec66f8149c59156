#pragma once

#include "precision.hpp"

namespace zetalab {

// Riemann-Siegel theta by the Stirling series, t >= 10, abs error <= 1e-9.
double rs_theta(double t);

// Hardy's function Z(t) = e^{i theta(t)} zeta(1/2 + it); real for real t.
// The imaginary residue is checked internally (<= 1e-8).
double hardy_z(double t, const Precision& cfg = {});

} // namespace zetalab
