#pragma once

#include <functional>
#include <vector>

#include "precision.hpp"

namespace zetalab {

struct GaussRule {
    std::vector<double> nodes;   // on [-1, 1]
    std::vector<double> weights;
};

// Gauss-Legendre rule, computed once per order (Newton on P_n), cached.
const GaussRule& gauss_legendre(int n);

// (1/2(pi)i) contour integral of f around |s - center| = radius by the
// trapezoidal rule; spectrally accurate for f analytic on the circle.
Complex circle_integral(const std::function<Complex(Complex)>& f, Complex center, double radius,
                        int nodes);

} // namespace zetalab
