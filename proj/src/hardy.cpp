#include "hardy.hpp"

#include <cmath>

#include "errors.hpp"
#include "zeta.hpp"

namespace zetalab {

namespace {
constexpr double kPi = 3.141592653589793238462643;
constexpr double kHardyCapLow = 10.0;
constexpr double kHardyCapHigh = 5000.0; // matches the zeta evaluator range
} // namespace

double rs_theta(double t) {
    if (t < kHardyCapLow) fail(Status::range_error, "rs_theta needs t >= 10");
    double half = 0.5 * t;
    double t2 = t * t;
    // the t^{-5} term is required to hold 1e-9 down at t = 10
    return half * std::log(half / kPi) - half - kPi / 8.0 + 1.0 / (48.0 * t) +
           7.0 / (5760.0 * t * t2) + 31.0 / (80640.0 * t2 * t2 * t);
}

double hardy_z(double t, const Precision& cfg) {
    if (t < kHardyCapLow || t > kHardyCapHigh) fail(Status::range_error, "hardy_z needs 10 <= t <= 5000");
    Complex z = zeta(Complex(0.5, t), cfg);
    double th = rs_theta(t);
    Complex w = Complex(std::cos(th), std::sin(th)) * z;
    if (std::abs(w.imag()) > 1e-8) fail(Status::internal_error, "hardy_z imaginary residue above 1e-8");
    return w.real();
}

} // namespace zetalab
