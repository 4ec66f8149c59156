#include "special.hpp"

#include <cmath>

namespace zetalab {

namespace {

constexpr double kPi = 3.141592653589793238462643;
constexpr double kLog2Pi = 1.837877066409345483560659;

// Lanczos g = 7, n = 9 coefficient set.
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

} // namespace

Complex log_gamma(Complex z) {
    // shift so the series is evaluated at Re >= 1
    Complex zm1 = z - 1.0;
    Complex a = kLanczos[0];
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (zm1 + static_cast<double>(i));
    Complex t = zm1 + 7.5;
    return 0.5 * kLog2Pi + (zm1 + 0.5) * std::log(t) - t + std::log(a);
}

Complex gamma_fn(Complex z) { return std::exp(log_gamma(z)); }

Complex digamma(Complex z) {
    Complex acc = 0.0;
    while (z.real() < 10.0) {
        acc -= 1.0 / z;
        z += 1.0;
    }
    // asymptotic series: log z - 1/(2z) - sum B_2j / (2j z^{2j})
    static const double coef[7] = {
        1.0 / 12.0,   -1.0 / 120.0,   1.0 / 252.0,  -1.0 / 240.0,
        1.0 / 132.0,  -691.0 / 32760.0, 1.0 / 12.0,
    };
    Complex inv2 = 1.0 / (z * z);
    Complex term = inv2;
    Complex series = 0.0;
    for (int j = 0; j < 7; ++j) {
        series += coef[j] * term;
        term *= inv2;
    }
    return acc + std::log(z) - 0.5 / z - series;
}

Complex sin_pi(Complex z) {
    double x = z.real(), y = z.imag();
    double n = std::round(x);
    double f = x - n; // |f| <= 1/2, exact
    double sf = std::sin(kPi * f), cf = std::cos(kPi * f);
    double parity = std::fmod(n, 2.0) == 0.0 ? 1.0 : -1.0;
    // sin(pi(f+iy)) = sin(pi f)cosh(pi y) + i cos(pi f)sinh(pi y)
    return parity * Complex(sf * std::cosh(kPi * y), cf * std::sinh(kPi * y));
}

Complex cos_pi(Complex z) {
    double x = z.real(), y = z.imag();
    double n = std::round(x);
    double f = x - n;
    double sf = std::sin(kPi * f), cf = std::cos(kPi * f);
    double parity = std::fmod(n, 2.0) == 0.0 ? 1.0 : -1.0;
    return parity * Complex(cf * std::cosh(kPi * y), -sf * std::sinh(kPi * y));
}

Complex cot_pi(Complex z) {
    double y = z.imag();
    if (y > 20.0) return Complex(0.0, -1.0);
    if (y < -20.0) return Complex(0.0, 1.0);
    return cos_pi(z) / sin_pi(z);
}

Complex log_sin_pi(Complex z) {
    double y = z.imag();
    const Complex i(0.0, 1.0);
    if (y > 20.0) {
        // sin(pi z) = -e^{-i pi z}(1 - e^{2 i pi z}) / (2i)
        return -i * kPi * z - std::log(Complex(0.0, 2.0)) + std::log(1.0 - std::exp(2.0 * i * kPi * z)) + Complex(0.0, kPi);
    }
    if (y < -20.0) {
        return i * kPi * z - std::log(Complex(0.0, -2.0)) + std::log(1.0 - std::exp(-2.0 * i * kPi * z)) - Complex(0.0, kPi);
    }
    return std::log(sin_pi(z));
}

} // namespace zetalab
