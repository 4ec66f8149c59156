#include "zeta.hpp"

#include <cmath>
#include <vector>

#include "bernoulli.hpp"
#include "errors.hpp"
#include "parallel.hpp"
#include "special.hpp"

namespace zetalab {

namespace {

constexpr double kPi = 3.141592653589793238462643;
constexpr double kLog2 = 0.693147180559945309417232;
constexpr double kLogPi = 1.144729885849400174143427;
constexpr double kLog2Pi = 1.837877066409345483560659;
constexpr double kZetaImCap = 5000.0;
constexpr double kZetaPrimeImCap = 2000.0;
constexpr double kReflectBelow = -0.5; // Euler-Maclaurin above, functional equation below
constexpr double kSigmaFloor = -168.0; // gamma_fn(1-s) overflows past this

struct ComplexSum {
    CompensatedSum re, im;
    void add(Complex v) {
        re.add(v.real());
        im.add(v.imag());
    }
    Complex result() const { return {re.result(), im.result()}; }
};

// log n for the main sum, precomputed once (covers every N the policy can
// request below the |Im s| caps).
double log_n(int n) {
    constexpr int kLogTable = 16384;
    static const std::vector<double> table = [] {
        std::vector<double> t(kLogTable);
        for (int i = 1; i < kLogTable; ++i) t[i] = std::log(static_cast<double>(i));
        return t;
    }();
    return n < kLogTable ? table[n] : std::log(static_cast<double>(n));
}

// Core expansion; requires Re s >= kReflectBelow, Im s >= 0, s != 1.
ZetaPair em_core(Complex s, const Precision& cfg, bool want_deriv) {
    const int N = em_main_terms(s.imag(), cfg);
    const int M = cfg.bernoulli_order;
    const double* bf = bernoulli_over_factorial(M);

    ComplexSum sum, dsum;
    sum.add(1.0); // n = 1
    if (want_deriv) {
        for (int n = 2; n < N; ++n) {
            double ln = log_n(n);
            Complex e = std::exp(-s * ln);
            sum.add(e);
            dsum.add(-ln * e);
        }
    } else {
        for (int n = 2; n < N; ++n) {
            Complex e = std::exp(-s * log_n(n));
            sum.add(e);
        }
    }
    const double lnN = log_n(N);
    const Complex Nms = std::exp(-s * lnN);          // N^{-s}
    const Complex N1ms = static_cast<double>(N) * Nms; // N^{1-s}
    const Complex sm1 = s - 1.0;

    Complex value = sum.result() + N1ms / sm1 + 0.5 * Nms;
    Complex deriv = 0.0;
    if (want_deriv)
        deriv = dsum.result() - lnN * N1ms / sm1 - N1ms / (sm1 * sm1) - 0.5 * lnN * Nms;

    // Bernoulli corrections: T_j = B_{2j}/(2j)! * P_j(s) * N^{1-s-2j} with
    // P_j = s(s+1)...(s+2j-2); derivative tracked without dividing by P_j.
    Complex P = s, dP = 1.0;
    Complex Npow = Nms / static_cast<double>(N); // N^{-s-1}
    const double invN2 = 1.0 / (static_cast<double>(N) * static_cast<double>(N));
    for (int j = 1; j <= M; ++j) {
        value += bf[j - 1] * P * Npow;
        if (want_deriv) deriv += bf[j - 1] * Npow * (dP - P * lnN);
        if (j < M) {
            Complex a = s + static_cast<double>(2 * j - 1);
            Complex b = s + static_cast<double>(2 * j);
            dP = dP * (a * b) + P * (a + b);
            P *= a * b;
            Npow *= invN2;
        }
    }
    return {value, deriv};
}

Complex p_factor(Complex s) { return std::exp(s * kLog2 + (s - 1.0) * kLogPi); } // 2^s pi^{s-1}

Complex chi_direct(Complex s) { return p_factor(s) * sin_pi(0.5 * s) * gamma_fn(1.0 - s); }

Complex chi_log(Complex s) {
    return s * kLog2 + (s - 1.0) * kLogPi + log_sin_pi(0.5 * s) + log_gamma(1.0 - s);
}

void check_common(Complex s, double im_cap) {
    if (s == Complex(1.0, 0.0)) fail(Status::pole_error, "zeta has a pole at s = 1");
    if (std::abs(s.imag()) > im_cap) fail(Status::range_error, "|Im s| beyond evaluator cap");
    if (s.real() < kSigmaFloor) fail(Status::range_error, "Re s too negative for reflection");
}

// Both value and derivative, Im s >= 0.
ZetaPair eval_upper(Complex s, const Precision& cfg, bool want_deriv) {
    if (s.real() >= kReflectBelow) return em_core(s, cfg, want_deriv);

    // zeta(s) = chi(s) zeta(1-s); the reflected argument has Re >= 1.5
    const Complex w = 1.0 - s;
    ZetaPair zw = em_core(w, cfg, want_deriv);
    ZetaPair out;
    if (std::abs(s.imag()) <= 20.0) {
        Complex chi = chi_direct(s);
        out.value = chi * zw.value;
        if (want_deriv) {
            // chi'(s) expanded so that sin_pi factors stay explicit: exact zero
            // at the trivial zeros instead of 0 * inf from the cot form.
            Complex chi_p = p_factor(s) * gamma_fn(w) *
                            ((kLog2Pi - digamma(w)) * sin_pi(0.5 * s) + 0.5 * kPi * cos_pi(0.5 * s));
            out.deriv = chi_p * zw.value - chi * zw.deriv;
        }
    } else {
        Complex lc = chi_log(s);
        if (lc.real() > 690.0) fail(Status::range_error, "reflection magnitude overflow");
        Complex chi = std::exp(lc);
        out.value = chi * zw.value;
        if (want_deriv) {
            Complex L = kLog2Pi + 0.5 * kPi * cot_pi(0.5 * s) - digamma(w);
            out.deriv = chi * (L * zw.value - zw.deriv);
        }
    }
    return out;
}

ZetaPair eval(Complex s, const Precision& cfg, bool want_deriv) {
    if (s.imag() < 0.0) {
        ZetaPair p = eval_upper(std::conj(s), cfg, want_deriv);
        return {std::conj(p.value), std::conj(p.deriv)};
    }
    return eval_upper(s, cfg, want_deriv);
}

} // namespace

Complex zeta(Complex s, const Precision& cfg) {
    cfg.validate();
    check_common(s, kZetaImCap);
    return eval(s, cfg, false).value;
}

Complex zeta_prime(Complex s, const Precision& cfg) {
    cfg.validate();
    check_common(s, kZetaPrimeImCap);
    return eval(s, cfg, true).deriv;
}

ZetaPair zeta_with_prime(Complex s, const Precision& cfg) {
    cfg.validate();
    check_common(s, kZetaPrimeImCap);
    return eval(s, cfg, true);
}

Complex zeta_alt_oracle(Complex s) {
    if (s.imag() < 0.0) return std::conj(zeta_alt_oracle(std::conj(s)));
    const double sigma = s.real(), t = s.imag();
    if (s == Complex(1.0, 0.0)) fail(Status::pole_error, "zeta has a pole at s = 1");
    if (sigma <= -2.0) fail(Status::domain_error, "alternating-series oracle needs Re s > -2");
    if (t > 100.0) fail(Status::range_error, "alternating-series oracle capped at |Im s| <= 100");

    const Complex q = 1.0 - std::exp((1.0 - s) * kLog2); // 1 - 2^{1-s}
    if (std::abs(q) < 1e-6) fail(Status::domain_error, "1 - 2^{1-s} too close to 0");

    int n = 48 + static_cast<int>(std::ceil(0.9 * t));
    if (sigma < 0.0) n += static_cast<int>(std::ceil(-4.0 * sigma));

    // Chebyshev-weighted alternating sum (the d_k scheme); d_n ~ (3+sqrt 8)^n.
    std::vector<double> d(n + 1);
    double term = 1.0; // i = 0 contribution, n * (n-1)!/n! = 1
    double acc = 1.0;
    d[0] = 1.0;
    for (int i = 1; i <= n; ++i) {
        term *= 4.0 * (n + i - 1.0) * (n - i + 1.0) / ((2.0 * i) * (2.0 * i - 1.0));
        acc += term;
        d[i] = acc;
    }
    ComplexSum sum;
    for (int k = 0; k < n; ++k) {
        double sign = (k % 2 == 0) ? 1.0 : -1.0;
        Complex p = std::exp(-s * std::log(static_cast<double>(k + 1)));
        sum.add(sign * (d[k] - d[n]) * p);
    }
    return -sum.result() / (d[n] * q);
}

double zeta_prime_trivial_closed(int n, const Precision& cfg) {
    if (n < 1 || n > 30) fail(Status::invalid_argument, "closed form supported for n in [1,30]");
    double z = zeta(Complex(2.0 * n + 1.0, 0.0), cfg).real();
    double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return sign * z * std::tgamma(2.0 * n + 1.0) / (std::pow(kPi, 2.0 * n) * std::pow(2.0, 2.0 * n + 1.0));
}

} // namespace zetalab
