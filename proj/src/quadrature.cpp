#include "quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "errors.hpp"
#include "parallel.hpp"

namespace zetalab {

namespace {
constexpr double kPi = 3.141592653589793238462643;

GaussRule make_gauss(int n) {
    GaussRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        // Newton from the Chebyshev-angle initial guess
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        r.nodes[n - 1 - i] = x;
        r.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

} // namespace

const GaussRule& gauss_legendre(int n) {
    if (n < 1 || n > 256) fail(Status::invalid_argument, "gauss order must be in [1,256]");
    static std::map<int, GaussRule> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, make_gauss(n)).first;
    return it->second;
}

Complex circle_integral(const std::function<Complex(Complex)>& f, Complex center, double radius,
                        int nodes) {
    std::vector<Complex> vals(nodes);
    parallel_for(static_cast<std::size_t>(nodes), [&](std::size_t j) {
        double th = 2.0 * kPi * static_cast<double>(j) / nodes;
        Complex e(std::cos(th), std::sin(th));
        vals[j] = f(center + radius * e) * e;
    });
    CompensatedSum re, im;
    for (const Complex& v : vals) {
        re.add(v.real());
        im.add(v.imag());
    }
    return radius / static_cast<double>(nodes) * Complex(re.result(), im.result());
}

} // namespace zetalab
