#include "bernoulli.hpp"

#include <mutex>

#include "errors.hpp"

namespace zetalab {

namespace {

constexpr int kMaxOrder = 60;

using Int = boost::multiprecision::cpp_int;

// B_0..B_n by the defining recurrence sum_{j<=m} C(m+1,j) B_j = 0.
std::vector<Rational> bernoulli_all(int n) {
    std::vector<Rational> b(n + 1);
    b[0] = 1;
    for (int m = 1; m <= n; ++m) {
        if (m > 1 && (m % 2) == 1) {
            b[m] = 0;
            continue;
        }
        Rational acc = 0;
        Int binom = 1; // C(m+1, j), j = 0
        for (int j = 0; j < m; ++j) {
            acc += Rational(binom) * b[j];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        b[m] = -acc / (m + 1);
    }
    return b;
}

} // namespace

std::vector<Rational> bernoulli_numbers(int M) {
    if (M < 1 || M > kMaxOrder) fail(Status::invalid_argument, "bernoulli order must be in [1,60]");
    auto all = bernoulli_all(2 * M);
    std::vector<Rational> out;
    out.reserve(M);
    for (int j = 1; j <= M; ++j) out.push_back(all[2 * j]);
    return out;
}

std::vector<std::string> bernoulli_strings(int M) {
    auto nums = bernoulli_numbers(M);
    std::vector<std::string> out;
    out.reserve(nums.size());
    for (const auto& r : nums) {
        std::string s = r.str();
        if (s.find('/') == std::string::npos) s += "/1";
        out.push_back(s);
    }
    return out;
}

const double* bernoulli_over_factorial(int M) {
    if (M < 1 || M > kMaxOrder) fail(Status::invalid_argument, "bernoulli order must be in [1,60]");
    static const std::vector<double> table = [] {
        auto all = bernoulli_all(2 * kMaxOrder);
        std::vector<double> t(kMaxOrder);
        Int fact = 2; // (2j)!
        for (int j = 1; j <= kMaxOrder; ++j) {
            if (j > 1)
                for (int i = 2 * j - 1; i <= 2 * j; ++i) fact *= i;
            t[j - 1] = static_cast<double>(Rational(all[2 * j]) / Rational(fact));
        }
        return t;
    }();
    return table.data();
}

} // namespace zetalab
