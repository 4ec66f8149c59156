#include "arith.hpp"

#include <cmath>

#include "parallel.hpp"

namespace zetalab {

namespace {

constexpr std::uint64_t kBlock = 1u << 20; // fixed so parallel builds are deterministic

std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
    std::vector<bool> comp(n + 1, false);
    std::vector<std::uint32_t> primes;
    for (std::uint32_t p = 2; p <= n; ++p) {
        if (comp[p]) continue;
        primes.push_back(p);
        for (std::uint64_t q = static_cast<std::uint64_t>(p) * p; q <= n; q += p) comp[q] = true;
    }
    return primes;
}

void check_limit(std::uint64_t limit) {
    if (limit == 0) fail(Status::size_error, "table limit must be >= 1");
    if (limit > ArithTable::kMaxLimit) fail(Status::size_error, "table limit above memory cap");
}

} // namespace

ArithTable ArithTable::build(Weight kind, std::uint64_t limit) {
    check_limit(limit);
    ArithTable t(kind, limit);
    const auto root = static_cast<std::uint32_t>(std::sqrt(static_cast<double>(limit)));
    const auto base = primes_up_to(root > 1 ? root : 1);
    const std::uint64_t nblocks = (limit + kBlock) / kBlock; // blocks over [1, limit]

    if (kind == Weight::lambda) {
        t.lambda_.assign(limit + 1, 0.0);
        parallel_for(nblocks, [&](std::size_t b) {
            const std::uint64_t lo = b * kBlock < 2 ? 2 : b * kBlock;
            const std::uint64_t hi = std::min(limit + 1, (b + 1) * kBlock);
            if (lo >= hi) return;
            std::vector<bool> comp(hi - lo, false);
            for (std::uint32_t p : base) {
                std::uint64_t start = std::max<std::uint64_t>(static_cast<std::uint64_t>(p) * p,
                                                              (lo + p - 1) / p * p);
                for (std::uint64_t m = start; m < hi; m += p) comp[m - lo] = true;
            }
            for (std::uint64_t n = lo; n < hi; ++n)
                if (!comp[n - lo]) t.lambda_[n] = std::log(static_cast<double>(n));
        });
        // prime powers share the base prime's log
        for (std::uint32_t p : base) {
            const double lp = std::log(static_cast<double>(p));
            for (std::uint64_t q = static_cast<std::uint64_t>(p) * p; q <= limit; q *= p) {
                t.lambda_[q] = lp;
                if (q > limit / p) break;
            }
        }
    } else {
        t.mu_.assign(limit + 1, 0);
        parallel_for(nblocks, [&](std::size_t b) {
            const std::uint64_t lo = b * kBlock < 1 ? 1 : b * kBlock;
            const std::uint64_t hi = std::min(limit + 1, (b + 1) * kBlock);
            if (lo >= hi) return;
            const std::size_t len = hi - lo;
            std::vector<std::int8_t> mu(len, 1);
            std::vector<std::uint64_t> rem(len);
            for (std::size_t i = 0; i < len; ++i) rem[i] = lo + i;
            for (std::uint32_t p : base) {
                std::uint64_t start = (lo + p - 1) / p * p;
                for (std::uint64_t m = start; m < hi; m += p) {
                    std::size_t i = m - lo;
                    int cnt = 0;
                    while (rem[i] % p == 0) {
                        rem[i] /= p;
                        ++cnt;
                    }
                    if (cnt >= 2)
                        mu[i] = 0;
                    else
                        mu[i] = static_cast<std::int8_t>(-mu[i]);
                }
            }
            for (std::size_t i = 0; i < len; ++i)
                if (mu[i] != 0 && rem[i] > 1) mu[i] = static_cast<std::int8_t>(-mu[i]);
            for (std::size_t i = 0; i < len; ++i) t.mu_[lo + i] = mu[i];
        });
        t.mu_[1] = 1;
    }
    return t;
}

double ArithTable::value(std::uint64_t n) const {
    if (n < 1 || n > limit_) fail(Status::range_error, "index outside table");
    return kind_ == Weight::lambda ? lambda_[n] : static_cast<double>(mu_[n]);
}

std::int8_t ArithTable::mu_value(std::uint64_t n) const {
    if (kind_ != Weight::mu) fail(Status::invalid_argument, "mu_value on a lambda table");
    if (n < 1 || n > limit_) fail(Status::range_error, "index outside table");
    return mu_[n];
}

double ArithTable::chebyshev_psi(double x) const {
    if (kind_ != Weight::lambda) fail(Status::invalid_argument, "chebyshev_psi needs a lambda table");
    if (!(x >= 1.0)) fail(Status::range_error, "chebyshev_psi needs x >= 1");
    if (x > static_cast<double>(limit_)) fail(Status::range_error, "x beyond table limit");
    const auto top = static_cast<std::uint64_t>(x);
    CompensatedSum acc;
    for (std::uint64_t n = 2; n <= top; ++n) acc.add(lambda_[n]);
    return acc.result();
}

std::int64_t ArithTable::mertens(double x) const {
    if (kind_ != Weight::mu) fail(Status::invalid_argument, "mertens needs a mu table");
    if (!(x >= 1.0)) fail(Status::range_error, "mertens needs x >= 1");
    if (x > static_cast<double>(limit_)) fail(Status::range_error, "x beyond table limit");
    const auto top = static_cast<std::uint64_t>(x);
    std::int64_t acc = 0;
    for (std::uint64_t n = 1; n <= top; ++n) acc += mu_[n];
    return acc;
}

} // namespace zetalab
