#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "errors.hpp"

namespace zetalab {

enum class Weight { lambda, mu };

// Immutable table of Lambda(n) or mu(n) for n = 1..limit.  Construction is
// block-sieved (fixed block size, parallel-safe, deterministic); queries are
// read-only and reentrant.
class ArithTable {
public:
    // ~1.6 GB of doubles for the lambda kind; documented memory cap.
    static constexpr std::uint64_t kMaxLimit = 200'000'000;

    static ArithTable build(Weight kind, std::uint64_t limit);

    Weight kind() const { return kind_; }
    std::uint64_t limit() const { return limit_; }

    // Lambda(n) (= log p at prime powers p^k) or mu(n) as a double.
    double value(std::uint64_t n) const;
    std::int8_t mu_value(std::uint64_t n) const;

    // psi(x) = sum_{n<=x} Lambda(n); requires kind == lambda, 1 <= x <= limit.
    double chebyshev_psi(double x) const;

    // M(x) = sum_{n<=x} mu(n); requires kind == mu, 1 <= x <= limit.
    std::int64_t mertens(double x) const;

private:
    ArithTable(Weight kind, std::uint64_t limit) : kind_(kind), limit_(limit) {}

    Weight kind_;
    std::uint64_t limit_;
    std::vector<double> lambda_;   // index 0 unused
    std::vector<std::int8_t> mu_;  // index 0 unused
};

} // namespace zetalab
