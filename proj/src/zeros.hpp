#pragma once

#include <optional>
#include <string>
#include <vector>

#include "precision.hpp"

namespace zetalab {

enum class ZeroSource { computed, loaded };
enum class RefineMethod { hybrid, bisection, secant };

struct ZeroEntry {
    int index = 0;       // 1-based
    double gamma = 0.0;  // ordinate of rho = 1/2 + i gamma
    std::optional<Complex> zeta_prime;
    double abs_err = 0.0;
};

// Ascending table of critical-line zero ordinates (gamma > 0 only; conjugates
// are handled by the pairing convention in the formula evaluators).
class ZeroTable {
public:
    static constexpr int kMaxCount = 5000;

    // First `count` ordinates, each refined to abs_err <= tol. Deterministic:
    // fixed scan grid (0.05, halved on a counting mismatch), fixed refinement.
    static ZeroTable scan(int count, double tol, const Precision& cfg = {});

    static ZeroTable load(const std::string& path);
    void save(const std::string& path) const;

    // Invariants: strictly increasing gamma, gamma_1 bracket, per-entry
    // |Z(gamma)| <= 1e-8 (revalidation), zero count vs theta(T)/pi + 1.
    void validate(const Precision& cfg = {}) const;

    // Fill zeta_prime for entries that lack it.
    void ensure_zeta_prime(const Precision& cfg = {});

    double max_abs_z(const Precision& cfg = {}) const;

    int count() const { return static_cast<int>(entries_.size()); }
    const ZeroEntry& entry(int k) const; // 1-based
    const std::vector<ZeroEntry>& entries() const { return entries_; }
    ZeroSource source() const { return source_; }
    double t_max() const { return t_max_; }

private:
    std::vector<ZeroEntry> entries_;
    ZeroSource source_ = ZeroSource::computed;
    double t_max_ = 0.0;
};

// Root of Z in a sign-change bracket; bisection fallback guarantees
// convergence.  Width of the final bracket <= tol.
double refine_zero(double t_lo, double t_hi, double tol, const Precision& cfg = {},
                   RefineMethod method = RefineMethod::hybrid);

// zeta'(1/2 + i gamma); warns (stderr) if |zeta'| < 1e-6, since the residue
// bookkeeping assumes simple zeros.
Complex zeta_prime_at_zero(double gamma, const Precision& cfg = {});

} // namespace zetalab
