#include "zeros.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "hardy.hpp"
#include "parallel.hpp"
#include "zeta.hpp"

namespace zetalab {

namespace {

constexpr double kPi = 3.141592653589793238462643;
constexpr double kScanStart = 10.0;
constexpr double kScanBlock = 50.0;
constexpr double kGridStep = 0.05;
constexpr double kScanCap = 5000.0;
constexpr char kMagic[] = "# zetalab-zeros v1";
constexpr char kHeader[] = "k,gamma,zeta_prime_re,zeta_prime_im,abs_err";

double expected_count(double T) { return rs_theta(T) / kPi + 1.0; }

} // namespace

double refine_zero(double t_lo, double t_hi, double tol, const Precision& cfg, RefineMethod method) {
    if (!(t_lo < t_hi)) fail(Status::invalid_argument, "empty bracket");
    if (!(tol >= 1e-12)) fail(Status::invalid_argument, "tol must be >= 1e-12");
    double f_lo = hardy_z(t_lo, cfg);
    double f_hi = hardy_z(t_hi, cfg);
    if (f_lo == 0.0) return t_lo;
    if (f_hi == 0.0) return t_hi;
    if ((f_lo > 0.0) == (f_hi > 0.0))
        fail(Status::invalid_argument, "bracket endpoints have the same sign");

    int side = 0; // Illinois bookkeeping: which endpoint was kept last
    for (int it = 0; it < 200 && t_hi - t_lo > tol; ++it) {
        double mid;
        if (method == RefineMethod::bisection) {
            mid = 0.5 * (t_lo + t_hi);
        } else {
            // false position; Illinois weighting stops one-sided stalling.
            // The hybrid flavor additionally forces a bisection step whenever
            // the interpolant lands too close to an endpoint.
            mid = (t_lo * f_hi - t_hi * f_lo) / (f_hi - f_lo);
            double margin = 1e-3 * (t_hi - t_lo);
            if (method == RefineMethod::hybrid && !(mid > t_lo + margin && mid < t_hi - margin))
                mid = 0.5 * (t_lo + t_hi);
            else
                mid = std::clamp(mid, t_lo + 0.25 * margin, t_hi - 0.25 * margin);
        }
        double f_mid = hardy_z(mid, cfg);
        if (f_mid == 0.0) {
            t_lo = t_hi = mid;
            break;
        }
        if ((f_mid > 0.0) == (f_lo > 0.0)) {
            t_lo = mid;
            f_lo = f_mid;
            if (side == -1) f_hi *= 0.5;
            side = -1;
        } else {
            t_hi = mid;
            f_hi = f_mid;
            if (side == +1) f_lo *= 0.5;
            side = +1;
        }
    }
    if (t_hi - t_lo > tol)
        fail(Status::convergence_error, "bracket refinement stalled near t = " + std::to_string(t_lo));
    double gamma = 0.5 * (t_lo + t_hi);
    if (std::abs(hardy_z(gamma, cfg)) > 1e-8)
        fail(Status::convergence_error, "refined ordinate fails |Z| <= 1e-8 near t = " + std::to_string(gamma));
    return gamma;
}

Complex zeta_prime_at_zero(double gamma, const Precision& cfg) {
    Complex zp = zeta_with_prime(Complex(0.5, gamma), cfg).deriv;
    if (std::abs(zp) < 1e-6)
        std::fprintf(stderr, "zetalab: warning: |zeta'(rho)| < 1e-6 at gamma=%.9f (multiplicity?)\n", gamma);
    return zp;
}

ZeroTable ZeroTable::scan(int count, double tol, const Precision& cfg) {
    if (count < 1 || count > kMaxCount) fail(Status::invalid_argument, "zero count must be in [1,5000]");
    if (!(tol >= 1e-12)) fail(Status::invalid_argument, "tol must be >= 1e-12");

    ZeroTable table;
    table.source_ = ZeroSource::computed;
    double block_lo = kScanStart;
    while (table.count() < count) {
        if (block_lo >= kScanCap) fail(Status::range_error, "scan exceeded evaluator range");
        const double block_hi = std::min(block_lo + kScanBlock, kScanCap);
        double step = kGridStep;
        for (int attempt = 0;; ++attempt) {
            if (attempt > 6)
                fail(Status::convergence_error,
                     "zero count mismatch persists in block starting at t = " + std::to_string(block_lo));
            const auto npts = static_cast<std::size_t>(std::floor((block_hi - block_lo) / step)) + 1;
            std::vector<double> z(npts);
            parallel_for(npts, [&](std::size_t i) { z[i] = hardy_z(block_lo + static_cast<double>(i) * step, cfg); });

            std::vector<std::pair<double, double>> brackets;
            for (std::size_t i = 0; i + 1 < npts; ++i) {
                double a = block_lo + static_cast<double>(i) * step;
                if (z[i] == 0.0) brackets.emplace_back(a - 0.25 * step, a + 0.25 * step);
                else if ((z[i] > 0.0) != (z[i + 1] > 0.0)) brackets.emplace_back(a, a + step);
            }
            // counting cross-check; |S(T)| < 1 slack avoids spurious rescans
            double expect = expected_count(block_hi) - expected_count(std::max(block_lo, kScanStart + 1e-9));
            double found_here = static_cast<double>(brackets.size());
            if (block_lo == kScanStart) expect = expected_count(block_hi);
            if (std::abs(found_here - expect) >= 2.0) {
                step *= 0.5;
                continue;
            }
            std::vector<double> gammas(brackets.size());
            parallel_for(brackets.size(), [&](std::size_t i) {
                gammas[i] = refine_zero(brackets[i].first, brackets[i].second, tol, cfg);
            });
            for (double g : gammas) {
                if (table.count() >= count) break;
                ZeroEntry e;
                e.index = table.count() + 1;
                e.gamma = g;
                e.abs_err = 0.5 * tol;
                table.entries_.push_back(e);
            }
            break;
        }
        block_lo = block_hi;
    }
    table.t_max_ = table.entries_.back().gamma;
    return table;
}

void ZeroTable::ensure_zeta_prime(const Precision& cfg) {
    parallel_for(entries_.size(), [&](std::size_t i) {
        if (!entries_[i].zeta_prime) entries_[i].zeta_prime = zeta_prime_at_zero(entries_[i].gamma, cfg);
    });
}

const ZeroEntry& ZeroTable::entry(int k) const {
    if (k < 1 || k > count()) fail(Status::range_error, "zero index out of range");
    return entries_[static_cast<std::size_t>(k) - 1];
}

double ZeroTable::max_abs_z(const Precision& cfg) const {
    std::vector<double> vals(entries_.size());
    parallel_for(entries_.size(), [&](std::size_t i) { vals[i] = std::abs(hardy_z(entries_[i].gamma, cfg)); });
    double m = 0.0;
    for (double v : vals) m = std::max(m, v);
    return m;
}

void ZeroTable::validate(const Precision& cfg) const {
    if (entries_.empty()) fail(Status::validation_error, "empty zero table");
    for (int k = 0; k < count(); ++k) {
        if (entries_[k].index != k + 1) fail(Status::validation_error, "zero indices must be 1,2,...");
        if (k > 0 && !(entries_[k].gamma > entries_[k - 1].gamma))
            fail(Status::validation_error, "gamma values must be strictly increasing");
    }
    if (!(entries_[0].gamma > 14.1 && entries_[0].gamma < 14.2))
        fail(Status::validation_error, "gamma_1 outside (14.1, 14.2)");
    if (max_abs_z(cfg) > 1e-8) fail(Status::validation_error, "stored ordinate fails |Z(gamma)| <= 1e-8");
    // counting formula; S(T) keeps the fractional part within +-1 of the truth
    double expect = expected_count(t_max_ + 1e-9);
    if (std::abs(static_cast<double>(count()) - expect) > 1.25)
        fail(Status::validation_error, "zero count disagrees with theta(T)/pi + 1");
}

void ZeroTable::save(const std::string& path) const {
    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) fail(Status::io_error, "cannot open " + path + " for writing");
    std::fprintf(f, "%s\n%s\n", kMagic, kHeader);
    for (const auto& e : entries_) {
        if (e.zeta_prime)
            std::fprintf(f, "%d,%.12f,%.17g,%.17g,%.3e\n", e.index, e.gamma, e.zeta_prime->real(),
                         e.zeta_prime->imag(), e.abs_err);
        else
            std::fprintf(f, "%d,%.12f,,,%.3e\n", e.index, e.gamma, e.abs_err);
    }
    std::fclose(f);
}

ZeroTable ZeroTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Status::io_error, "cannot open " + path);
    std::string line;
    int lineno = 0;
    auto parse_fail = [&](const std::string& why) {
        fail(Status::parse_error, path + ":" + std::to_string(lineno) + ": " + why);
    };
    if (!std::getline(in, line)) parse_fail("missing header");
    ++lineno;
    if (line != kMagic) parse_fail("bad magic line (expected '" + std::string(kMagic) + "')");
    if (!std::getline(in, line)) parse_fail("missing column header");
    ++lineno;
    if (line != kHeader) parse_fail("bad column header");

    ZeroTable table;
    table.source_ = ZeroSource::loaded;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::array<std::string, 5> col;
        std::size_t pos = 0;
        for (int c = 0; c < 5; ++c) {
            std::size_t comma = line.find(',', pos);
            if (c < 4 && comma == std::string::npos) parse_fail("expected 5 comma-separated columns");
            col[c] = line.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            pos = comma + 1;
        }
        ZeroEntry e;
        try {
            e.index = std::stoi(col[0]);
            e.gamma = std::stod(col[1]);
            e.abs_err = std::stod(col[4]);
            if (col[2].empty() != col[3].empty()) parse_fail("zeta_prime columns must be both set or both empty");
            if (!col[2].empty()) e.zeta_prime = Complex(std::stod(col[2]), std::stod(col[3]));
        } catch (const std::exception&) {
            parse_fail("malformed numeric field");
        }
        if (!table.entries_.empty() && !(e.gamma > table.entries_.back().gamma))
            fail(Status::validation_error,
                 path + ":" + std::to_string(lineno) + ": gamma values out of order");
        table.entries_.push_back(e);
    }
    if (table.entries_.empty()) fail(Status::parse_error, path + ": no zero rows");
    table.t_max_ = table.entries_.back().gamma;
    return table;
}

} // namespace zetalab
