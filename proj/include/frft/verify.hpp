#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "frft/types.hpp"

namespace frft {

/// One verification check at one (alpha, N) grid point. `passed` holds
/// exactly when residual <= tolerance. A check whose statement does not
/// apply at this grid point (e.g. the convolution theorem at a delta-branch
/// angle) is emitted with skipped = true, residual 0 and passed = true, so
/// it is visible in the report without counting as a failure.
struct CheckResult {
    std::string name;
    double alpha = 0.0;
    std::size_t n_points = 0;
    std::uint64_t seed = 0;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    bool skipped = false;
};

struct VerificationReport {
    std::vector<CheckResult> checks; // sorted by (name, alpha, n_points)
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
    std::string tool_version;
    std::string generator;
    std::uint64_t base_seed = 0;
    std::size_t trials = 0;

    bool all_passed() const { return failed == 0; }
};

struct VerifyOptions {
    std::vector<double> alphas;
    std::vector<std::size_t> sizes;
    std::uint64_t seed = 42;
    std::size_t trials = 10;
};

std::vector<double> default_alpha_grid();
std::vector<std::size_t> default_size_grid();

/// Runs the invariant suite (convolution theorem residual, DFT reduction,
/// scaled Parseval, inverse round trip, fast-vs-direct equivalence, matrix
/// non-circulance, kernel symmetry) over the requested grid with seeded
/// deterministic inputs.
VerificationReport run_verification(const VerifyOptions& opts);

/// Deterministic JSON rendering: identical options produce byte-identical
/// text.
std::string report_to_json(const VerificationReport& report);

} // namespace frft
