#include "frft/verify.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "json.hpp"

#include "frft/convolution.hpp"
#include "frft/kernel.hpp"
#include "frft/rng.hpp"
#include "frft/transform.hpp"
#include "frft/version.hpp"

namespace frft {

namespace {

constexpr double kTheoremTol = 1e-10;      // scaled by 1 + |H|inf * |X|inf
constexpr double kDftReductionTol = 1e-14; // entrywise vs the unitary DFT matrix
constexpr double kParsevalTol = 1e-10;     // relative
constexpr double kRoundTripTol = 1e-10;    // absolute max-norm
constexpr double kFastDirectTol = 1e-10;   // relative max-norm
constexpr double kCirculanceTol = 1e-12;   // entry tolerance inside is_circulant

// Dense-matrix checks get skipped above this size to keep verify runs from
// allocating O(N^2) for very large grids.
constexpr std::size_t kVerifyMatrixCap = 2048;

double linf(const cvec& v) {
    double m = 0.0;
    for (const auto& z : v) m = std::max(m, std::abs(z));
    return m;
}

double max_abs_diff(const cvec& a, const cvec& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

enum CheckId : std::uint64_t {
    kTheorem = 1,
    kDftReduction = 2,
    kParseval = 3,
    kRoundTrip = 4,
    kFastDirect = 5,
    kNonCirculant = 6,
    kKernelSymmetry = 7,
};

CheckResult make_skip(const char* name, const FrftParams& p, std::uint64_t seed,
                      double tolerance) {
    return {name, p.alpha, p.n_points, seed, 0.0, tolerance, true, true};
}

CheckResult check_theorem(const FrftParams& p, std::uint64_t seed, std::size_t trials) {
    if (!p.generic()) return make_skip("theorem_residual", p, seed, kTheoremTol);
    DeterministicRng rng(seed);
    const cvec ea = chirp_table(p);
    double worst = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        const Signal h(rng.complex_vector(p.n_points));
        const Signal x(rng.complex_vector(p.n_points));
        const Spectrum lhs = frft_direct(p, chirp_circular_convolve(p, h, x));
        const Spectrum H = frft_direct(p, h);
        const Spectrum X = frft_direct(p, x);
        const Spectrum rhs = spectral_product(p, H, X);
        const double scale = 1.0 + linf(H.data) * linf(X.data);
        worst = std::max(worst, max_abs_diff(lhs.data, rhs.data) / scale);
    }
    return {"theorem_residual", p.alpha, p.n_points, seed, worst, kTheoremTol,
            worst <= kTheoremTol, false};
}

CheckResult check_dft_reduction(const FrftParams& p, std::uint64_t seed) {
    const bool at_quarter_turn = p.generic() && *p.cot_alpha == 0.0;
    if (!at_quarter_turn || p.n_points > kVerifyMatrixCap) {
        return make_skip("dft_reduction", p, seed, kDftReductionTol);
    }
    const std::size_t N = p.n_points;
    const FrftMatrix m = build_matrix(p);
    const double scale = 1.0 / std::sqrt(static_cast<double>(N));
    double worst = 0.0;
    for (std::size_t n = 0; n < N; ++n) {
        for (std::size_t k = 0; k < N; ++k) {
            const double theta =
                -2.0 * M_PI * static_cast<double>((n * k) % N) / static_cast<double>(N);
            worst = std::max(worst, std::abs(m.at(n, k) - std::polar(scale, theta)));
        }
    }
    return {"dft_reduction", p.alpha, p.n_points, seed, worst, kDftReductionTol,
            worst <= kDftReductionTol, false};
}

CheckResult check_parseval(const FrftParams& p, std::uint64_t seed, std::size_t trials) {
    if (!p.generic()) return make_skip("scaled_parseval", p, seed, kParsevalTol);
    DeterministicRng rng(seed);
    const double csc = 1.0 / std::abs(std::sin(p.alpha));
    double worst = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        const Signal x(rng.complex_vector(p.n_points));
        const Spectrum X = frft_direct(p, x);
        double ex = 0.0, eX = 0.0;
        for (const auto& z : x.data) ex += std::norm(z);
        for (const auto& z : X.data) eX += std::norm(z);
        worst = std::max(worst, std::abs(eX - csc * ex) / (csc * ex));
    }
    return {"scaled_parseval", p.alpha, p.n_points, seed, worst, kParsevalTol,
            worst <= kParsevalTol, false};
}

CheckResult check_round_trip(const FrftParams& p, std::uint64_t seed, std::size_t trials) {
    DeterministicRng rng(seed);
    double worst = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        const Signal x(rng.complex_vector(p.n_points));
        const Signal back = ifrft(p, frft_direct(p, x));
        worst = std::max(worst, max_abs_diff(back.data, x.data));
    }
    return {"round_trip", p.alpha, p.n_points, seed, worst, kRoundTripTol,
            worst <= kRoundTripTol, false};
}

CheckResult check_fast_direct(const FrftParams& p, std::uint64_t seed, std::size_t trials) {
    DeterministicRng rng(seed);
    double worst = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        const Signal x(rng.complex_vector(p.n_points));
        const Spectrum d = frft_direct(p, x);
        const Spectrum f = frft_fast(p, x);
        const double denom = std::max(linf(d.data), 1e-300);
        worst = std::max(worst, max_abs_diff(d.data, f.data) / denom);
    }
    return {"fast_direct_equivalence", p.alpha, p.n_points, seed, worst, kFastDirectTol,
            worst <= kFastDirectTol, false};
}

CheckResult check_noncirculant(const FrftParams& p, std::uint64_t seed) {
    if (p.n_points > kVerifyMatrixCap) {
        return make_skip("matrix_circulance", p, seed, 0.0);
    }
    bool expected = false;
    if (p.branch == AngleBranch::Identity) {
        expected = true;
    } else if (p.branch == AngleBranch::Reversal) {
        expected = p.n_points <= 2; // modular reversal is circulant only there
    } else {
        // The generic matrix is circulant exactly when cot(alpha) - 1/N is an
        // integer; skip the check in that measure-zero family.
        const double d = *p.cot_alpha - 1.0 / static_cast<double>(p.n_points);
        if (std::abs(d - std::round(d)) < 1e-9) {
            return make_skip("matrix_circulance", p, seed, 0.0);
        }
        expected = false;
    }
    const CirculanceCheck got = is_circulant(build_matrix(p), kCirculanceTol);
    const double residual = got.circulant == expected ? 0.0 : 1.0;
    return {"matrix_circulance", p.alpha, p.n_points, seed, residual, 0.0,
            residual == 0.0, false};
}

CheckResult check_kernel_symmetry(const FrftParams& p, std::uint64_t seed) {
    if (p.n_points > kVerifyMatrixCap) {
        return make_skip("kernel_symmetry", p, seed, 0.0);
    }
    const FrftMatrix m = build_matrix(p);
    double worst = 0.0;
    for (std::size_t n = 0; n < p.n_points; ++n) {
        for (std::size_t k = n + 1; k < p.n_points; ++k) {
            worst = std::max(worst, std::abs(m.at(n, k) - m.at(k, n)));
        }
    }
    return {"kernel_symmetry", p.alpha, p.n_points, seed, worst, 0.0, worst <= 0.0,
            false};
}

} // namespace

std::vector<double> default_alpha_grid() {
    return {0.3, 0.7, M_PI / 4.0, M_PI / 2.0, 1.9, 2.7};
}

std::vector<std::size_t> default_size_grid() { return {4, 8, 16, 64}; }

VerificationReport run_verification(const VerifyOptions& opts) {
    VerificationReport report;
    report.tool_version = kToolVersion;
    report.generator = kGeneratorName;
    report.base_seed = opts.seed;
    report.trials = opts.trials;

    const auto alphas = opts.alphas.empty() ? default_alpha_grid() : opts.alphas;
    const auto sizes = opts.sizes.empty() ? default_size_grid() : opts.sizes;
    if (opts.trials < 1) {
        throw FrftError(ErrorCode::Usage, "verify: trials must be at least 1");
    }

    for (std::size_t ai = 0; ai < alphas.size(); ++ai) {
        for (std::size_t ni = 0; ni < sizes.size(); ++ni) {
            const FrftParams p = make_params(alphas[ai], sizes[ni]);
            const auto seed_for = [&](std::uint64_t check) {
                return mix_seed(opts.seed, check, ai, ni);
            };
            report.checks.push_back(check_theorem(p, seed_for(kTheorem), opts.trials));
            report.checks.push_back(check_dft_reduction(p, seed_for(kDftReduction)));
            report.checks.push_back(check_parseval(p, seed_for(kParseval), opts.trials));
            report.checks.push_back(check_round_trip(p, seed_for(kRoundTrip), opts.trials));
            report.checks.push_back(
                check_fast_direct(p, seed_for(kFastDirect), opts.trials));
            report.checks.push_back(check_noncirculant(p, seed_for(kNonCirculant)));
            report.checks.push_back(
                check_kernel_symmetry(p, seed_for(kKernelSymmetry)));
        }
    }

    std::sort(report.checks.begin(), report.checks.end(),
              [](const CheckResult& a, const CheckResult& b) {
                  return std::tie(a.name, a.alpha, a.n_points) <
                         std::tie(b.name, b.alpha, b.n_points);
              });

    report.total = report.checks.size();
    for (const auto& c : report.checks) {
        if (c.skipped) {
            ++report.skipped;
        } else if (c.passed) {
            ++report.passed;
        } else {
            ++report.failed;
        }
    }
    return report;
}

std::string report_to_json(const VerificationReport& report) {
    nlohmann::ordered_json j;
    j["tool_version"] = report.tool_version;
    j["generator"] = report.generator;
    j["seed"] = report.base_seed;
    j["trials"] = report.trials;
    auto& checks = j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        checks.push_back({{"name", c.name},
                          {"alpha", c.alpha},
                          {"n_points", c.n_points},
                          {"seed", c.seed},
                          {"residual", c.residual},
                          {"tolerance", c.tolerance},
                          {"passed", c.passed},
                          {"skipped", c.skipped}});
    }
    j["summary"] = {{"total", report.total},
                    {"passed", report.passed},
                    {"failed", report.failed},
                    {"skipped", report.skipped}};
    return j.dump(2) + "\n";
}

} // namespace frft
