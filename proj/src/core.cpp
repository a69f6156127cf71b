#include "frft/core.hpp"

#include <cmath>
#include <string>

namespace frft {

namespace {
constexpr double kTwoPi = 2.0 * M_PI;

// Residue of x modulo 2*pi, normalized into [0, 2*pi).
double mod_two_pi(double x) {
    double m = std::fmod(x, kTwoPi);
    if (m < 0.0) m += kTwoPi;
    return m;
}

bool near_zero_mod_two_pi(double x, double tol) {
    const double m = mod_two_pi(x);
    return m < tol || kTwoPi - m < tol;
}
} // namespace

bool all_finite(const cvec& v) {
    for (const auto& z : v) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
}

AngleBranch classify_angle(double alpha, double tol) {
    if (!(tol > 0.0)) {
        throw FrftError(ErrorCode::Usage, "classify_angle: tolerance must be positive");
    }
    if (near_zero_mod_two_pi(alpha, tol)) return AngleBranch::Identity;
    if (near_zero_mod_two_pi(alpha + M_PI, tol)) return AngleBranch::Reversal;
    if (std::abs(std::sin(alpha)) < tol) {
        // Within tol of a multiple of pi by the accurate reduction inside
        // sin(), yet neither delta test matched: cot(alpha) would be garbage.
        throw NearSingularAngle("alpha = " + std::to_string(alpha) +
                                " is too close to a multiple of pi to transform"
                                " and matches no delta branch");
    }
    return AngleBranch::Generic;
}

FrftParams make_params(double alpha, std::size_t n_points, double tol) {
    if (n_points < 1) {
        throw InvalidLength("make_params: n_points must be at least 1");
    }
    FrftParams p;
    p.alpha = alpha;
    p.n_points = n_points;
    p.branch = classify_angle(alpha, tol);
    p.dft_rate = cplx(0.0, dft_rate_imag(n_points));
    if (p.branch == AngleBranch::Generic) {
        double cot = std::cos(alpha) / std::sin(alpha);
        if (std::abs(cot) < kCotSnapTol) cot = 0.0;
        p.cot_alpha = cot;
        p.chirp_rate = cplx(0.0, M_PI * cot);
        p.kappa = std::sqrt(cplx(1.0, -cot) / static_cast<double>(n_points));
    }
    return p;
}

cplx chirp_factor(const FrftParams& p, std::size_t n) {
    const double a = p.chirp_rate_imag();
    return unit_phasor(a * static_cast<double>(n * n));
}

cvec chirp_table(const FrftParams& p) {
    const double a = p.chirp_rate_imag();
    cvec t(p.n_points);
    for (std::size_t n = 0; n < p.n_points; ++n) {
        t[n] = unit_phasor(a * static_cast<double>(n * n));
    }
    return t;
}

cvec dft_phase_table(std::size_t n_points) {
    const double b = dft_rate_imag(n_points);
    cvec t(n_points);
    for (std::size_t q = 0; q < n_points; ++q) {
        t[q] = unit_phasor(b * static_cast<double>(q));
    }
    return t;
}

} // namespace frft
