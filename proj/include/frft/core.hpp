#pragma once

#include <cmath>
#include <cstddef>
#include <optional>

#include "frft/errors.hpp"
#include "frft/types.hpp"

namespace frft {

/// Branch of the affine fractional kernel selected by the angle.
///
/// Identity: alpha is a multiple of 2*pi, the kernel collapses to delta(k-n).
/// Reversal: alpha+pi is a multiple of 2*pi, the kernel is delta((k+n) mod N),
/// i.e. modular time reversal on the index set {0,...,N-1}.
/// Generic: everything else; requires sin(alpha) != 0.
enum class AngleBranch { Generic, Identity, Reversal };

/// Default absolute tolerance on the angle (modulo 2*pi) for delta-branch
/// classification. Angles within machine noise of a multiple of pi would
/// otherwise overflow cot(alpha).
inline constexpr double kAngleTol = 1e-12;

/// |cot(alpha)| below this is flushed to exactly zero, so quarter-turn
/// angles (the closest doubles to odd multiples of pi/2 leave a cot of
/// ~6e-17) reduce to the plain DFT kernel bit-for-bit.
inline constexpr double kCotSnapTol = 1e-15;

/// Dense-matrix size cap for build_matrix.
inline constexpr std::size_t kMatrixCap = 16384;

AngleBranch classify_angle(double alpha, double tol = kAngleTol);

/// Angle, length and the derived kernel coefficients shared by every
/// operation. Immutable after construction; safe to share across threads.
struct FrftParams {
    double alpha = 0.0;
    std::size_t n_points = 0;
    AngleBranch branch = AngleBranch::Generic;

    /// cot(alpha); generic branch only.
    std::optional<double> cot_alpha;
    /// Chirp rate A = j*pi*cot(alpha); purely imaginary, generic branch only.
    std::optional<cplx> chirp_rate;
    /// DFT rate B = -j*2*pi/N; purely imaginary.
    cplx dft_rate{0.0, 0.0};
    /// kappa = sqrt((1 - j*cot(alpha))/N), principal root (non-negative real
    /// part); generic branch only.
    std::optional<cplx> kappa;

    bool generic() const { return branch == AngleBranch::Generic; }

    /// Imaginary part of A; throws BranchUnsupported on the delta branches.
    double chirp_rate_imag() const {
        if (!chirp_rate) {
            throw BranchUnsupported("chirp rate is undefined on a delta branch");
        }
        return chirp_rate->imag();
    }
};

FrftParams make_params(double alpha, std::size_t n_points, double tol = kAngleTol);

// ---------------------------------------------------------------------------
// Shared phase helpers.
//
// Every code path (pointwise kernel, dense matrix, direct transform, fast
// transform, chirp convolution) must assemble its quadratic and DFT phases
// from these functions. Evaluating e^{A*n^2} once per index and combining
// unit factors by complex multiplication keeps the paths consistent to a few
// ulps even when the raw phase A*n^2 reaches 1e8 radians; folding the phases
// into one big argument first would cost ~|phase|*eps radians and the paths
// would disagree at large N.
// ---------------------------------------------------------------------------

inline cplx unit_phasor(double theta) { return {std::cos(theta), std::sin(theta)}; }

/// Imaginary part of B for a given length: -2*pi/N.
inline double dft_rate_imag(std::size_t n_points) {
    return -(2.0 * M_PI) / static_cast<double>(n_points);
}

/// e^{A*n^2} for one index. Generic branch only.
cplx chirp_factor(const FrftParams& p, std::size_t n);

/// Table of e^{A*n^2}, n = 0..N-1. Generic branch only.
cvec chirp_table(const FrftParams& p);

/// Table of e^{B*q} = e^{-j*2*pi*q/N}, q = 0..N-1.
cvec dft_phase_table(std::size_t n_points);

} // namespace frft
