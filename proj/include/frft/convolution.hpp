#pragma once

#include "frft/core.hpp"
#include "frft/types.hpp"

namespace frft {

enum class ChirpDirection { Forward, Inverse };

/// Chirp-modulated sequence x~[n] = x[n] e^{A*n^2}. The modulation is
/// unimodular (A is purely imaginary), so |x~[n]| = |x[n]|.
struct ChirpSignal {
    cvec data;
    double source_alpha = 0.0;
};

/// Circular convolution y[n] = sum_m h[m] x[(n-m) mod N], the modulo taken
/// into {0,...,N-1}.
Signal circular_convolve(const Signal& h, const Signal& x);

/// Forward: x[n] e^{A*n^2}. Inverse: x[n] e^{-A*n^2}. Generic branch only.
ChirpSignal chirp_modulate(const Signal& x, const FrftParams& p,
                           ChirpDirection dir = ChirpDirection::Forward);

/// y~[n] = kappa * (h~ (*) x~)[n] * e^{-A*n^2}, where h~, x~ are the forward
/// chirp modulations and (*) is circular convolution. Because the inputs are
/// modulated before the wrap, the factor attached to x at lag n-m is
/// e^{A*((n-m) mod N)^2}, evaluated on the wrapped representative.
Signal chirp_circular_convolve(const FrftParams& p, const Signal& h, const Signal& x);

/// Fractional-domain image of chirp-circular convolution:
/// Y[k] = H[k] * X[k] * e^{-A*k^2}.
Spectrum spectral_product(const FrftParams& p, const Spectrum& H, const Spectrum& X);

/// Relative null threshold used when the caller does not pick one:
/// 1e-12 * max_k |H[k]| (clamped away from zero so an all-null channel is
/// still reported as SpectralNull rather than a division blow-up).
double default_equalizer_epsilon(const Spectrum& H);

/// Single-tap equalizer: X[k] = Y[k] e^{+A*k^2} / H[k] for every bin with
/// |H[k]| >= eps. Exact algebraic inverse of spectral_product. Throws
/// SpectralNull listing every bin with |H[k]| < eps; no regularized value is
/// substituted for a null bin.
Spectrum equalize(const FrftParams& p, const Spectrum& Y, const Spectrum& H, double eps);

} // namespace frft
