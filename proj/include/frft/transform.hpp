#pragma once

#include "frft/core.hpp"
#include "frft/types.hpp"

namespace frft {

/// Unnormalized forward DFT, X[k] = sum_n x[n] e^{-j*2*pi*n*k/N}.
/// Radix-2 FFT for power-of-two lengths, direct evaluation otherwise.
cvec dft(const cvec& x);

/// Normalized inverse DFT; idft(dft(x)) == x up to rounding.
cvec idft(const cvec& X);

/// Forward transform by direct summation against the kernel, O(N^2).
Spectrum frft_direct(const FrftParams& p, const Signal& x);

/// Forward transform through the chirp -> DFT -> chirp factorization:
/// X[k] = kappa * e^{A*k^2} * sum_n (x[n] e^{A*n^2}) e^{B*n*k}.
/// Same value contract as frft_direct; O(N log N) when N is a power of two.
Spectrum frft_fast(const FrftParams& p, const Signal& x);

/// Exact inverse, from inverting the factorization step by step:
/// x[n] = e^{-A*n^2} / kappa * idft(X[k] e^{-A*k^2})[n].
///
/// Note the affine kernel has no angle-negation inverse: the quadratic
/// chirp factors enter with the same sign on both sides of the DFT, so
/// transforming at -alpha does not undo the transform at alpha.
Signal ifrft(const FrftParams& p, const Spectrum& X);

} // namespace frft
