#pragma once

#include <cstddef>

#include "frft/core.hpp"
#include "frft/types.hpp"

namespace frft {

/// Dense N-by-N transform matrix W. Row n, column k holds the kernel value
/// K[k,n]; the kernel is symmetric in its two indices, so this is also
/// K[n,k] and X = W*x reproduces the summation form of the transform.
struct FrftMatrix {
    std::size_t n_points = 0;
    double alpha = 0.0;
    cvec entries; // row-major, entries[n * n_points + k]

    const cplx& at(std::size_t n, std::size_t k) const {
        return entries[n * n_points + k];
    }
};

/// Pointwise kernel value K[k,n].
///
/// Generic branch: kappa * e^{A*(n^2+k^2) + B*n*k}, assembled as
/// e^{A*n^2} * e^{A*k^2} * e^{B*((n*k) mod N)}; reducing n*k modulo N is
/// exact because e^{B*N} = 1. Identity branch: delta(k-n). Reversal branch:
/// delta((k+n) mod N).
cplx kernel_value(const FrftParams& p, std::size_t k, std::size_t n);

FrftMatrix build_matrix(const FrftParams& p, std::size_t cap = kMatrixCap);

struct CirculanceCheck {
    bool circulant = false;
    // First entry (row-major scan) that disagrees with the wrapped-diagonal
    // representative; valid only when !circulant.
    std::size_t row = 0;
    std::size_t col = 0;
};

/// True iff entries depend only on (row - col) mod N to within tol.
CirculanceCheck is_circulant(const FrftMatrix& m, double tol);

} // namespace frft
