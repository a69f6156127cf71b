#include "frft/kernel.hpp"

#include <cmath>
#include <string>

namespace frft {

namespace {
// Single multiplication order shared by the pointwise and table paths, so
// kernel_value and build_matrix produce bit-identical entries.
inline cplx generic_entry(const cplx& kappa, const cplx& ea_n, const cplx& ea_k,
                          const cplx& eb) {
    return kappa * ((ea_n * ea_k) * eb);
}

void check_index(const FrftParams& p, std::size_t k, std::size_t n) {
    if (k >= p.n_points || n >= p.n_points) {
        throw IndexOutOfRange("kernel_value: index (" + std::to_string(k) + ", " +
                              std::to_string(n) + ") outside 0.." +
                              std::to_string(p.n_points - 1));
    }
}
} // namespace

cplx kernel_value(const FrftParams& p, std::size_t k, std::size_t n) {
    check_index(p, k, n);
    const std::size_t N = p.n_points;
    switch (p.branch) {
    case AngleBranch::Identity:
        return k == n ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
    case AngleBranch::Reversal:
        return (k + n) % N == 0 ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
    case AngleBranch::Generic:
    default:
        break;
    }
    const cplx eb = unit_phasor(dft_rate_imag(N) * static_cast<double>((n * k) % N));
    return generic_entry(*p.kappa, chirp_factor(p, n), chirp_factor(p, k), eb);
}

FrftMatrix build_matrix(const FrftParams& p, std::size_t cap) {
    const std::size_t N = p.n_points;
    if (N > cap) {
        throw AllocationFailure("build_matrix: N = " + std::to_string(N) +
                                " exceeds the dense-matrix cap " + std::to_string(cap));
    }
    FrftMatrix m;
    m.n_points = N;
    m.alpha = p.alpha;
    m.entries.assign(N * N, cplx(0.0, 0.0));

    if (p.branch == AngleBranch::Identity) {
        for (std::size_t n = 0; n < N; ++n) m.entries[n * N + n] = 1.0;
        return m;
    }
    if (p.branch == AngleBranch::Reversal) {
        for (std::size_t n = 0; n < N; ++n) m.entries[n * N + (N - n) % N] = 1.0;
        return m;
    }

    const cvec ea = chirp_table(p);
    const cvec eb = dft_phase_table(N);
    const cplx kappa = *p.kappa;
    for (std::size_t n = 0; n < N; ++n) {
        std::size_t q = 0; // (n*k) mod N, advanced incrementally
        for (std::size_t k = 0; k < N; ++k) {
            m.entries[n * N + k] = generic_entry(kappa, ea[n], ea[k], eb[q]);
            q += n;
            if (q >= N) q -= N;
        }
    }
    return m;
}

CirculanceCheck is_circulant(const FrftMatrix& m, double tol) {
    const std::size_t N = m.n_points;
    for (std::size_t n = 0; n < N; ++n) {
        for (std::size_t k = 0; k < N; ++k) {
            const std::size_t d = (n + N - k) % N;
            const cplx& ref = m.at(d, 0); // representative with the same diagonal offset
            if (std::abs(m.at(n, k) - ref) > tol) {
                return {false, n, k};
            }
        }
    }
    return {true, 0, 0};
}

} // namespace frft
