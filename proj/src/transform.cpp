#include "frft/transform.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace frft {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Iterative radix-2 Cooley-Tukey, in place. inverse toggles the twiddle sign;
// no scaling is applied here.
void fft_radix2(cvec& a, bool inverse) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    const double sign = inverse ? 1.0 : -1.0;
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * M_PI / static_cast<double>(len);
        const std::size_t half = len >> 1;
        cvec w(half);
        for (std::size_t j = 0; j < half; ++j) {
            w[j] = unit_phasor(ang * static_cast<double>(j));
        }
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t j = 0; j < half; ++j) {
                const cplx u = a[i + j];
                const cplx v = a[i + j + half] * w[j];
                a[i + j] = u + v;
                a[i + j + half] = u - v;
            }
        }
    }
}

cvec dft_direct(const cvec& x, bool inverse) {
    const std::size_t N = x.size();
    const double b = dft_rate_imag(N);
    cvec roots(N);
    for (std::size_t q = 0; q < N; ++q) {
        const cplx r = unit_phasor(b * static_cast<double>(q));
        roots[q] = inverse ? std::conj(r) : r;
    }
    cvec out(N);
    for (std::size_t k = 0; k < N; ++k) {
        cplx acc(0.0, 0.0);
        std::size_t q = 0; // (n*k) mod N
        for (std::size_t n = 0; n < N; ++n) {
            acc += x[n] * roots[q];
            q += k;
            if (q >= N) q -= N;
        }
        out[k] = acc;
    }
    return out;
}

void check_length(const FrftParams& p, std::size_t got, const char* op) {
    if (got != p.n_points) {
        throw LengthMismatch(std::string(op) + ": input length " + std::to_string(got) +
                             " does not match N = " + std::to_string(p.n_points));
    }
}

// Identity copies; reversal maps index i to (-i) mod N. The same permutation
// serves forward and inverse transforms (reversal is its own inverse).
cvec apply_delta_branch(const FrftParams& p, const cvec& in) {
    if (p.branch == AngleBranch::Identity) return in;
    const std::size_t N = in.size();
    cvec out(N);
    for (std::size_t i = 0; i < N; ++i) out[i] = in[(N - i) % N];
    return out;
}

} // namespace

cvec dft(const cvec& x) {
    if (x.empty()) throw InvalidLength("dft: empty input");
    if (is_pow2(x.size())) {
        cvec a = x;
        fft_radix2(a, false);
        return a;
    }
    return dft_direct(x, false);
}

cvec idft(const cvec& X) {
    if (X.empty()) throw InvalidLength("idft: empty input");
    const double inv_n = 1.0 / static_cast<double>(X.size());
    cvec a;
    if (is_pow2(X.size())) {
        a = X;
        fft_radix2(a, true);
    } else {
        a = dft_direct(X, true);
    }
    for (auto& z : a) z *= inv_n;
    return a;
}

Spectrum frft_direct(const FrftParams& p, const Signal& x) {
    check_length(p, x.size(), "frft_direct");
    if (!p.generic()) return Spectrum(apply_delta_branch(p, x.data));

    const std::size_t N = p.n_points;
    const cvec ea = chirp_table(p);
    const cvec eb = dft_phase_table(N);
    const cplx kappa = *p.kappa;

    cvec pre(N); // x[n] * e^{A*n^2}
    for (std::size_t n = 0; n < N; ++n) pre[n] = x[n] * ea[n];

    Spectrum X(N);
    for (std::size_t k = 0; k < N; ++k) {
        cplx acc(0.0, 0.0);
        std::size_t q = 0; // (n*k) mod N
        for (std::size_t n = 0; n < N; ++n) {
            acc += pre[n] * eb[q];
            q += k;
            if (q >= N) q -= N;
        }
        X[k] = (kappa * ea[k]) * acc;
    }
    return X;
}

Spectrum frft_fast(const FrftParams& p, const Signal& x) {
    check_length(p, x.size(), "frft_fast");
    if (!p.generic()) return Spectrum(apply_delta_branch(p, x.data));

    const std::size_t N = p.n_points;
    const cvec ea = chirp_table(p);
    const cplx kappa = *p.kappa;

    cvec pre(N);
    for (std::size_t n = 0; n < N; ++n) pre[n] = x[n] * ea[n];
    cvec mid = dft(pre);

    Spectrum X(N);
    for (std::size_t k = 0; k < N; ++k) X[k] = (kappa * ea[k]) * mid[k];
    return X;
}

Signal ifrft(const FrftParams& p, const Spectrum& X) {
    check_length(p, X.size(), "ifrft");
    if (!p.generic()) return Signal(apply_delta_branch(p, X.data));

    const std::size_t N = p.n_points;
    const cvec ea = chirp_table(p);
    const cplx inv_kappa = 1.0 / *p.kappa;

    cvec de(N); // X[k] * e^{-A*k^2}
    for (std::size_t k = 0; k < N; ++k) de[k] = X[k] * std::conj(ea[k]);
    cvec mid = idft(de);

    Signal x(N);
    for (std::size_t n = 0; n < N; ++n) x[n] = (inv_kappa * std::conj(ea[n])) * mid[n];
    return x;
}

} // namespace frft
