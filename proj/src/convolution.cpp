#include "frft/convolution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace frft {

namespace {
void require_generic(const FrftParams& p, const char* op) {
    if (!p.generic()) {
        throw BranchUnsupported(std::string(op) +
                                ": chirp rate is undefined on a delta branch"
                                " (alpha is a multiple of pi)");
    }
}

void require_length(std::size_t got, std::size_t want, const char* op, const char* which) {
    if (got != want) {
        throw LengthMismatch(std::string(op) + ": " + which + " has length " +
                             std::to_string(got) + ", expected " + std::to_string(want));
    }
}
} // namespace

Signal circular_convolve(const Signal& h, const Signal& x) {
    if (h.size() == 0) throw InvalidLength("circular_convolve: empty input");
    require_length(x.size(), h.size(), "circular_convolve", "x");
    const std::size_t N = h.size();
    Signal y(N);
    for (std::size_t n = 0; n < N; ++n) {
        cplx acc(0.0, 0.0);
        for (std::size_t m = 0; m < N; ++m) {
            acc += h[m] * x[(n + N - m) % N];
        }
        y[n] = acc;
    }
    return y;
}

ChirpSignal chirp_modulate(const Signal& x, const FrftParams& p, ChirpDirection dir) {
    require_generic(p, "chirp_modulate");
    require_length(x.size(), p.n_points, "chirp_modulate", "x");
    const cvec ea = chirp_table(p);
    ChirpSignal out;
    out.source_alpha = p.alpha;
    out.data.resize(x.size());
    for (std::size_t n = 0; n < x.size(); ++n) {
        out.data[n] = dir == ChirpDirection::Forward ? x[n] * ea[n] : x[n] * std::conj(ea[n]);
    }
    return out;
}

Signal chirp_circular_convolve(const FrftParams& p, const Signal& h, const Signal& x) {
    require_generic(p, "chirp_circular_convolve");
    require_length(h.size(), p.n_points, "chirp_circular_convolve", "h");
    require_length(x.size(), p.n_points, "chirp_circular_convolve", "x");

    const std::size_t N = p.n_points;
    const cvec ea = chirp_table(p);
    const cplx kappa = *p.kappa;

    Signal ht(N), xt(N);
    for (std::size_t n = 0; n < N; ++n) {
        ht[n] = h[n] * ea[n];
        xt[n] = x[n] * ea[n];
    }
    const Signal conv = circular_convolve(ht, xt);

    Signal y(N);
    for (std::size_t n = 0; n < N; ++n) {
        y[n] = kappa * (conv[n] * std::conj(ea[n]));
    }
    return y;
}

Spectrum spectral_product(const FrftParams& p, const Spectrum& H, const Spectrum& X) {
    require_generic(p, "spectral_product");
    require_length(H.size(), p.n_points, "spectral_product", "H");
    require_length(X.size(), p.n_points, "spectral_product", "X");
    const cvec ea = chirp_table(p);
    Spectrum Y(p.n_points);
    for (std::size_t k = 0; k < p.n_points; ++k) {
        Y[k] = (H[k] * X[k]) * std::conj(ea[k]);
    }
    return Y;
}

double default_equalizer_epsilon(const Spectrum& H) {
    double peak = 0.0;
    for (const auto& z : H.data) peak = std::max(peak, std::abs(z));
    return std::max(1e-12 * peak, std::numeric_limits<double>::min());
}

Spectrum equalize(const FrftParams& p, const Spectrum& Y, const Spectrum& H, double eps) {
    require_generic(p, "equalize");
    require_length(Y.size(), p.n_points, "equalize", "Y");
    require_length(H.size(), p.n_points, "equalize", "H");
    if (!(eps > 0.0)) {
        throw FrftError(ErrorCode::Usage, "equalize: eps must be positive");
    }

    std::vector<std::size_t> nulls;
    for (std::size_t k = 0; k < p.n_points; ++k) {
        if (std::abs(H[k]) < eps) nulls.push_back(k);
    }
    if (!nulls.empty()) {
        std::string msg = "equalize: channel has " + std::to_string(nulls.size()) +
                          " spectral null(s) below eps = " + std::to_string(eps) +
                          " at k =";
        for (std::size_t k : nulls) msg += " " + std::to_string(k);
        throw SpectralNull(msg, std::move(nulls));
    }

    const cvec ea = chirp_table(p);
    Spectrum X(p.n_points);
    for (std::size_t k = 0; k < p.n_points; ++k) {
        X[k] = (Y[k] * ea[k]) / H[k];
    }
    return X;
}

} // namespace frft
