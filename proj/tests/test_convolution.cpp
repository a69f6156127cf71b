#include <cmath>

#include "doctest.h"

#include "frft/convolution.hpp"
#include "frft/rng.hpp"
#include "frft/transform.hpp"
#include "reference_oracles.hpp"

using namespace frft;

namespace {

double max_abs_diff(const cvec& a, const cvec& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

double linf(const cvec& v) {
    double m = 0.0;
    for (const auto& z : v) m = std::max(m, std::abs(z));
    return m;
}

std::vector<double> generic_alpha_grid() {
    std::vector<double> grid;
    for (int i = 0; i < 20; ++i) {
        double a = 0.11 + i * (2.0 * M_PI - 0.22) / 19.0;
        if (std::abs(std::sin(a)) < 0.05) a += 0.07;
        grid.push_back(a);
    }
    return grid;
}

} // namespace

TEST_CASE("circular convolution basics") {
    const Signal x({cplx(1, 0), cplx(2, 0), cplx(3, 0)});

    Signal delta0(cvec(3));
    delta0[0] = 1.0;
    const Signal y0 = circular_convolve(delta0, x);
    for (std::size_t n = 0; n < 3; ++n) CHECK(y0[n] == x[n]);

    Signal delta1(cvec(3));
    delta1[1] = 1.0;
    const Signal y1 = circular_convolve(delta1, x); // cyclic shift by one
    CHECK(y1[0] == x[2]);
    CHECK(y1[1] == x[0]);
    CHECK(y1[2] == x[1]);

    const Signal h({cplx(1, 0), cplx(1, 0), cplx(0, 0)});
    const Signal y = circular_convolve(h, x);
    CHECK(y[0] == cplx(4, 0));
    CHECK(y[1] == cplx(3, 0));
    CHECK(y[2] == cplx(5, 0));

    CHECK_THROWS_AS(circular_convolve(h, Signal(cvec(4))), LengthMismatch);
    CHECK_THROWS_AS(circular_convolve(Signal(), Signal()), InvalidLength);
}

TEST_CASE("circular convolution commutes") {
    DeterministicRng rng(21);
    const Signal h(rng.complex_vector(16)), x(rng.complex_vector(16));
    CHECK(max_abs_diff(circular_convolve(h, x).data, circular_convolve(x, h).data) <= 1e-13);
}

TEST_CASE("chirp modulation") {
    DeterministicRng rng(22);

    SUBCASE("no-op at pi/2 where the chirp rate vanishes") {
        const FrftParams p = make_params(M_PI / 2.0, 8);
        const Signal x(rng.complex_vector(8));
        const ChirpSignal xt = chirp_modulate(x, p);
        for (std::size_t n = 0; n < 8; ++n) CHECK(xt.data[n] == x[n]);
    }

    SUBCASE("inverse undoes forward") {
        const FrftParams p = make_params(0.9, 16);
        const Signal x(rng.complex_vector(16));
        const ChirpSignal fwd = chirp_modulate(x, p, ChirpDirection::Forward);
        const ChirpSignal back =
            chirp_modulate(Signal(fwd.data), p, ChirpDirection::Inverse);
        CHECK(max_abs_diff(back.data, x.data) <= 1e-14);
        CHECK(fwd.source_alpha == 0.9);
    }

    SUBCASE("quadratic phase at an even square wraps to unity") {
        // n = 2, alpha = pi/4: the phase is pi*cot(pi/4)*4 = 4*pi.
        const FrftParams p = make_params(M_PI / 4.0, 4);
        Signal x(cvec(4));
        x[2] = 1.0;
        const ChirpSignal xt = chirp_modulate(x, p);
        CHECK(std::abs(xt.data[2] - cplx(1.0, 0.0)) <= 1e-14);
        CHECK(std::abs(xt.data[0]) == 0.0);
    }

    SUBCASE("modulation preserves energy") {
        const FrftParams p = make_params(1.3, 32);
        const Signal x(rng.complex_vector(32));
        const ChirpSignal xt = chirp_modulate(x, p);
        double ex = 0.0, et = 0.0;
        for (const auto& z : x.data) ex += std::norm(z);
        for (const auto& z : xt.data) et += std::norm(z);
        CHECK(std::abs(ex - et) <= 1e-14 * ex);
    }

    SUBCASE("delta branches are rejected") {
        const FrftParams p = make_params(2.0 * M_PI, 8);
        CHECK_THROWS_AS(chirp_modulate(Signal(cvec(8)), p), BranchUnsupported);
    }
}

TEST_CASE("chirp-circular convolution") {
    DeterministicRng rng(23);

    SUBCASE("reduces to scaled circular convolution at pi/2") {
        const FrftParams p = make_params(M_PI / 2.0, 8);
        const Signal h(rng.complex_vector(8)), x(rng.complex_vector(8));
        const Signal got = chirp_circular_convolve(p, h, x);
        Signal want = circular_convolve(h, x);
        const double scale = 1.0 / std::sqrt(8.0);
        for (auto& z : want.data) z *= scale;
        CHECK(max_abs_diff(got.data, want.data) <= 1e-14);
    }

    SUBCASE("unit impulse passes the other input through times kappa") {
        const FrftParams p = make_params(0.7, 8);
        Signal h(cvec(8));
        h[0] = 1.0;
        const Signal x(rng.complex_vector(8));
        const Signal y = chirp_circular_convolve(p, h, x);
        for (std::size_t n = 0; n < 8; ++n) {
            CHECK(std::abs(y[n] - *p.kappa * x[n]) <= 1e-14);
        }
    }

    SUBCASE("matches the long-double double-loop reference") {
        const FrftParams p4 = make_params(M_PI / 4.0, 4);
        const Signal h(rng.complex_vector(4)), x(rng.complex_vector(4));
        const auto want =
            testing::ref_chirp_circular_convolve(M_PI / 4.0, testing::widen(h.data),
                                                 testing::widen(x.data));
        CHECK(testing::max_err_vs(chirp_circular_convolve(p4, h, x).data, want) <= 1e-13);

        for (double alpha : {0.3, 1.2, 2.7}) {
            for (std::size_t N : {3u, 8u, 16u}) {
                const FrftParams p = make_params(alpha, N);
                const Signal hh(rng.complex_vector(N)), xx(rng.complex_vector(N));
                const auto ref = testing::ref_chirp_circular_convolve(
                    alpha, testing::widen(hh.data), testing::widen(xx.data));
                CHECK(testing::max_err_vs(chirp_circular_convolve(p, hh, xx).data, ref) <=
                      1e-11);
            }
        }
    }

    SUBCASE("commutes in its two inputs") {
        const FrftParams p = make_params(1.9, 16);
        const Signal h(rng.complex_vector(16)), x(rng.complex_vector(16));
        CHECK(max_abs_diff(chirp_circular_convolve(p, h, x).data,
                           chirp_circular_convolve(p, x, h).data) <= 1e-12);
    }

    SUBCASE("errors") {
        const FrftParams p = make_params(M_PI, 8);
        CHECK_THROWS_AS(chirp_circular_convolve(p, Signal(cvec(8)), Signal(cvec(8))),
                        BranchUnsupported);
        const FrftParams g = make_params(0.7, 8);
        CHECK_THROWS_AS(chirp_circular_convolve(g, Signal(cvec(8)), Signal(cvec(4))),
                        LengthMismatch);
    }
}

TEST_CASE("spectral product") {
    DeterministicRng rng(24);

    SUBCASE("plain pointwise product at pi/2") {
        const FrftParams p = make_params(M_PI / 2.0, 8);
        const Spectrum H(rng.complex_vector(8)), X(rng.complex_vector(8));
        const Spectrum Y = spectral_product(p, H, X);
        for (std::size_t k = 0; k < 8; ++k) {
            CHECK(std::abs(Y[k] - H[k] * X[k]) <= 1e-16);
        }
    }

    SUBCASE("transform of the unit impulse is the identity element") {
        const FrftParams p = make_params(1.2, 16);
        Signal delta(cvec(16));
        delta[0] = 1.0;
        const Spectrum H = frft_direct(p, delta); // kappa * e^{A k^2}
        const Spectrum X(rng.complex_vector(16));
        const Spectrum Y = spectral_product(p, H, X);
        for (std::size_t k = 0; k < 16; ++k) {
            CHECK(std::abs(Y[k] - *p.kappa * X[k]) <= 1e-14);
        }
    }

    SUBCASE("convolution theorem at one grid point") {
        const FrftParams p = make_params(0.7, 16);
        const Signal h(rng.complex_vector(16)), x(rng.complex_vector(16));
        const Spectrum lhs = frft_direct(p, chirp_circular_convolve(p, h, x));
        const Spectrum rhs =
            spectral_product(p, frft_direct(p, h), frft_direct(p, x));
        CHECK(max_abs_diff(lhs.data, rhs.data) <= 1e-11);
    }
}

TEST_CASE("convolution theorem across the full grid") {
    DeterministicRng rng(25);
    for (double alpha : generic_alpha_grid()) {
        for (std::size_t N : {2u, 3u, 4u, 8u, 16u, 64u}) {
            const FrftParams p = make_params(alpha, N);
            for (int trial = 0; trial < 10; ++trial) {
                const Signal h(rng.complex_vector(N)), x(rng.complex_vector(N));
                const Spectrum lhs = frft_direct(p, chirp_circular_convolve(p, h, x));
                const Spectrum H = frft_direct(p, h);
                const Spectrum X = frft_direct(p, x);
                const Spectrum rhs = spectral_product(p, H, X);
                const double tol = 1e-10 * (1.0 + linf(H.data) * linf(X.data));
                CHECK(max_abs_diff(lhs.data, rhs.data) <= tol);
            }
        }
    }
}

TEST_CASE("equalizer") {
    DeterministicRng rng(26);

    SUBCASE("inverts the spectral product algebraically") {
        const FrftParams p = make_params(1.2, 16);
        Spectrum H(rng.complex_vector(16));
        for (auto& z : H.data) z += cplx(2.0, 0.0); // keep |H| well away from 0
        const Spectrum X(rng.complex_vector(16));
        const Spectrum Y = spectral_product(p, H, X);
        const Spectrum back = equalize(p, Y, H, 1e-12);
        CHECK(max_abs_diff(back.data, X.data) <= 1e-12);
    }

    SUBCASE("reports every null bin and aborts") {
        const FrftParams p = make_params(0.7, 8);
        Spectrum H(cvec(8, cplx(1.0, 0.0)));
        H[3] = 0.0;
        const Spectrum Y(rng.complex_vector(8));
        CHECK_THROWS_AS(equalize(p, Y, H, 1e-12), SpectralNull);
        try {
            equalize(p, Y, H, 1e-12);
        } catch (const SpectralNull& e) {
            REQUIRE(e.bins.size() == 1);
            CHECK(e.bins[0] == 3);
        }
    }

    SUBCASE("all-null channel is reported through the default epsilon") {
        const FrftParams p = make_params(0.7, 4);
        const Spectrum H(cvec(4));
        const Spectrum Y(rng.complex_vector(4));
        try {
            equalize(p, Y, H, default_equalizer_epsilon(H));
            FAIL("expected SpectralNull");
        } catch (const SpectralNull& e) {
            CHECK(e.bins.size() == 4);
        }
    }

    SUBCASE("rejects a non-positive threshold") {
        const FrftParams p = make_params(0.7, 4);
        const Spectrum Y(cvec(4)), H(cvec(4, cplx(1.0, 0.0)));
        CHECK_THROWS_AS(equalize(p, Y, H, 0.0), FrftError);
    }

    SUBCASE("end-to-end single-tap channel inversion") {
        const FrftParams p = make_params(0.7, 32);
        Signal h(rng.complex_vector(32));
        Spectrum H = frft_direct(p, h);
        double hmin = 1e300;
        for (const auto& z : H.data) hmin = std::min(hmin, std::abs(z));
        while (hmin < 1e-3) { // redraw until the channel is invertible
            h = Signal(rng.complex_vector(32));
            H = frft_direct(p, h);
            hmin = 1e300;
            for (const auto& z : H.data) hmin = std::min(hmin, std::abs(z));
        }
        const Signal x(rng.complex_vector(32));
        const Signal y = chirp_circular_convolve(p, h, x);
        const Spectrum Y = frft_direct(p, y);
        const Spectrum Xhat = equalize(p, Y, H, default_equalizer_epsilon(H));
        const Signal xhat = ifrft(p, Xhat);
        CHECK(max_abs_diff(xhat.data, x.data) <= 1e-10);
    }
}
