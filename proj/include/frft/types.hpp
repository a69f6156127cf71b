#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace frft {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;

/// Time/index-domain samples x[n], n = 0..N-1.
struct Signal {
    cvec data;

    Signal() = default;
    explicit Signal(cvec samples) : data(std::move(samples)) {}
    explicit Signal(std::size_t n) : data(n) {}

    std::size_t size() const { return data.size(); }
    cplx& operator[](std::size_t n) { return data[n]; }
    const cplx& operator[](std::size_t n) const { return data[n]; }
};

/// Fractional-domain coefficients X[k], k = 0..N-1.
struct Spectrum {
    cvec data;

    Spectrum() = default;
    explicit Spectrum(cvec coeffs) : data(std::move(coeffs)) {}
    explicit Spectrum(std::size_t n) : data(n) {}

    std::size_t size() const { return data.size(); }
    cplx& operator[](std::size_t k) { return data[k]; }
    const cplx& operator[](std::size_t k) const { return data[k]; }
};

bool all_finite(const cvec& v);

} // namespace frft
