#pragma once

#include <cstdint>
#include <random>

#include "frft/types.hpp"

namespace frft {

/// Identity of the pseudo-random source recorded in verification reports.
/// mt19937_64 is fully specified by the C++ standard, and the 53-bit mapping
/// below uses no libm, so streams reproduce bit-for-bit across platforms.
inline constexpr const char* kGeneratorName = "mt19937_64/raw53";

class DeterministicRng {
public:
    explicit DeterministicRng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform in [0, 1), 53 bits.
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    /// Uniform in [-1, 1).
    double uniform_sym() { return 2.0 * uniform01() - 1.0; }

    /// Real part drawn first, then imaginary part.
    cplx complex_sym() {
        const double re = uniform_sym();
        const double im = uniform_sym();
        return {re, im};
    }

    cvec complex_vector(std::size_t n) {
        cvec v(n);
        for (auto& z : v) z = complex_sym();
        return v;
    }

private:
    std::mt19937_64 eng_;
};

/// splitmix64 step; used to derive independent sub-seeds per grid point so
/// results do not depend on execution order.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b,
                              std::uint64_t c) {
    std::uint64_t s = splitmix64(base ^ (a * 0x100000001b3ULL));
    s = splitmix64(s ^ (b * 0x1000193ULL));
    return splitmix64(s ^ c);
}

} // namespace frft
