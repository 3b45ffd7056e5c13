#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "complex_matrix.hpp"

namespace sectoria {

/// SplitMix64 stream with Box-Muller Gaussians. The generator is pinned to
/// this exact algorithm (not std::mt19937 / std::normal_distribution) so that
/// seeded draws can be reproduced verbatim from other languages.
///
/// Draw conventions, fixed for reproducibility:
///   uniform():   (next() >> 11) * 2^-53, in [0,1)
///   gaussian():  Box-Muller on (u1,u2); r = sqrt(-2 ln(1-u1)), phase 2*pi*u2;
///                the pair (r cos, r sin) is consumed in order.
///   substream(k) reseeds from the original seed, independent of how much of
///                the parent stream was consumed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed0_(seed), s_(seed) {}

    std::uint64_t next() {
        s_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = s_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
        const double th = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(th);
        have_spare_ = true;
        return r * std::cos(th);
    }

    /// Entry k of a family of decorrelated streams derived from the original
    /// seed. Results do not depend on the parent's consumption state, so
    /// per-trial streams are schedule-independent.
    Rng substream(std::uint64_t k) const {
        std::uint64_t z = seed0_ ^ (0x9E3779B97F4A7C15ULL * (k + 0x632BE59BD9B4E019ULL));
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return Rng(z ^ (z >> 31));
    }

private:
    std::uint64_t seed0_;
    std::uint64_t s_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Entries are drawn row-major, real part then imaginary part.
inline CMatrix random_gaussian_matrix(int n, Rng& rng) {
    CMatrix g(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double re = rng.gaussian();
            const double im = rng.gaussian();
            g(i, j) = cplx(re, im);
        }
    return g;
}

inline CVector random_unit_vector(int n, Rng& rng) {
    CVector u(static_cast<std::size_t>(n));
    double nrm = 0.0;
    while (nrm == 0.0) {
        for (auto& v : u) {
            const double re = rng.gaussian();
            const double im = rng.gaussian();
            v = cplx(re, im);
        }
        nrm = vec_norm(u);
    }
    for (auto& v : u) v /= nrm;
    return u;
}

} // namespace sectoria
