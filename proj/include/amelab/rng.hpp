#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "amelab/linalg.hpp"

namespace ame {

/// Deterministic 64-bit generator (splitmix64). Hand-rolled rather than
/// <random> distributions so streams are bit-identical across standard
/// library implementations; reproducibility of seeds is part of the
/// report contract.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    /// Independent stream for worker `index` of a master seed.
    static Rng for_stream(uint64_t master_seed, uint64_t index) {
        Rng mix(master_seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
        mix.next_u64();
        return mix;
    }

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    cdouble complex_gaussian() {
        const double re = gaussian();
        const double im = gaussian();
        return {re, im};
    }

    /// Haar-random pure state amplitudes: normalized complex Gaussian vector.
    std::vector<cdouble> haar_amplitudes(int dim) {
        std::vector<cdouble> v(dim);
        double norm2 = 0.0;
        for (auto& z : v) {
            z = complex_gaussian();
            norm2 += std::norm(z);
        }
        const double inv = 1.0 / std::sqrt(norm2);
        for (auto& z : v) z *= inv;
        return v;
    }

    /// Haar-random 2x2 unitary (Gram-Schmidt of a Gaussian matrix).
    Matrix haar_unitary2() {
        Matrix u(2, 2);
        cdouble a = complex_gaussian(), b = complex_gaussian();
        double n0 = std::sqrt(std::norm(a) + std::norm(b));
        a /= n0;
        b /= n0;
        cdouble c = complex_gaussian(), d = complex_gaussian();
        const cdouble ip = std::conj(a) * c + std::conj(b) * d;
        c -= ip * a;
        d -= ip * b;
        double n1 = std::sqrt(std::norm(c) + std::norm(d));
        if (n1 < 1e-12) {
            // Degenerate draw; fall back to the orthogonal complement.
            c = -std::conj(b);
            d = std::conj(a);
            n1 = 1.0;
        }
        u(0, 0) = a;
        u(1, 0) = b;
        u(0, 1) = c / n1;
        u(1, 1) = d / n1;
        return u;
    }

  private:
    uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace ame
