#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

namespace bma {

using cplx = std::complex<double>;

/// Radical-inverse (van der Corput) sequence in the given base.
inline double radical_inverse(std::uint64_t i, std::uint64_t base) {
    double inv = 1.0 / static_cast<double>(base);
    double f = inv;
    double x = 0.0;
    while (i > 0) {
        x += static_cast<double>(i % base) * f;
        i /= base;
        f *= inv;
    }
    return x;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Deterministic low-discrepancy sampler of the disk |z| < radius_cap.
/// Halton pairs (base 2, base 3) mapped through (r^2, theta) so samples are
/// area-uniform and boundary-biased in radius. The seed offsets the start
/// index, keeping runs reproducible.
class DiskSampler {
public:
    DiskSampler(std::uint64_t seed, double radius_cap)
        : start_(1 + (splitmix64(seed) % 0xfffffULL)), cap_(radius_cap) {}

    cplx operator()(std::uint64_t i) const {
        const double u = radical_inverse(start_ + i, 2);
        const double v = radical_inverse(start_ + i, 3);
        const double r = cap_ * std::sqrt(u);
        const double th = 2.0 * std::numbers::pi * v;
        return std::polar(r, th);
    }

    std::vector<cplx> take(std::size_t n) const {
        std::vector<cplx> out;
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i) out.push_back((*this)(i));
        return out;
    }

    double radius_cap() const { return cap_; }

private:
    std::uint64_t start_;
    double cap_;
};

}  // namespace bma
