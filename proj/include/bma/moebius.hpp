#pragma once

#include <cmath>
#include <complex>
#include <limits>

#include "bma/errors.hpp"
#include "bma/jet.hpp"

namespace bma {

/// Point of the Riemann sphere.
struct ExtendedPoint {
    cplx value{};
    bool infinite = false;

    static ExtendedPoint infinity() { return {cplx{}, true}; }
    static ExtendedPoint finite(cplx w) { return {w, false}; }

    /// |p|, with infinity mapped to +inf so it compares larger than any radius.
    double abs() const {
        return infinite ? std::numeric_limits<double>::infinity() : std::abs(value);
    }
};

/// z -> (az+b)/(cz+d), ad - bc != 0.
struct MoebiusMap {
    cplx a{1.0}, b{0.0}, c{0.0}, d{1.0};

    cplx det() const { return a * d - b * c; }

    ExtendedPoint apply(cplx z) const {
        const cplx den = c * z + d;
        if (den == 0.0) return ExtendedPoint::infinity();
        return ExtendedPoint::finite((a * z + b) / den);
    }

    ExtendedPoint apply(const ExtendedPoint& p) const {
        if (p.infinite) {
            if (c == 0.0) return ExtendedPoint::infinity();
            return ExtendedPoint::finite(a / c);
        }
        return apply(p.value);
    }

    ExtendedPoint pole() const {
        if (c == 0.0) return ExtendedPoint::infinity();
        return ExtendedPoint::finite(-d / c);
    }

    /// Composition corresponds to the 2x2 matrix product.
    MoebiusMap compose(const MoebiusMap& rhs) const {
        return {a * rhs.a + b * rhs.c, a * rhs.b + b * rhs.d,
                c * rhs.a + d * rhs.c, c * rhs.b + d * rhs.d};
    }
};

/// Disk automorphism sigma_a(z) = (z + a)/(1 + conj(a) z), a in the disk.
inline MoebiusMap sigma(cplx a) { return {1.0, a, std::conj(a), 1.0}; }

inline cplx sigma_apply(cplx a, cplx z) { return (z + a) / (1.0 + std::conj(a) * z); }

inline ExtendedPoint sigma_apply(cplx a, const ExtendedPoint& p) { return sigma(a).apply(p); }

/// Order-3 jet of sigma_a at z.
inline Jet3 sigma_jet(cplx a, cplx z) {
    const cplx ab = std::conj(a);
    const cplx den = 1.0 + ab * z;
    const cplx one_m = 1.0 - std::norm(a);  // 1 - |a|^2
    const cplx d2 = den * den;
    return {(z + a) / den, one_m / d2, -2.0 * ab * one_m / (d2 * den),
            6.0 * ab * ab * one_m / (d2 * d2)};
}

/// Pseudo-hyperbolic distance |sigma_{-a}(b)|.
inline double pseudo_hyperbolic(cplx a, cplx b) {
    return std::abs((b - a) / (1.0 - std::conj(a) * b));
}

}  // namespace bma
