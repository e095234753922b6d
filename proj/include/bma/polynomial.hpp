#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "bma/errors.hpp"
#include "bma/jet.hpp"

namespace bma {

/// Dense complex polynomial, coefficients in ascending degree order.
using Poly = std::vector<cplx>;

inline Poly poly_trim(Poly p, double eps = 0.0) {
    while (p.size() > 1 && std::abs(p.back()) <= eps) p.pop_back();
    return p;
}

inline int poly_degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline Poly poly_add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), cplx{});
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

inline Poly poly_sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), cplx{});
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return r;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1, cplx{});
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

inline Poly poly_scale(const Poly& a, cplx s) {
    Poly r = a;
    for (auto& c : r) c *= s;
    return r;
}

inline Poly poly_derivative(const Poly& p) {
    if (p.size() <= 1) return {cplx{}};
    Poly r(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = static_cast<double>(i) * p[i];
    return r;
}

inline cplx poly_eval(const Poly& p, cplx z) {
    cplx acc{};
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * z + p[i];
    return acc;
}

/// Order-3 jet of the polynomial at z (Horner on the jet of the identity).
inline Jet3 poly_jet(const Poly& p, cplx z) {
    Jet3 acc = Jet3::constant(cplx{});
    const Jet3 zj = Jet3::variable(z);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * zj + p[i];
    return acc;
}

/// Ratio of two polynomials, expected coprime; exact rational differentiation.
struct RationalMap {
    Poly num{cplx{}};
    Poly den{cplx{1.0}};

    cplx eval(cplx z) const { return poly_eval(num, z) / poly_eval(den, z); }

    /// Derivative as a rational map: (n'd - nd') / d^2.
    RationalMap derivative() const {
        return {poly_sub(poly_mul(poly_derivative(num), den), poly_mul(num, poly_derivative(den))),
                poly_mul(den, den)};
    }
};

}  // namespace bma
