#pragma once

#include <cmath>
#include <complex>

#include "bma/errors.hpp"

namespace bma {

using cplx = std::complex<double>;

/// Value and first three derivatives of an analytic function at a point.
/// Fixed truncation at order 3: the Schwarzian needs f''' and nothing more.
struct Jet3 {
    cplx v{};   ///< f(z0)
    cplx d1{};  ///< f'(z0)
    cplx d2{};  ///< f''(z0)
    cplx d3{};  ///< f'''(z0)

    static Jet3 constant(cplx c) { return {c, 0.0, 0.0, 0.0}; }
    static Jet3 variable(cplx z0) { return {z0, 1.0, 0.0, 0.0}; }
};

inline Jet3 operator+(const Jet3& a, const Jet3& b) {
    return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2, a.d3 + b.d3};
}

inline Jet3 operator-(const Jet3& a, const Jet3& b) {
    return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2, a.d3 - b.d3};
}

inline Jet3 operator-(const Jet3& a) { return {-a.v, -a.d1, -a.d2, -a.d3}; }

/// Leibniz rule through order 3.
inline Jet3 operator*(const Jet3& a, const Jet3& b) {
    return {a.v * b.v,
            a.d1 * b.v + a.v * b.d1,
            a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2,
            a.d3 * b.v + 3.0 * a.d2 * b.d1 + 3.0 * a.d1 * b.d2 + a.v * b.d3};
}

inline Jet3 operator*(cplx s, const Jet3& a) { return {s * a.v, s * a.d1, s * a.d2, s * a.d3}; }
inline Jet3 operator*(const Jet3& a, cplx s) { return s * a; }
inline Jet3 operator+(const Jet3& a, cplx s) { return {a.v + s, a.d1, a.d2, a.d3}; }
inline Jet3 operator+(cplx s, const Jet3& a) { return a + s; }
inline Jet3 operator-(const Jet3& a, cplx s) { return {a.v - s, a.d1, a.d2, a.d3}; }
inline Jet3 operator-(cplx s, const Jet3& a) { return (-a) + s; }

/// Faa di Bruno through order 3: outer derivatives g1,g2,g3 at a.v composed
/// with the inner jet a.
inline Jet3 compose_outer(cplx g0, cplx g1, cplx g2, cplx g3, const Jet3& a) {
    return {g0,
            g1 * a.d1,
            g2 * a.d1 * a.d1 + g1 * a.d2,
            g3 * a.d1 * a.d1 * a.d1 + 3.0 * g2 * a.d1 * a.d2 + g1 * a.d3};
}

inline Jet3 jet_recip(const Jet3& b) {
    if (b.v == 0.0) throw DegenerateJet{};
    const cplx w = b.v;
    const cplx w2 = w * w;
    return compose_outer(1.0 / w, -1.0 / w2, 2.0 / (w2 * w), -6.0 / (w2 * w2), b);
}

inline Jet3 operator/(const Jet3& a, const Jet3& b) { return a * jet_recip(b); }
inline Jet3 operator/(const Jet3& a, cplx s) { return (1.0 / s) * a; }
inline Jet3 operator/(cplx s, const Jet3& b) { return s * jet_recip(b); }

inline Jet3 jet_add(const Jet3& a, const Jet3& b) { return a + b; }
inline Jet3 jet_mul(const Jet3& a, const Jet3& b) { return a * b; }
inline Jet3 jet_div(const Jet3& a, const Jet3& b) { return a / b; }

inline Jet3 jet_exp(const Jet3& a) {
    const cplx e = std::exp(a.v);
    return compose_outer(e, e, e, e, a);
}

namespace detail {
inline void require_off_cut(cplx w) {
    if (w.imag() == 0.0 && w.real() <= 0.0) throw BranchCut{};
}
}  // namespace detail

inline Jet3 jet_log(const Jet3& a) {
    detail::require_off_cut(a.v);
    const cplx w = a.v;
    const cplx w2 = w * w;
    return compose_outer(std::log(w), 1.0 / w, -1.0 / w2, 2.0 / (w2 * w), a);
}

inline Jet3 jet_pow(const Jet3& a, cplx p) {
    detail::require_off_cut(a.v);
    const cplx w = a.v;
    const cplx g0 = std::pow(w, p);
    const cplx g1 = p * g0 / w;
    const cplx g2 = (p - 1.0) * g1 / w;
    const cplx g3 = (p - 2.0) * g2 / w;
    return compose_outer(g0, g1, g2, g3, a);
}

inline Jet3 jet_sqrt(const Jet3& a) { return jet_pow(a, 0.5); }

inline Jet3 jet_tan(const Jet3& a) {
    const cplx t = std::tan(a.v);
    const cplx s = 1.0 + t * t;  // sec^2
    // tan' = s, tan'' = 2ts, tan''' = s(2 + 6t^2)
    return compose_outer(t, s, 2.0 * t * s, s * (2.0 + 6.0 * t * t), a);
}

}  // namespace bma
