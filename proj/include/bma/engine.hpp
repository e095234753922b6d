#pragma once

#include <cmath>
#include <complex>

#include "bma/errors.hpp"
#include "bma/model.hpp"
#include "bma/moebius.hpp"

namespace bma {

/// Sign trichotomy needs a tie band in floating point; callers can
/// re-threshold with the reported re_value.
inline constexpr double kClassifyBand = 1e-12;

struct PointClassification {
    enum class Radial { Outward, OnCircle, Inward };
    Radial radial;
    bool collinear;
    bool antipodal;
    double re_value;  ///< Re{1 + zeta q(zeta)}
};

/// The Moebius transformation agreeing with f to second order at zeta:
/// M(z) = f(zeta) + (z - zeta) f'(zeta) / (1 - (z - zeta) q(zeta)/2).
inline MoebiusMap bma(const AnalyticModel& model, cplx zeta) {
    const Jet3 j = model.jet_at(zeta);
    if (j.d1 == 0.0) throw NotLocallyUnivalent{};
    const cplx F = j.v;
    const cplx D = j.d1;
    const cplx Q = 0.5 * j.d2 / j.d1;
    return {D - F * Q, F * (1.0 + zeta * Q) - zeta * D, -Q, 1.0 + zeta * Q};
}

/// P_f(zeta) = zeta + 2/q(zeta); infinity iff q(zeta) = 0.
inline ExtendedPoint pole(const AnalyticModel& model, cplx zeta) {
    const cplx q = model.pre_schwarzian_at(zeta).q;
    if (q == 0.0) return ExtendedPoint::infinity();
    return ExtendedPoint::finite(zeta + 2.0 / q);
}

/// Pommerenke operator A_f(z) = (1-|z|^2) q(z)/2 - conj(z).
inline cplx a_operator(const AnalyticModel& model, cplx z) {
    const cplx q = model.pre_schwarzian_at(z).q;
    return 0.5 * (1.0 - std::norm(z)) * q - std::conj(z);
}

/// Residual of P_f(z) = (w + z)/(1 + conj(z) w), w = 1/A_f(z).
/// Both sides reduce to P_f = (1 + zA)/(A + conj(z)); near an infinite pole
/// the reciprocal form of the identity is compared instead.
inline double lemma_pole_identity(const AnalyticModel& model, cplx z) {
    const cplx A = a_operator(model, z);
    const ExtendedPoint P = pole(model, z);
    const cplx num = 1.0 + z * A;
    const cplx den = A + std::conj(z);
    if (P.infinite || std::abs(den) < std::abs(num)) {
        const cplx lhs = P.infinite ? cplx{0.0} : 1.0 / P.value;
        return std::abs(lhs - den / num);
    }
    return std::abs(P.value - num / den);
}

inline cplx schwarzian(const AnalyticModel& model, cplx z) {
    const PreSchwarzian ps = model.pre_schwarzian_at(z);
    return ps.dq - 0.5 * ps.q * ps.q;
}

inline PointClassification classify_point(const AnalyticModel& model, cplx zeta) {
    const cplx zq = zeta * model.pre_schwarzian_at(zeta).q;
    const cplx one_plus = 1.0 + zq;
    const double re = one_plus.real();
    PointClassification c{};
    c.re_value = re;
    if (re > kClassifyBand)
        c.radial = PointClassification::Radial::Outward;
    else if (re < -kClassifyBand)
        c.radial = PointClassification::Radial::Inward;
    else
        c.radial = PointClassification::Radial::OnCircle;
    c.collinear = std::abs(zq.imag()) <= kClassifyBand;
    c.antipodal = std::abs(one_plus) <= kClassifyBand;
    return c;
}

/// Model of f composed with the disk automorphism sigma_a.
/// Kind-full models compose jets by the chain rule; pre-Schwarzian-only
/// models use q~ = (q o sigma) sigma' + sigma''/sigma'.
inline AnalyticModel conjugate_by_automorphism(const AnalyticModel& model, cplx a) {
    if (!(std::abs(a) < 1.0)) throw Error("conjugate_by_automorphism: a must lie in the disk");
    const std::string label = model.label() + "|sigma";
    if (model.kind() == AnalyticModel::Kind::Full) {
        return AnalyticModel::full(label, [model, a](cplx z) {
            const Jet3 inner = sigma_jet(a, z);
            const Jet3 outer = model.jet_at(inner.v);
            return compose_outer(outer.v, outer.d1, outer.d2, outer.d3, inner);
        });
    }
    return AnalyticModel::pre_schwarzian_only(label, [model, a](cplx z) {
        const Jet3 s = sigma_jet(a, z);
        const PreSchwarzian ps = model.pre_schwarzian_at(s.v);
        const cplx q = ps.q * s.d1 + s.d2 / s.d1;
        const cplx dq =
            ps.dq * s.d1 * s.d1 + ps.q * s.d2 + (s.d3 * s.d1 - s.d2 * s.d2) / (s.d1 * s.d1);
        return PreSchwarzian{q, dq};
    });
}

/// Model of f_r(z) = f(rz), r in (0,1): q_r(z) = r q(rz).
inline AnalyticModel dilate(const AnalyticModel& model, double r) {
    if (!(0.0 < r && r < 1.0)) throw Error("dilate: r in (0,1)");
    const std::string label = model.label() + "|r=" + std::to_string(r);
    if (model.kind() == AnalyticModel::Kind::Full) {
        return AnalyticModel::full(label, [model, r](cplx z) {
            const Jet3 j = model.jet_at(r * z);
            return Jet3{j.v, r * j.d1, r * r * j.d2, r * r * r * j.d3};
        });
    }
    return AnalyticModel::pre_schwarzian_only(label, [model, r](cplx z) {
        const PreSchwarzian ps = model.pre_schwarzian_at(r * z);
        return PreSchwarzian{r * ps.q, r * r * ps.dq};
    });
}

/// Model of T o f with T(w) = a w + b. Leaves q, hence P_f, unchanged.
inline AnalyticModel affine_transform(const AnalyticModel& model, cplx a, cplx b) {
    if (a == 0.0) throw Error("affine_transform: a must be nonzero");
    if (model.kind() == AnalyticModel::Kind::Full) {
        return AnalyticModel::full(model.label() + "|affine", [model, a, b](cplx z) {
            const Jet3 j = model.jet_at(z);
            return Jet3{a * j.v + b, a * j.d1, a * j.d2, a * j.d3};
        });
    }
    return model;  // q is already affine-invariant
}

}  // namespace bma
