#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <vector>

#include "bma/blaschke.hpp"
#include "bma/errors.hpp"
#include "bma/model.hpp"
#include "bma/moebius.hpp"
#include "bma/polynomial.hpp"

namespace bma {

/// Pre-Schwarzian data for a conformal map onto a polygon (interior) or a
/// polygon exterior (normalized f(0) = infinity), encoded by two finite
/// Blaschke products without common zeros.
struct PolygonModel {
    enum class Variant { Interior, Exterior };
    Variant variant;
    BlaschkeProduct Bk;
    BlaschkeProduct Bm;

    PolygonModel(Variant v, BlaschkeProduct bk, BlaschkeProduct bm)
        : variant(v), Bk(std::move(bk)), Bm(std::move(bm)) {
        for (cplx zk : Bk.zeros)
            for (cplx zm : Bm.zeros)
                if (std::abs(zk - zm) < 1e-12)
                    throw InvalidPolygonModel("Bk and Bm share a zero");
    }

    int k() const { return Bk.degree(); }
    int m() const { return Bm.degree(); }
};

/// q as a ratio of expanded polynomials, differentiated exactly.
/// Interior: q = 2 Bk/Bm / (1 - z Bk/Bm) = 2 nk dm / (dk nm - z nk dm).
/// Exterior: z q = 2/(z^2 Bk/Bm - 1)  =>  q = 2 dk nm / (z (z^2 nk dm - dk nm)).
struct RationalPreSchwarzian {
    RationalMap q;

    PreSchwarzian at(cplx z) const {
        const cplx n = poly_eval(q.num, z);
        const cplx d = poly_eval(q.den, z);
        const cplx np = poly_eval(poly_derivative(q.num), z);
        const cplx dp = poly_eval(poly_derivative(q.den), z);
        const cplx qv = n / d;
        return {qv, (np * d - n * dp) / (d * d)};
    }
};

inline RationalPreSchwarzian polygon_q_rational(const PolygonModel& pm) {
    const RationalMap bk = pm.Bk.as_rational();
    const RationalMap bm = pm.Bm.as_rational();
    const Poly nk_dm = poly_mul(bk.num, bm.den);
    const Poly dk_nm = poly_mul(bk.den, bm.num);
    if (pm.variant == PolygonModel::Variant::Interior) {
        // 2 nk dm / (dk nm - z nk dm)
        Poly z_nk_dm(nk_dm.size() + 1, cplx{});
        for (std::size_t i = 0; i < nk_dm.size(); ++i) z_nk_dm[i + 1] = nk_dm[i];
        return {RationalMap{poly_scale(nk_dm, 2.0), poly_sub(dk_nm, z_nk_dm)}};
    }
    // exterior: 2 dk nm / (z^3 nk dm - z dk nm)
    Poly z2_nk_dm(nk_dm.size() + 2, cplx{});
    for (std::size_t i = 0; i < nk_dm.size(); ++i) z2_nk_dm[i + 2] = nk_dm[i];
    Poly den = poly_sub(z2_nk_dm, dk_nm);
    Poly z_den(den.size() + 1, cplx{});
    for (std::size_t i = 0; i < den.size(); ++i) z_den[i + 1] = den[i];
    return {RationalMap{poly_scale(dk_nm, 2.0), z_den}};
}

/// Pre-Schwarzian-only model for the polygon map. Interior models must keep
/// 1 - z Bk/Bm away from zero on the sampled disk; that is not re-checked
/// here since the counting theorems only use the rational structure.
inline AnalyticModel polygon_preschwarzian(const PolygonModel& pm) {
    const RationalPreSchwarzian rq = polygon_q_rational(pm);
    const char* name = pm.variant == PolygonModel::Variant::Interior ? "polygon_interior"
                                                                     : "polygon_exterior";
    return AnalyticModel::pre_schwarzian_only(name, [rq](cplx z) { return rq.at(z); });
}

/// Exact rational pole function: interior P_f = Bm/Bk, exterior P_f = z^3 Bk/Bm.
inline RationalMap pole_rational(const PolygonModel& pm) {
    const RationalMap bk = pm.Bk.as_rational();
    const RationalMap bm = pm.Bm.as_rational();
    if (pm.variant == PolygonModel::Variant::Interior)
        return {poly_mul(bm.num, bk.den), poly_mul(bm.den, bk.num)};
    Poly num = poly_mul(bk.num, bm.den);
    Poly z3_num(num.size() + 3, cplx{});
    for (std::size_t i = 0; i < num.size(); ++i) z3_num[i + 3] = num[i];
    return {z3_num, poly_mul(bk.den, bm.num)};
}

/// Roots of p by balanced companion-matrix eigenvalues. Degree <= 20 enforced.
inline std::vector<cplx> poly_roots(const Poly& p_in) {
    const Poly p = poly_trim(p_in, 1e-13);
    const int n = poly_degree(p);
    if (n > 20) throw Error("poly_roots: degree > 20");
    if (n < 1) return {};
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) C(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) C(i, n - 1) = -p[i] / p[n];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, /*computeEigenvectors=*/false);
    std::vector<cplx> roots(n);
    for (int i = 0; i < n; ++i) roots[i] = es.eigenvalues()[i];
    return roots;
}

/// #{P = c} in the disk via companion-matrix eigenvalues of num - c den
/// (denominator roots for c = infinity).
inline int count_preimages_roots(const RationalMap& P, const ExtendedPoint& c) {
    const Poly g = c.infinite ? P.den : poly_sub(P.num, poly_scale(P.den, c.value));
    int count = 0;
    for (cplx r : poly_roots(g)) {
        const double d = std::abs(r);
        if (std::abs(d - 1.0) < 1e-8) throw AmbiguousRoot{};
        if (d < 1.0) ++count;
    }
    return count;
}

namespace detail {
/// (1/2 pi i) contour integral of g'/g over |z| = radius by trapezoid rule.
inline double winding_quadrature(const Poly& g, double radius, int nodes) {
    using std::numbers::pi;
    const Poly gp = poly_derivative(g);
    cplx acc{};
    for (int j = 0; j < nodes; ++j) {
        const cplx z = std::polar(radius, 2.0 * pi * j / nodes);
        acc += z * poly_eval(gp, z) / poly_eval(g, z);
    }
    return (acc / static_cast<double>(nodes)).real();
}

inline double min_modulus_on_circle(const Poly& g, double radius, int nodes) {
    using std::numbers::pi;
    double mn = std::numeric_limits<double>::infinity();
    for (int j = 0; j < nodes; ++j)
        mn = std::min(mn, std::abs(poly_eval(g, std::polar(radius, 2.0 * pi * j / nodes))));
    return mn;
}

inline double max_coeff(const Poly& p) {
    double mx = 0.0;
    for (cplx c : p) mx = std::max(mx, std::abs(c));
    return mx;
}
}  // namespace detail

/// Argument-principle count of #{P = c} inside the disk:
/// round((1/2 pi i) contour integral of P'/(P - c)) + #poles of P inside, both
/// windings evaluated by trapezoid quadrature on |z| = radius. The contour is
/// nudged outward/inward (steps of 1e-3, at most 5 tries) away from zeros of
/// P - c; a quadrature not within 0.05 of an integer raises NonIntegerWinding.
inline int count_preimages_winding(const RationalMap& P, const ExtendedPoint& c,
                                   double radius = 0.999, int nodes = 8192) {
    if (c.infinite) {
        const double w = detail::winding_quadrature(P.den, radius, nodes);
        const double r = std::round(w);
        if (std::abs(w - r) > 0.05) throw NonIntegerWinding(w);
        return static_cast<int>(r);
    }
    const Poly g = poly_sub(P.num, poly_scale(P.den, c.value));
    double last = 0.0;
    for (int attempt = 0; attempt < 6; ++attempt) {
        const double rr = radius + ((attempt + 1) / 2) * 1e-3 * (attempt % 2 ? -1.0 : 1.0);
        if (!(rr > 0.0 && rr < 1.0)) continue;
        // keep zeros of P - c (and poles of P) off the contour
        if (detail::min_modulus_on_circle(g, rr, 512) <
                1e-3 * std::max(detail::max_coeff(g), 1e-30) ||
            detail::min_modulus_on_circle(P.den, rr, 512) <
                1e-3 * std::max(detail::max_coeff(P.den), 1e-30))
            continue;
        const double wz = detail::winding_quadrature(g, rr, nodes);
        const double wp = detail::winding_quadrature(P.den, rr, nodes);
        last = wz - wp;  // zeros minus poles of P - c
        if (std::abs(wz - std::round(wz)) <= 0.05 && std::abs(wp - std::round(wp)) <= 0.05) {
            // #{P = c} = (zeros - poles) + poles inside
            return static_cast<int>(std::round(wz));
        }
    }
    throw NonIntegerWinding(last);
}

}  // namespace bma
