#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <string>

#include "bma/blaschke.hpp"
#include "bma/errors.hpp"
#include "bma/jet.hpp"
#include "bma/model.hpp"

namespace bma::catalog {

using std::numbers::pi;

namespace detail {
/// Jet of the derivative of the function whose jet is j, with the (unknown)
/// third slot zeroed. Only the value and first derivative of results built
/// from this are meaningful.
inline Jet3 shift_derivative(const Jet3& j) { return {j.d1, j.d2, j.d3, 0.0}; }

inline std::string fmt(double x) {
    std::string s = std::to_string(x);
    while (s.size() > 1 && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
}
}  // namespace detail

/// f(z) = ((1+z)/(1-z))^a, a real nonzero. Pre-Schwarzian (2a+2z)/(1-z^2),
/// pole (1+az)/(a+z), orders max(|a|,1) and min(|a|,1).
inline AnalyticModel power(double a) {
    if (a == 0.0) throw Error("power: a must be nonzero");
    return AnalyticModel::full(
        "power(" + detail::fmt(a) + ")",
        [a](cplx z) {
            const Jet3 zj = Jet3::variable(z);
            return jet_pow((1.0 + zj) / (1.0 - zj), a);
        },
        std::nullopt, /*extremal=*/true);
}

/// Extremal convex function of order alpha: 1 + zq = (1+(1-2a)z)/(1-z).
inline AnalyticModel convex_order(double alpha) {
    ClassSpec tag = ClassSpec::convex_order(alpha);
    const double lambda = 1.0 - 2.0 * alpha;
    return AnalyticModel::full(
        "convex_order(" + detail::fmt(alpha) + ")",
        [lambda](cplx z) {
            const Jet3 zj = Jet3::variable(z);
            if (std::abs(lambda) < 1e-12) return -jet_log(1.0 - zj);
            return (jet_pow(1.0 - zj, -lambda) - 1.0) / lambda;
        },
        tag, true);
}

/// Janowski extremal with P_f = (2 + (A+B)z)/(A-B).
inline AnalyticModel janowski(double A, double B) {
    ClassSpec tag = ClassSpec::janowski(A, B);
    return AnalyticModel::full(
        "janowski(" + detail::fmt(A) + "," + detail::fmt(B) + ")",
        [A, B](cplx z) {
            const Jet3 zj = Jet3::variable(z);
            if (B == 0.0) return (jet_exp(A * zj) - 1.0) / A;
            if (A == 0.0) return jet_log(1.0 + B * zj) / B;
            return (jet_pow(1.0 + B * zj, A / B) - 1.0) / A;
        },
        tag, true);
}

/// Robertson extremal: f = ((1-z)^{-lambda} - 1)/lambda with lambda = e^{2ia}.
inline AnalyticModel robertson(double alpha) {
    ClassSpec tag = ClassSpec::robertson(alpha);
    const cplx lambda = std::polar(1.0, 2.0 * alpha);
    return AnalyticModel::full(
        "robertson(" + detail::fmt(alpha) + ")",
        [lambda](cplx z) {
            const Jet3 zj = Jet3::variable(z);
            return (jet_pow(1.0 - zj, -lambda) - 1.0) / lambda;
        },
        tag, true);
}

/// Rotated Koebe function z/(1 - e^{i theta} z)^2.
inline AnalyticModel koebe(double theta) {
    const cplx u = std::polar(1.0, theta);
    return AnalyticModel::full(
        "koebe(" + detail::fmt(theta) + ")",
        [u](cplx z) {
            const Jet3 zj = Jet3::variable(z);
            const Jet3 d = 1.0 - u * zj;
            return zj / (d * d);
        },
        ClassSpec::starlike(), true);
}

/// Rotated half-plane map z/(1 - e^{i theta} z), starlike of order 1/2.
inline AnalyticModel half_plane(double theta) {
    const cplx u = std::polar(1.0, theta);
    return AnalyticModel::full(
        "half_plane(" + detail::fmt(theta) + ")",
        [u](cplx z) {
            const Jet3 zj = Jet3::variable(z);
            return zj / (1.0 - u * zj);
        },
        ClassSpec::starlike_half(), true);
}

/// Noshiro-Warschawski extremal -2 e^{-i theta} log(1 - e^{i theta} z) - z.
inline AnalyticModel noshiro_extremal(double theta) {
    const cplx u = std::polar(1.0, theta);
    return AnalyticModel::full(
        "noshiro_extremal(" + detail::fmt(theta) + ")",
        [u](cplx z) {
            const Jet3 zj = Jet3::variable(z);
            return (-2.0 / u) * jet_log(1.0 - u * zj) - zj;
        },
        ClassSpec::noshiro(), true);
}

/// f(z) = e^{bz}; constant pre-Schwarzian b, Schwarzian -b^2/2.
inline AnalyticModel exp_map(cplx b) {
    return AnalyticModel::full("exp_map(" + detail::fmt(b.real()) + ")",
                               [b](cplx z) { return jet_exp(b * Jet3::variable(z)); });
}

inline AnalyticModel identity() {
    return AnalyticModel::full("identity", [](cplx z) { return Jet3::variable(z); });
}

/// f(z) = z/(1 - a z), |a| <= 1. A Moebius map, so Sf = 0 and P_f = 1/a.
inline AnalyticModel moebius(cplx a) {
    if (std::abs(a) > 1.0) throw Error("moebius: need |a| <= 1");
    return AnalyticModel::full("moebius(" + detail::fmt(a.real()) + ")", [a](cplx z) {
        const Jet3 zj = Jet3::variable(z);
        return zj / (1.0 - a * zj);
    });
}

/// Map onto a cross domain, defined through f'(z) = 1/((1-z^4) sqrt(1+z^4)).
/// The associated pole function is (1 + z^4 + 2 z^8)/(z^3 + 3 z^7).
inline AnalyticModel cross() {
    return AnalyticModel::pre_schwarzian_only(
        "cross",
        [](cplx z) {
            const Jet3 zj = Jet3::variable(z);
            const Jet3 z4 = zj * zj * zj * zj;
            const Jet3 fp = 1.0 / ((1.0 - z4) * jet_sqrt(1.0 + z4));
            const cplx q = fp.d1 / fp.v;
            return PreSchwarzian{q, fp.d2 / fp.v - q * q};
        },
        ClassSpec::starlike());
}

/// Random finite Blaschke product of the given degree, zeros uniform in
/// |z| <= 0.8, times a random unimodular constant; h(z) = z g(z).
inline SelfMapModel random_self_map(std::uint64_t seed, int degree) {
    if (degree < 0 || degree > 3) throw Error("random_self_map: degree in {0..3}");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::vector<cplx> zeros;
    for (int i = 0; i < degree; ++i)
        zeros.push_back(std::polar(0.8 * std::sqrt(uni(rng)), 2.0 * pi * uni(rng)));
    BlaschkeProduct g(zeros, std::polar(1.0, 2.0 * pi * uni(rng)));
    return SelfMapModel{[g](cplx z) { return g.jet_at(z); }};
}

/// Model defined by a prescribed analytic Schwarzian with f''(0) = 0.
/// q is recovered from the Riccati relation q' = Sf + q^2/2, integrated with
/// classical RK4 (step 1e-3) along the radius from 0, q(0) = 0.
inline AnalyticModel riccati_model(std::string label, std::function<cplx(cplx)> schwarzian,
                                   std::optional<ClassSpec> tag = std::nullopt) {
    auto q_fn = [Sf = std::move(schwarzian)](cplx z) {
        const double r = std::abs(z);
        if (r == 0.0) return PreSchwarzian{0.0, Sf(0.0)};
        const cplx dir = z / r;
        const int n = std::max(1, static_cast<int>(std::ceil(r / 1e-3)));
        const double h = r / n;
        auto rhs = [&](double s, cplx qv) { return dir * (Sf(dir * s) + 0.5 * qv * qv); };
        cplx q = 0.0;
        for (int i = 0; i < n; ++i) {
            const double s = i * h;
            const cplx k1 = rhs(s, q);
            const cplx k2 = rhs(s + 0.5 * h, q + 0.5 * h * k1);
            const cplx k3 = rhs(s + 0.5 * h, q + 0.5 * h * k2);
            const cplx k4 = rhs(s + h, q + h * k3);
            q += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
        return PreSchwarzian{q, Sf(z) + 0.5 * q * q};
    };
    return AnalyticModel::pre_schwarzian_only(std::move(label), std::move(q_fn), tag);
}

/// Random member of a function class, built from the class's subordination
/// identity with h(z) = z g(z) for a random Blaschke product g.
inline AnalyticModel random_class_member(const ClassSpec& spec, std::uint64_t seed, int degree) {
    if (degree < 0 || degree > 3) throw Error("random_class_member: degree <= 3");
    const SelfMapModel sm = random_self_map(seed, degree);
    const std::string label = "class#" + std::to_string(seed);
    using F = ClassSpec::Family;

    // Re{1 + zq} >= alpha classes share q = 2(1-alpha) g / (1 - z g).
    auto halfplane_q = [sm](double alpha) {
        return [sm, alpha](cplx z) {
            const Jet3 zj = Jet3::variable(z);
            const Jet3 g = sm.g_at(z);
            const Jet3 qj = (2.0 * (1.0 - alpha)) * g / (1.0 - zj * g);
            return PreSchwarzian{qj.v, qj.d1};
        };
    };

    switch (spec.family) {
        case F::ConvexOrder:
            return AnalyticModel::pre_schwarzian_only("convex_order:" + label,
                                                      halfplane_q(spec.p1), spec);
        case F::Ozaki:
            return AnalyticModel::pre_schwarzian_only("ozaki:" + label,
                                                      halfplane_q(0.5 - spec.p1), spec);
        case F::Umezawa:
            return AnalyticModel::pre_schwarzian_only(
                "umezawa:" + label, halfplane_q(-spec.p1 / (2.0 * spec.p1 - 3.0)), spec);
        case F::Janowski: {
            const double A = spec.p1, B = spec.p2;
            return AnalyticModel::pre_schwarzian_only(
                "janowski:" + label,
                [sm, A, B](cplx z) {
                    const Jet3 zj = Jet3::variable(z);
                    const Jet3 g = sm.g_at(z);
                    const Jet3 qj = (A - B) * g / (1.0 + B * (zj * g));
                    return PreSchwarzian{qj.v, qj.d1};
                },
                spec);
        }
        case F::Robertson: {
            const cplx c = 1.0 + std::polar(1.0, -2.0 * spec.p1);
            return AnalyticModel::pre_schwarzian_only(
                "robertson:" + label,
                [sm, c](cplx z) {
                    const Jet3 zj = Jet3::variable(z);
                    const Jet3 g = sm.g_at(z);
                    const Jet3 qj = c * g / (1.0 - zj * g);
                    return PreSchwarzian{qj.v, qj.d1};
                },
                spec);
        }
        case F::Starlike:
        case F::SchlichtS: {
            // q = 2(2g + z g' + z g^2)/(1 - z^2 g^2): the starlike identity
            // with the removable singularity at 0 cancelled analytically.
            const char* name = spec.family == F::Starlike ? "starlike:" : "schlicht:";
            return AnalyticModel::pre_schwarzian_only(
                name + label,
                [sm](cplx z) {
                    const Jet3 zj = Jet3::variable(z);
                    const Jet3 g = sm.g_at(z);
                    const Jet3 gp = detail::shift_derivative(g);
                    const Jet3 zg = zj * g;
                    const Jet3 qj = 2.0 * (2.0 * g + zj * gp + zg * g) / (1.0 - zg * zg);
                    return PreSchwarzian{qj.v, qj.d1};
                },
                spec);
        }
        case F::StarlikeHalf:
            return AnalyticModel::pre_schwarzian_only(
                "starlike_half:" + label,
                [sm](cplx z) {
                    const Jet3 zj = Jet3::variable(z);
                    const Jet3 g = sm.g_at(z);
                    const Jet3 gp = detail::shift_derivative(g);
                    const Jet3 qj = (2.0 * g + zj * gp) / (1.0 - zj * g);
                    return PreSchwarzian{qj.v, qj.d1};
                },
                spec);
        case F::Noshiro:
            return AnalyticModel::pre_schwarzian_only(
                "noshiro:" + label,
                [sm](cplx z) {
                    const Jet3 zj = Jet3::variable(z);
                    const Jet3 g = sm.g_at(z);
                    const Jet3 gp = detail::shift_derivative(g);
                    const Jet3 w = zj * g;
                    const Jet3 wp = g + zj * gp;
                    const Jet3 qj = 2.0 * wp / (1.0 - w * w);
                    return PreSchwarzian{qj.v, qj.d1};
                },
                spec);
        case F::Nehari: {
            const double t = spec.p1;
            auto Sf = [sm, t](cplx z) {
                const cplx s = z * sm.g_at(z).v;
                const cplx d = 1.0 - z * z;
                return 2.0 * t * s / (d * d);
            };
            return riccati_model("nehari:" + label, Sf, spec);
        }
    }
    throw Error("random_class_member: unhandled class");
}

}  // namespace bma::catalog
