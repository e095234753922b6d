#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

#include "bma/engine.hpp"
#include "bma/errors.hpp"
#include "bma/model.hpp"
#include "bma/moebius.hpp"
#include "bma/sampling.hpp"

namespace bma {

inline constexpr double kBoundTol = 1e-9;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// One pole-localization inequality, margin-oriented: margin(z, P_f(z)) >= 0
/// means the inequality holds at z. Upper-bound theorems are negated
/// internally so a single verdict rule covers everything.
struct BoundSpec {
    std::string id;
    std::function<double(cplx, const ExtendedPoint&)> margin;
    /// Restricts the sampled region (Theorem 3.4 (ii) only applies on |z| < mu).
    std::function<bool(cplx)> domain = [](cplx) { return true; };
    /// Class-hypothesis gate checked against the model's tag.
    std::function<bool(const std::optional<ClassSpec>&)> accepts =
        [](const std::optional<ClassSpec>&) { return true; };
    /// Equality locus of the canonical extremal model, t in [0,1) -> z.
    std::optional<std::function<cplx(double)>> equality_locus;
};

struct BoundReport {
    std::string bound;
    std::string model;
    std::size_t samples = 0;
    double min_margin = kInf;
    cplx witness{};
    bool holds = false;
    std::optional<double> sharpness_gap;
};

struct SamplerConfig {
    std::size_t count = 10000;
    std::uint64_t seed = 42;
    double radius_cap = 1.0 - 1e-6;
};

namespace detail {
inline std::function<cplx(double)> spiral_locus() {
    return [](double t) { return std::polar(0.9 * t, 7.0 * t); };
}
inline std::function<cplx(double)> ray_locus(cplx dir) {
    return [dir](double t) { return 0.995 * t * dir; };
}
/// Half-plane order implied by a class tag (Re{1+zq} >= value), if any.
inline std::optional<double> halfplane_order(const ClassSpec& s) {
    using F = ClassSpec::Family;
    switch (s.family) {
        case F::ConvexOrder: return s.p1;
        case F::Ozaki: return 0.5 - s.p1;
        case F::Umezawa: return -s.p1 / (2.0 * s.p1 - 3.0);
        default: return std::nullopt;
    }
}
}  // namespace detail

/// Upper bound on |P_f| from the lower order mu > 0, via the Moebius transfer
/// w -> (w+z)/(1+conj(z)w) of the disk |w| <= 1/mu. For mu >= 1 the image
/// stays inside |P| <= (1+mu|z|)/(|z|+mu) on the whole disk. For mu < 1 the
/// transferred disk is larger than the unit disk and the sharp bound becomes
/// |P| <= (1-mu|z|)/(mu-|z|), valid only on |z| < mu; the power map (a < 1)
/// attains it on the negative real axis and its poles genuinely escape to
/// infinity at |z| = mu, so no global bound exists there.
inline BoundSpec bound_lower_order(double mu) {
    if (!(mu > 0.0)) throw Error("bound_lower_order: mu > 0 required");
    BoundSpec b;
    b.id = "lower_order";
    b.margin = [mu](cplx z, const ExtendedPoint& p) {
        if (p.infinite) return -kInf;
        const double r = std::abs(z);
        if (mu >= 1.0) return (1.0 + mu * r) / (r + mu) - std::abs(p.value);
        return (1.0 - mu * r) / (mu - r) - std::abs(p.value);
    };
    if (mu < 1.0) b.domain = [mu](cplx z) { return std::abs(z) < mu; };
    b.equality_locus = detail::ray_locus(mu < 1.0 ? -1.0 : 1.0);
    return b;
}

/// |P_f(z) - c(z)| >= rho(z) with c = z(a^2-1)/(a^2-|z|^2),
/// rho = a(1-|z|^2)/(a^2-|z|^2), a = upper order >= 1.
inline BoundSpec bound_exclusion_disk(double alpha) {
    if (!(alpha >= 1.0)) throw Error("bound_exclusion_disk: alpha >= 1 required");
    BoundSpec b;
    b.id = "exclusion_disk";
    b.margin = [alpha](cplx z, const ExtendedPoint& p) {
        if (p.infinite) return kInf;
        const double r2 = std::norm(z);
        const double den = alpha * alpha - r2;
        const cplx c = z * (alpha * alpha - 1.0) / den;
        const double rho = alpha * (1.0 - r2) / den;
        return std::abs(p.value - c) - rho;
    };
    return b;
}

/// Companion inclusion disk, valid only on |z| < mu.
inline BoundSpec bound_inclusion_disk(double mu) {
    if (!(mu > 0.0)) throw Error("bound_inclusion_disk: mu > 0 required");
    BoundSpec b;
    b.id = "inclusion_disk";
    b.domain = [mu](cplx z) { return std::abs(z) < mu; };
    b.margin = [mu](cplx z, const ExtendedPoint& p) {
        if (p.infinite) return -kInf;
        const double r2 = std::norm(z);
        const double den = mu * mu - r2;
        const cplx c = z * (mu * mu - 1.0) / den;
        const double rho = mu * (1.0 - r2) / den;
        return rho - std::abs(p.value - c);
    };
    return b;
}

/// P_f(z) stays outside sigma_z(D(0, 1/alpha)): pseudo-hyperbolic distance
/// |sigma_{-z}(P_f(z))| >= 1/alpha.
inline BoundSpec bound_pseudo_hyperbolic(double alpha) {
    if (!(alpha >= 1.0)) throw Error("bound_pseudo_hyperbolic: alpha >= 1 required");
    BoundSpec b;
    b.id = "pseudo_hyperbolic";
    b.margin = [alpha](cplx z, const ExtendedPoint& p) {
        if (p.infinite) return kInf;
        return pseudo_hyperbolic(z, p.value) - 1.0 / alpha;
    };
    return b;
}

/// Convex of order alpha: |P_f + alpha z/(1-alpha)| >= 1/(1-alpha).
inline BoundSpec bound_convex_alpha(double alpha) {
    if (!(0.0 <= alpha && alpha < 1.0)) throw Error("bound_convex_alpha: alpha in [0,1)");
    BoundSpec b;
    b.id = "convex_alpha";
    b.margin = [alpha](cplx z, const ExtendedPoint& p) {
        if (p.infinite) return kInf;
        return std::abs(p.value + alpha * z / (1.0 - alpha)) - 1.0 / (1.0 - alpha);
    };
    b.accepts = [alpha](const std::optional<ClassSpec>& t) {
        return t && t->family == ClassSpec::Family::ConvexOrder && t->p1 >= alpha - 1e-12;
    };
    b.equality_locus = detail::spiral_locus();  // extremal g_alpha: equality everywhere
    return b;
}

/// |P_f(z)| >= (1 - |alpha||z|)/(1 - alpha) for Re{1 + zq} >= alpha < 1.
inline BoundSpec bound_modulus_alpha(double alpha) {
    if (!(alpha < 1.0)) throw Error("bound_modulus_alpha: alpha < 1");
    BoundSpec b;
    b.id = "modulus_alpha";
    b.margin = [alpha](cplx z, const ExtendedPoint& p) {
        if (p.infinite) return kInf;
        return std::abs(p.value) - (1.0 - std::abs(alpha) * std::abs(z)) / (1.0 - alpha);
    };
    b.accepts = [alpha](const std::optional<ClassSpec>& t) {
        if (!t) return false;
        const auto ord = detail::halfplane_order(*t);
        return ord && *ord >= alpha - 1e-12;
    };
    b.equality_locus = alpha == 0.0 ? detail::spiral_locus()
                                    : detail::ray_locus(alpha > 0.0 ? 1.0 : -1.0);
    return b;
}

/// Janowski class: |P_f(z)| >= (2 - |A+B||z|)/(A - B).
inline BoundSpec bound_janowski(double A, double B) {
    ClassSpec::janowski(A, B);  // validate the parameter range
    BoundSpec b;
    b.id = "janowski";
    b.margin = [A, B](cplx z, const ExtendedPoint& p) {
        if (p.infinite) return kInf;
        return std::abs(p.value) - (2.0 - std::abs(A + B) * std::abs(z)) / (A - B);
    };
    b.accepts = [A, B](const std::optional<ClassSpec>& t) {
        return t && t->family == ClassSpec::Family::Janowski && std::abs(t->p1 - A) < 1e-12 &&
               std::abs(t->p2 - B) < 1e-12;
    };
    b.equality_locus = A + B == 0.0 ? detail::spiral_locus()
                                    : detail::ray_locus(A + B > 0.0 ? -1.0 : 1.0);
    return b;
}

/// Robertson class: |P_f(z)| >= (2 - |1 - e^{2ia}||z|)/|1 + e^{2ia}|.
inline BoundSpec bound_robertson(double alpha) {
    ClassSpec::robertson(alpha);
    const cplx lambda = std::polar(1.0, 2.0 * alpha);
    BoundSpec b;
    b.id = "robertson";
    b.margin = [lambda](cplx z, const ExtendedPoint& p) {
        if (p.infinite) return kInf;
        return std::abs(p.value) -
               (2.0 - std::abs(1.0 - lambda) * std::abs(z)) / std::abs(1.0 + lambda);
    };
    b.accepts = [alpha](const std::optional<ClassSpec>& t) {
        return t && t->family == ClassSpec::Family::Robertson && std::abs(t->p1 - alpha) < 1e-12;
    };
    if (std::abs(1.0 - lambda) < 1e-14) {
        b.equality_locus = detail::spiral_locus();
    } else {
        b.equality_locus = detail::ray_locus(std::conj(1.0 - lambda) / std::abs(1.0 - lambda));
    }
    return b;
}

/// Normalized starlike: |P_f(z) - z| >= (1 - |z|^2)/(2 + |z|).
inline BoundSpec bound_starlike() {
    BoundSpec b;
    b.id = "starlike";
    b.margin = [](cplx z, const ExtendedPoint& p) {
        if (p.infinite) return kInf;
        const double r = std::abs(z);
        return std::abs(p.value - z) - (1.0 - r * r) / (2.0 + r);
    };
    b.accepts = [](const std::optional<ClassSpec>& t) {
        return t && (t->family == ClassSpec::Family::Starlike ||
                     t->family == ClassSpec::Family::SchlichtS);
    };
    b.equality_locus = detail::ray_locus(1.0);  // koebe(0): positive real axis
    return b;
}

/// Starlike of order 1/2: |P_f(z) - z| >= 1 - |z|.
inline BoundSpec bound_starlike_half() {
    BoundSpec b;
    b.id = "starlike_half";
    b.margin = [](cplx z, const ExtendedPoint& p) {
        if (p.infinite) return kInf;
        return std::abs(p.value - z) - (1.0 - std::abs(z));
    };
    b.accepts = [](const std::optional<ClassSpec>& t) {
        return t && t->family == ClassSpec::Family::StarlikeHalf;
    };
    b.equality_locus = detail::ray_locus(1.0);  // half_plane(0): positive real axis
    return b;
}

/// Noshiro-Warschawski class Re{f'} > 0: |P_f(z) - z| >= 1 - |z|^2.
inline BoundSpec bound_noshiro() {
    BoundSpec b;
    b.id = "noshiro";
    b.margin = [](cplx z, const ExtendedPoint& p) {
        if (p.infinite) return kInf;
        return std::abs(p.value - z) - (1.0 - std::norm(z));
    };
    b.accepts = [](const std::optional<ClassSpec>& t) {
        return t && t->family == ClassSpec::Family::Noshiro;
    };
    b.equality_locus = detail::ray_locus(1.0);  // noshiro_extremal(0): real axis
    return b;
}

/// Deterministic low-discrepancy verification of one bound over one model.
/// Sharpness gap is populated for extremal models when the bound carries an
/// equality locus (or when an explicit locus override is supplied).
inline BoundReport verify(const AnalyticModel& model, const BoundSpec& bound,
                          const SamplerConfig& sampler = {}, bool assume_class = false,
                          std::optional<std::function<cplx(double)>> locus_override = std::nullopt) {
    if (!assume_class && !bound.accepts(model.class_tag()))
        throw HypothesisMismatch(model.label() + " vs bound " + bound.id);
    BoundReport rep;
    rep.bound = bound.id;
    rep.model = model.label();
    rep.samples = sampler.count;
    DiskSampler gen(sampler.seed, sampler.radius_cap);
    for (std::size_t i = 0; i < sampler.count; ++i) {
        const cplx z = gen(i);
        if (!bound.domain(z)) continue;
        const double m = bound.margin(z, pole(model, z));
        if (m < rep.min_margin) {
            rep.min_margin = m;
            rep.witness = z;
        }
    }
    rep.holds = rep.min_margin >= -kBoundTol;
    const auto& locus = locus_override ? locus_override : bound.equality_locus;
    if (locus && (model.extremal() || locus_override)) {
        double gap = kInf;
        const int n = 512;
        for (int i = 0; i < n; ++i) {
            const cplx z = (*locus)(static_cast<double>(i) / n);
            if (!bound.domain(z)) continue;
            const double m = std::abs(bound.margin(z, pole(model, z)));
            gap = std::min(gap, m);
        }
        rep.sharpness_gap = gap;
    }
    return rep;
}

/// Theorem 4.1: a floor 1 + t on |P_f| implies Re{1 + zq} >= t/(2+t).
struct ImpliedConvexityOrder {
    double t_hat = 0.0;
    double implied_order = 0.0;
    double min_abs_pole = 0.0;
    double min_re = 0.0;
    bool consistent = false;  ///< min Re{1+zq} >= implied_order - 1e-6
};

inline ImpliedConvexityOrder implied_convexity_order(const AnalyticModel& model,
                                                     std::size_t sample_budget = 10000,
                                                     std::uint64_t seed = 42) {
    DiskSampler gen(seed, 1.0 - 1e-6);
    ImpliedConvexityOrder out;
    out.min_abs_pole = kInf;
    out.min_re = kInf;
    for (std::size_t i = 0; i < sample_budget; ++i) {
        const cplx z = gen(i);
        out.min_abs_pole = std::min(out.min_abs_pole, pole(model, z).abs());
        out.min_re = std::min(out.min_re, (1.0 + z * model.pre_schwarzian_at(z).q).real());
    }
    out.t_hat = std::max(0.0, out.min_abs_pole - 1.0);
    out.implied_order = out.t_hat / (2.0 + out.t_hat);
    out.consistent = out.min_re >= out.implied_order - 1e-6;
    return out;
}

}  // namespace bma
