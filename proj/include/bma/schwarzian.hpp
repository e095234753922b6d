#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <variant>

#include "bma/bounds.hpp"
#include "bma/engine.hpp"
#include "bma/model.hpp"
#include "bma/sampling.hpp"

namespace bma {

/// First positive solution of 2a tan(a) = 1, bisected to machine precision.
/// Cached: single source of truth for the constant-Schwarzian criterion.
inline double critical_a() {
    static const double value = [] {
        double lo = 0.0, hi = std::numbers::pi / 2 - 1e-9;
        auto f = [](double a) { return 2.0 * a * std::tan(a) - 1.0; };
        for (int i = 0; i < 200; ++i) {
            const double mid = 0.5 * (lo + hi);
            if (mid == lo || mid == hi) break;
            (f(mid) < 0.0 ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    }();
    return value;
}

/// Radial Schwarzian bound together with the |f''/f'| envelope it implies
/// for functions with f''(0) = 0.
struct SchwarzianProfile {
    enum class Kind { Constant, Power, PowerSimple, Nehari };
    Kind kind;
    int n = 0;        ///< Power exponent n, or m for PowerSimple
    double t = 1.0;   ///< Nehari parameter t in (0, 1]

    static SchwarzianProfile constant() { return {Kind::Constant}; }
    static SchwarzianProfile power(int n) {
        if (n < 1) throw Error("SchwarzianProfile::power: n >= 1");
        return {Kind::Power, n};
    }
    static SchwarzianProfile power_simple(int m) {
        if (m < 0) throw Error("SchwarzianProfile::power_simple: m >= 0");
        return {Kind::PowerSimple, m};
    }
    static SchwarzianProfile nehari(double t) {
        if (!(0.0 < t && t <= 1.0)) throw Error("SchwarzianProfile::nehari: t in (0,1]");
        return {Kind::Nehari, 0, t};
    }

    /// The hypothesis: pointwise bound on |Sf| at |z| = r.
    double schwarzian_bound(double r) const {
        switch (kind) {
            case Kind::Constant: {
                const double a = critical_a();
                return 2.0 * a * a;
            }
            case Kind::Power:
                return n * std::pow(r, n - 1) - 0.5 * std::pow(r, 2 * n);
            case Kind::PowerSimple:
                return (n + 0.5) * std::pow(r, n);
            case Kind::Nehari: {
                const double d = 1.0 - r * r;
                return 2.0 * t / (d * d);
            }
        }
        return 0.0;
    }
};

/// Upper bound for |f''/f'| at |z| = r implied by the profile (f''(0) = 0).
inline double envelope(const SchwarzianProfile& p, double r) {
    using K = SchwarzianProfile::Kind;
    switch (p.kind) {
        case K::Constant: {
            const double a = critical_a();
            return 2.0 * a * std::tan(a * r);
        }
        case K::Power:
            return std::pow(r, p.n);
        case K::PowerSimple:
            // dominated by the Power profile with n = m + 1
            return std::pow(r, p.n + 1);
        case K::Nehari:
            return 2.0 * p.t * r / (1.0 - r * r);
    }
    return 0.0;
}

struct ConvexityCertificate {
    bool certified = false;
    std::string reason;           ///< set when not applicable
    std::optional<cplx> witness;  ///< hypothesis-violation point
    double min_pole_modulus = 0.0;
};

/// Section-5 convexity certificate: checks f''(0) = 0 and |Sf| within the
/// profile on low-discrepancy samples, then confirms the implied pole bound
/// |P_f(z)| >= 2/envelope(|z|) - |z| by direct pole sampling.
inline ConvexityCertificate convexity_certificate(const AnalyticModel& model,
                                                  const SchwarzianProfile& profile,
                                                  std::size_t samples = 10000,
                                                  std::uint64_t seed = 42) {
    ConvexityCertificate cert;
    if (std::abs(model.pre_schwarzian_at(0.0).q) > 1e-10) {
        cert.reason = "f''(0) != 0";
        return cert;
    }
    DiskSampler gen(seed, 1.0 - 1e-4);
    cert.min_pole_modulus = kInf;
    for (std::size_t i = 0; i < samples; ++i) {
        const cplx z = gen(i);
        const double r = std::abs(z);
        if (std::abs(schwarzian(model, z)) > profile.schwarzian_bound(r) + 1e-9) {
            cert.reason = "|Sf| exceeds the profile";
            cert.witness = z;
            return cert;
        }
        const double pm = pole(model, z).abs();
        cert.min_pole_modulus = std::min(cert.min_pole_modulus, pm);
        const double env = envelope(profile, r);
        const double derived = env > 0.0 ? 2.0 / env - r : kInf;
        if (pm < std::min(derived, 1.0) - 1e-6) {
            cert.reason = "pole bound violated";  // would contradict the theorem
            cert.witness = z;
            return cert;
        }
    }
    cert.certified = true;
    return cert;
}

/// Under (1-|z|^2)^2 |Sf| <= 2t and f''(0) = 0, P_f lies outside the unit
/// disk on |z| <= 1/(1+t). The comparison argument bounds |P_f| below by
/// (1-r^2)/(tr) - r, which is decreasing in r and equals 1 exactly at
/// r = 1/(1+t); the guaranteed region is therefore the subdisk, and sampled
/// counterexamples rule out the outer annulus.
inline BoundReport prop54_region_check(const AnalyticModel& model, double t,
                                       std::size_t samples = 10000, std::uint64_t seed = 42) {
    if (!(0.0 < t && t <= 1.0)) throw Error("prop54_region_check: t in (0,1]");
    if (std::abs(model.pre_schwarzian_at(0.0).q) > 1e-10)
        throw HypothesisMismatch("prop54: f''(0) != 0");
    BoundReport rep;
    rep.bound = "prop54_region";
    rep.model = model.label();
    rep.samples = samples;
    DiskSampler gen(seed, 1.0 - 1e-4);
    const double r_max = 1.0 / (1.0 + t);
    for (std::size_t i = 0; i < samples; ++i) {
        const cplx z = gen(i);
        const double r2 = 1.0 - std::norm(z);
        if (std::abs(schwarzian(model, z)) * r2 * r2 > 2.0 * t + 1e-9)
            throw HypothesisMismatch("prop54: Schwarzian bound violated at sample");
        if (std::abs(z) > r_max) continue;
        const double margin = pole(model, z).abs() - 1.0;
        if (margin < rep.min_margin) {
            rep.min_margin = margin;
            rep.witness = z;
        }
    }
    rep.holds = rep.min_margin >= -kBoundTol;
    return rep;
}

/// Proposition 5.5 radius: for f in N_0 with |P_f(z)| <= k, necessarily
/// |z| >= 2/(sqrt(k^2+8) + k).
inline double prop55_radius_bound(double k) {
    if (!(k > 1.0)) throw Error("prop55_radius_bound: k > 1");
    return 2.0 / (std::sqrt(k * k + 8.0) + k);
}

/// Checks the Prop 5.5 implication on one N_0 model by sampling.
inline bool prop55_check(const AnalyticModel& model, double k, std::size_t samples = 2000,
                         std::uint64_t seed = 42) {
    const double r_star = prop55_radius_bound(k);
    DiskSampler gen(seed, 1.0 - 1e-4);
    for (std::size_t i = 0; i < samples; ++i) {
        const cplx z = gen(i);
        if (pole(model, z).abs() <= k && std::abs(z) < r_star - 1e-9) return false;
    }
    return true;
}

}  // namespace bma
