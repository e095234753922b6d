#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <utility>

#include "bma/errors.hpp"
#include "bma/jet.hpp"

namespace bma {

/// Pre-Schwarzian q = f''/f' and its derivative at a point.
struct PreSchwarzian {
    cplx q{};
    cplx dq{};
};

/// Function-class membership tag with validated parameter ranges.
struct ClassSpec {
    enum class Family {
        ConvexOrder,   // Re{1 + zq} >= alpha, alpha < 1
        Janowski,      // 1 + zq subordinate to (1+Az)/(1+Bz), -1 <= B < A <= 1
        Robertson,     // Re{e^{i alpha}(1 + zq)} > 0, |alpha| < pi/2
        Starlike,      // Re{z f'/f} > 0, normalized
        StarlikeHalf,  // Re{2z f'/f - 1} > 0
        Ozaki,         // Re{1 + zq} >= 1/2 - lambda, lambda in [1/2, 1]
        Umezawa,       // Re{1 + zq} >= -alpha/(2 alpha - 3), alpha > 3/2
        Noshiro,       // Re{f'} > 0
        Nehari,        // |Sf| <= 2t/(1-|z|^2)^2, t in (0, 1]
        SchlichtS,     // normalized univalent
    };

    Family family;
    double p1 = 0.0;  // alpha / A / lambda / t depending on family
    double p2 = 0.0;  // B for Janowski

    static ClassSpec convex_order(double alpha) {
        if (!(alpha < 1.0)) throw Error("ConvexOrder: alpha must be < 1");
        return {Family::ConvexOrder, alpha};
    }
    static ClassSpec janowski(double A, double B) {
        if (!(-1.0 <= B && B < A && A <= 1.0))
            throw Error("Janowski: need -1 <= B < A <= 1");
        return {Family::Janowski, A, B};
    }
    static ClassSpec robertson(double alpha) {
        if (!(std::abs(alpha) < std::numbers::pi / 2))
            throw Error("Robertson: need |alpha| < pi/2");
        return {Family::Robertson, alpha};
    }
    static ClassSpec starlike() { return {Family::Starlike}; }
    static ClassSpec starlike_half() { return {Family::StarlikeHalf}; }
    static ClassSpec ozaki(double lambda) {
        if (!(0.5 <= lambda && lambda <= 1.0)) throw Error("Ozaki: lambda in [1/2, 1]");
        return {Family::Ozaki, lambda};
    }
    static ClassSpec umezawa(double alpha) {
        if (!(alpha > 1.5)) throw Error("Umezawa: alpha > 3/2");
        return {Family::Umezawa, alpha};
    }
    static ClassSpec noshiro() { return {Family::Noshiro}; }
    static ClassSpec nehari(double t) {
        if (!(0.0 < t && t <= 1.0)) throw Error("Nehari: t in (0, 1]");
        return {Family::Nehari, t};
    }
    static ClassSpec schlicht() { return {Family::SchlichtS}; }
};

/// Evaluator for an analytic function on the disk. Kind Full exposes the
/// order-3 jet of f itself; PreSchwarzianOnly exposes only (q, q'), which is
/// all the pole, order, and bound machinery needs.
class AnalyticModel {
public:
    enum class Kind { Full, PreSchwarzianOnly };

    using JetFn = std::function<Jet3(cplx)>;
    using QFn = std::function<PreSchwarzian(cplx)>;

    static AnalyticModel full(std::string label, JetFn jets,
                              std::optional<ClassSpec> tag = std::nullopt,
                              bool extremal = false) {
        AnalyticModel m;
        m.kind_ = Kind::Full;
        m.label_ = std::move(label);
        m.jet_fn_ = std::move(jets);
        m.tag_ = tag;
        m.extremal_ = extremal;
        return m;
    }

    static AnalyticModel pre_schwarzian_only(std::string label, QFn q,
                                             std::optional<ClassSpec> tag = std::nullopt,
                                             bool extremal = false) {
        AnalyticModel m;
        m.kind_ = Kind::PreSchwarzianOnly;
        m.label_ = std::move(label);
        m.q_fn_ = std::move(q);
        m.tag_ = tag;
        m.extremal_ = extremal;
        return m;
    }

    Kind kind() const { return kind_; }
    const std::string& label() const { return label_; }
    const std::optional<ClassSpec>& class_tag() const { return tag_; }
    bool extremal() const { return extremal_; }

    Jet3 jet_at(cplx z) const {
        if (kind_ != Kind::Full) throw Error(label_ + ": jet_at needs a kind-full model");
        return jet_fn_(z);
    }

    PreSchwarzian pre_schwarzian_at(cplx z) const {
        if (kind_ == Kind::PreSchwarzianOnly) return q_fn_(z);
        const Jet3 j = jet_fn_(z);
        if (j.d1 == 0.0) throw NotLocallyUnivalent{};
        const cplx q = j.d2 / j.d1;
        return {q, j.d3 / j.d1 - q * q};
    }

private:
    Kind kind_ = Kind::Full;
    std::string label_;
    JetFn jet_fn_;
    QFn q_fn_;
    std::optional<ClassSpec> tag_;
    bool extremal_ = false;
};

/// Analytic self-map h of the disk with h(0) = 0, written h(z) = z g(z)
/// with g itself a self-map (finite Blaschke product times a constant).
struct SelfMapModel {
    std::function<Jet3(cplx)> g_jet;

    Jet3 g_at(cplx z) const { return g_jet(z); }
    Jet3 h_at(cplx z) const { return Jet3::variable(z) * g_jet(z); }
};

}  // namespace bma
