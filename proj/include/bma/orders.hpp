#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "bma/engine.hpp"
#include "bma/model.hpp"

namespace bma {

/// One-sided numerical estimate of sup or inf of |A_f| over the disk.
/// upper_order reports a lower bound of the true sup; lower_order an upper
/// bound of the true inf. radius_cap records the evaluation region |z| <= cap.
struct OrderEstimate {
    double value = 0.0;
    cplx witness{};
    double radius_cap = 0.0;
    std::size_t samples = 0;
};

namespace detail {

/// Derivative-free simplex refinement on (r, theta), r clamped to [0, cap].
/// Maximizes fn when maximize, else minimizes.
template <typename Fn>
std::pair<double, cplx> nelder_mead_polar(Fn&& fn, bool maximize, double r0, double th0,
                                          double cap, int iters) {
    const double sgn = maximize ? -1.0 : 1.0;
    auto eval = [&](std::array<double, 2> p) {
        const double r = std::clamp(p[0], 0.0, cap);
        return sgn * fn(std::polar(r, p[1]));
    };
    std::array<std::array<double, 2>, 3> pts = {{{r0, th0},
                                                 {std::min(cap, r0 + 0.02 * cap + 1e-6), th0},
                                                 {r0, th0 + 0.05}}};
    std::array<double, 3> val = {eval(pts[0]), eval(pts[1]), eval(pts[2])};
    for (int it = 0; it < iters; ++it) {
        // order best..worst
        std::array<int, 3> idx = {0, 1, 2};
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return val[a] < val[b]; });
        std::array<std::array<double, 2>, 3> sp;
        std::array<double, 3> sv;
        for (int i = 0; i < 3; ++i) sp[i] = pts[idx[i]], sv[i] = val[idx[i]];
        pts = sp, val = sv;
        const std::array<double, 2> centroid = {0.5 * (pts[0][0] + pts[1][0]),
                                                0.5 * (pts[0][1] + pts[1][1])};
        auto along = [&](double t) {
            return std::array<double, 2>{centroid[0] + t * (centroid[0] - pts[2][0]),
                                         centroid[1] + t * (centroid[1] - pts[2][1])};
        };
        const auto refl = along(1.0);
        const double frefl = eval(refl);
        if (frefl < val[0]) {
            const auto exp_ = along(2.0);
            const double fexp = eval(exp_);
            if (fexp < frefl)
                pts[2] = exp_, val[2] = fexp;
            else
                pts[2] = refl, val[2] = frefl;
        } else if (frefl < val[1]) {
            pts[2] = refl, val[2] = frefl;
        } else {
            const auto con = along(-0.5);
            const double fcon = eval(con);
            if (fcon < val[2]) {
                pts[2] = con, val[2] = fcon;
            } else {
                for (int i = 1; i < 3; ++i) {
                    pts[i] = {0.5 * (pts[i][0] + pts[0][0]), 0.5 * (pts[i][1] + pts[0][1])};
                    val[i] = eval(pts[i]);
                }
            }
        }
    }
    const int best = static_cast<int>(std::min_element(val.begin(), val.end()) - val.begin());
    const double r = std::clamp(pts[best][0], 0.0, cap);
    return {sgn * val[best], std::polar(r, pts[best][1])};
}

template <typename Fn>
OrderEstimate extremize_polar(Fn&& fn, bool maximize, double cap, int n_r, int n_theta,
                              int refine_iters) {
    using std::numbers::pi;
    double best = maximize ? -std::numeric_limits<double>::infinity()
                           : std::numeric_limits<double>::infinity();
    double best_r = 0.0, best_th = 0.0;
    auto consider = [&](double v, double r, double th) {
        if (maximize ? v > best : v < best) best = v, best_r = r, best_th = th;
    };
    consider(fn(cplx{0.0, 0.0}), 0.0, 0.0);
    for (int i = 0; i < n_r; ++i) {
        // cosine clustering toward the boundary, where sup/inf tend to live
        const double r = cap * std::sin(0.5 * pi * (i + 1) / n_r);
        for (int j = 0; j < n_theta; ++j) {
            const double th = 2.0 * pi * j / n_theta;
            consider(fn(std::polar(r, th)), r, th);
        }
    }
    auto [rv, rw] = nelder_mead_polar(fn, maximize, best_r, best_th, cap, refine_iters);
    OrderEstimate est;
    est.radius_cap = cap;
    est.samples = static_cast<std::size_t>(n_r) * n_theta + 1;
    // refinement is monotone: keep the grid extremum if the simplex stalls
    if (maximize ? rv >= best : rv <= best) {
        est.value = rv;
        est.witness = rw;
    } else {
        est.value = best;
        est.witness = std::polar(best_r, best_th);
    }
    return est;
}

}  // namespace detail

/// alpha_f = sup |A_f|; a certified lower bound of the true sup.
inline OrderEstimate upper_order(const AnalyticModel& model, double radius_cap = 1.0 - 1e-4,
                                 int n_r = 256, int n_theta = 512, int refine_iters = 60) {
    return detail::extremize_polar([&](cplx z) { return std::abs(a_operator(model, z)); }, true,
                                   radius_cap, n_r, n_theta, refine_iters);
}

/// mu_f = inf |A_f|; an upper bound of the true inf.
inline OrderEstimate lower_order(const AnalyticModel& model, double radius_cap = 1.0 - 1e-4,
                                 int n_r = 256, int n_theta = 512, int refine_iters = 60) {
    return detail::extremize_polar([&](cplx z) { return std::abs(a_operator(model, z)); }, false,
                                   radius_cap, n_r, n_theta, refine_iters);
}

/// Grid + simplex extremum of |P_f| over |z| <= cap (cap = 1 allowed for
/// models analytic on the closed disk).
inline OrderEstimate extremal_pole_modulus(const AnalyticModel& model, bool maximize,
                                           double radius_cap, int n_r = 128, int n_theta = 256,
                                           int refine_iters = 80) {
    return detail::extremize_polar([&](cplx z) { return pole(model, z).abs(); }, maximize,
                                   radius_cap, n_r, n_theta, refine_iters);
}

}  // namespace bma
