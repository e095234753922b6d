#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bma/bounds.hpp"
#include "bma/catalog.hpp"

using bma::cplx;
using bma::ClassSpec;
namespace cat = bma::catalog;

static const bma::SamplerConfig kCfg{10000, 42, 1.0 - 1e-6};

TEST_CASE("Theorem 3.1: power(0.5) meets the lower-order bound sharply") {
    const auto rep = bma::verify(cat::power(0.5), bma::bound_lower_order(0.5), kCfg,
                                 /*assume_class=*/true);
    CHECK(rep.holds);
    CHECK(rep.min_margin >= -1e-9);
    REQUIRE(rep.sharpness_gap.has_value());
    CHECK(*rep.sharpness_gap <= 1e-9);
    // equality on the negative real axis, exactly: |P_f(-r)| = (1-mu r)/(mu-r)
    const auto b = bma::bound_lower_order(0.5);
    for (double r : {0.1, 0.25, 0.45})
        CHECK(std::abs(b.margin(-r, bma::pole(cat::power(0.5), -r))) <= 1e-12);
    // mu = 1 at z = 0: margin is 1 - |P_f(0)|
    const auto b1 = bma::bound_lower_order(1.0);
    CHECK(std::abs(b1.margin(0.0, bma::ExtendedPoint::finite(0.25)) - 0.75) <= 1e-15);
}

TEST_CASE("exclusion disk: alpha = 1 reduces to |P_f| >= 1") {
    const auto b = bma::bound_exclusion_disk(1.0);
    bma::DiskSampler gen(1, 0.99);
    const auto m = cat::power(0.5);
    for (int i = 0; i < 500; ++i) {
        const cplx z = gen(i);
        const auto p = bma::pole(m, z);
        CHECK(std::abs(b.margin(z, p) - (p.abs() - 1.0)) <= 1e-12);
    }
    // power(2) with its upper order alpha = 2
    const auto rep =
        bma::verify(cat::power(2.0), bma::bound_exclusion_disk(2.0), kCfg, true);
    CHECK(rep.holds);
}

TEST_CASE("inclusion disk: power(0.5) with mu = 0.5 on |z| < 0.5; mu = 1 is |P| <= 1") {
    const auto rep =
        bma::verify(cat::power(0.5), bma::bound_inclusion_disk(0.5), kCfg, true);
    CHECK(rep.holds);
    const auto b1 = bma::bound_inclusion_disk(1.0);
    bma::DiskSampler gen(2, 0.99);
    const auto m = cat::power(2.0);  // concave
    for (int i = 0; i < 500; ++i) {
        const cplx z = gen(i);
        const auto p = bma::pole(m, z);
        CHECK(std::abs(b1.margin(z, p) - (1.0 - p.abs())) <= 1e-12);
        CHECK(b1.margin(z, p) >= -1e-9);
    }
}

TEST_CASE("pseudo-hyperbolic bound: margin is |1/A_f| - 1/alpha") {
    const auto m = cat::power(2.0);
    const auto b = bma::bound_pseudo_hyperbolic(2.0);
    bma::DiskSampler gen(3, 0.99);
    for (int i = 0; i < 500; ++i) {
        const cplx z = gen(i);
        const double expect = 1.0 / std::abs(bma::a_operator(m, z)) - 0.5;
        CHECK(std::abs(b.margin(z, bma::pole(m, z)) - expect) <= 1e-10);
    }
    // equality on the real axis where |A_f| = alpha = 2
    CHECK(std::abs(b.margin(0.5, bma::pole(m, 0.5))) <= 1e-12);
    // identity model: P_f = infinity gives +inf margin
    CHECK(bma::bound_pseudo_hyperbolic(1.0).margin(0.0, bma::ExtendedPoint::infinity()) ==
          bma::kInf);
}

TEST_CASE("Theorem 4.3: convex-of-order-alpha disk bound") {
    const double alpha = 0.3;
    // extremal g_alpha: equality everywhere
    const auto rep = bma::verify(cat::convex_order(alpha), bma::bound_convex_alpha(alpha), kCfg);
    CHECK(rep.holds);
    CHECK(std::abs(rep.min_margin) <= 1e-9);
    REQUIRE(rep.sharpness_gap.has_value());
    CHECK(*rep.sharpness_gap <= 1e-9);
    // random members
    for (std::uint64_t seed : {31ull, 32ull, 33ull}) {
        const auto m = cat::random_class_member(ClassSpec::convex_order(alpha), seed, 3);
        CHECK(bma::verify(m, bma::bound_convex_alpha(alpha), kCfg).holds);
    }
    // alpha = 0 reduces to |P_f| >= 1
    const auto b0 = bma::bound_convex_alpha(0.0);
    CHECK(std::abs(b0.margin(cplx{0.3, 0.2}, bma::ExtendedPoint::finite(1.5)) - 0.5) <= 1e-15);
}

TEST_CASE("Eq. (alpha1) modulus bound, and the Ozaki/Umezawa mappings") {
    const double alpha = 0.4;
    const auto rep =
        bma::verify(cat::convex_order(alpha), bma::bound_modulus_alpha(alpha), kCfg);
    CHECK(rep.holds);
    REQUIRE(rep.sharpness_gap.has_value());
    CHECK(*rep.sharpness_gap <= 1e-9);  // equality at z = r (alpha > 0)
    // Ozaki(lambda) is accepted by the bound at alpha = 1/2 - lambda
    const auto oz = cat::random_class_member(ClassSpec::ozaki(0.75), 41, 2);
    CHECK(bma::verify(oz, bma::bound_modulus_alpha(0.5 - 0.75), kCfg).holds);
    // Umezawa(u) at alpha = -u/(2u-3)
    const double u = 2.0;
    const auto um = cat::random_class_member(ClassSpec::umezawa(u), 43, 2);
    CHECK(bma::verify(um, bma::bound_modulus_alpha(-u / (2.0 * u - 3.0)), kCfg).holds);
}

TEST_CASE("Janowski bound: sharp on the extremal, holds on random members") {
    const double A = 0.8, B = -0.4;
    const auto rep = bma::verify(cat::janowski(A, B), bma::bound_janowski(A, B), kCfg);
    CHECK(rep.holds);
    REQUIRE(rep.sharpness_gap.has_value());
    CHECK(*rep.sharpness_gap <= 1e-9);
    for (std::uint64_t seed : {51ull, 52ull}) {
        const auto m = cat::random_class_member(ClassSpec::janowski(A, B), seed, 3);
        CHECK(bma::verify(m, bma::bound_janowski(A, B), kCfg).holds);
    }
}

TEST_CASE("reduction identities: Janowski specializations agree pointwise") {
    const auto m = cat::power(0.7);
    bma::DiskSampler gen(4, 0.99);
    const auto jan_conv = bma::bound_janowski(1.0, -1.0);
    const auto excl = bma::bound_exclusion_disk(1.0);
    const double alpha = 0.35;
    const auto jan_alpha = bma::bound_janowski(1.0, -1.0 + 2.0 * alpha);
    const auto mod_alpha = bma::bound_modulus_alpha(alpha);
    for (int i = 0; i < 1000; ++i) {
        const cplx z = gen(i);
        const auto p = bma::pole(m, z);
        CHECK(std::abs(jan_conv.margin(z, p) - excl.margin(z, p)) <= 1e-12);
        CHECK(std::abs(jan_alpha.margin(z, p) - mod_alpha.margin(z, p)) <= 1e-12);
    }
}

TEST_CASE("Robertson bound") {
    const double alpha = 0.5;
    const auto rep = bma::verify(cat::robertson(alpha), bma::bound_robertson(alpha), kCfg);
    CHECK(rep.holds);
    REQUIRE(rep.sharpness_gap.has_value());
    CHECK(*rep.sharpness_gap <= 1e-9);
    // alpha = 0 reduces to |P_f| >= 1
    const auto b0 = bma::bound_robertson(0.0);
    CHECK(std::abs(b0.margin(0.1, bma::ExtendedPoint::finite(1.25)) - 0.25) <= 1e-14);
    for (std::uint64_t seed : {61ull, 62ull}) {
        const auto m = cat::random_class_member(ClassSpec::robertson(0.785398163), seed, 3);
        CHECK(bma::verify(m, bma::bound_robertson(0.785398163), kCfg).holds);
    }
}

TEST_CASE("starlike bound: Koebe is sharp on the positive real axis") {
    const auto rep = bma::verify(cat::koebe(0.0), bma::bound_starlike(), kCfg);
    CHECK(rep.holds);
    REQUIRE(rep.sharpness_gap.has_value());
    CHECK(*rep.sharpness_gap <= 1e-9);
    // |P_f(0)| >= 1/2 at the origin
    const auto b = bma::bound_starlike();
    CHECK(std::abs(b.margin(0.0, bma::ExtendedPoint::finite(0.5))) <= 1e-15);
    for (std::uint64_t seed : {71ull, 72ull}) {
        const auto m = cat::random_class_member(ClassSpec::starlike(), seed, 3);
        CHECK(bma::verify(m, bma::bound_starlike(), kCfg).holds);
    }
}

TEST_CASE("starlike-of-order-1/2 bound: half-plane map is sharp") {
    const auto rep = bma::verify(cat::half_plane(0.0), bma::bound_starlike_half(), kCfg);
    CHECK(rep.holds);
    REQUIRE(rep.sharpness_gap.has_value());
    CHECK(*rep.sharpness_gap <= 1e-9);
    for (std::uint64_t seed : {81ull, 82ull}) {
        const auto m = cat::random_class_member(ClassSpec::starlike_half(), seed, 3);
        CHECK(bma::verify(m, bma::bound_starlike_half(), kCfg).holds);
    }
}

TEST_CASE("Noshiro-Warschawski bound") {
    const auto rep = bma::verify(cat::noshiro_extremal(0.0), bma::bound_noshiro(), kCfg);
    CHECK(rep.holds);
    REQUIRE(rep.sharpness_gap.has_value());
    CHECK(*rep.sharpness_gap <= 1e-9);
    // P_f = infinity is vacuously fine for a lower bound
    CHECK(bma::bound_noshiro().margin(0.3, bma::ExtendedPoint::infinity()) == bma::kInf);
    for (std::uint64_t seed : {91ull, 92ull}) {
        const auto m = cat::random_class_member(ClassSpec::noshiro(), seed, 3);
        CHECK(bma::verify(m, bma::bound_noshiro(), kCfg).holds);
    }
}

TEST_CASE("class hypothesis is enforced unless overridden") {
    const auto m = cat::exp_map(3.0);  // untagged
    CHECK_THROWS_AS(bma::verify(m, bma::bound_starlike(), kCfg), bma::HypothesisMismatch);
    // with the override, the bound is evaluated (and actually violated here)
    const auto rep = bma::verify(m, bma::bound_exclusion_disk(1.0), kCfg, true);
    CHECK(!rep.holds);  // P_f = z + 2/3 enters the unit disk
}

TEST_CASE("Theorem 4.1 converse fails on g_alpha") {
    const auto out = bma::implied_convexity_order(cat::convex_order(0.4));
    CHECK(out.t_hat <= 5e-3);  // sampling can only approach the true min |P_f| = 1
    CHECK(out.implied_order <= 2.5e-3);
    CHECK(out.min_re >= 0.4 - 1e-9);  // the true order is 0.4
    CHECK(out.consistent);
    // half-plane map: P_f is identically 1
    const auto hp = bma::implied_convexity_order(cat::half_plane(0.0));
    CHECK(hp.implied_order <= 1e-9);
    // a pole floor of 1.5 implies order 0.5/2.5 = 0.2
    const auto em = bma::implied_convexity_order(cat::exp_map(0.8));  // P_f = z + 2.5
    CHECK(em.t_hat >= 0.5);  // sampling min of |P_f| sits just above the true 1.5
    CHECK(em.t_hat <= 0.5 + 5e-3);
    CHECK(std::abs(em.implied_order - 0.2) <= 2e-3);
}
