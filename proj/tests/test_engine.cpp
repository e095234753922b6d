#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bma/catalog.hpp"
#include "bma/engine.hpp"
#include "bma/sampling.hpp"

using bma::cplx;
namespace cat = bma::catalog;

static cplx random_disk_point(std::mt19937_64& rng, double cap = 0.9) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    return std::polar(cap * std::sqrt(uni(rng)), 6.283185307179586 * uni(rng));
}

TEST_CASE("bma has second-order contact with the model") {
    const bma::AnalyticModel models[] = {cat::power(0.5), cat::koebe(0.3), cat::exp_map(1.1),
                                         cat::janowski(0.9, -0.2)};
    std::mt19937_64 rng(1);
    for (const auto& m : models) {
        for (int i = 0; i < 50; ++i) {
            const cplx zeta = random_disk_point(rng);
            const auto j = m.jet_at(zeta);
            const auto M = bma::bma(m, zeta);
            // Taylor coefficients of M at zeta, via the rational derivatives
            auto mv = [&](cplx z) { return (M.a * z + M.b) / (M.c * z + M.d); };
            const cplx den = M.c * zeta + M.d;
            const cplx det = M.a * M.d - M.b * M.c;
            const cplx m1 = det / (den * den);
            const cplx m2 = -2.0 * M.c * det / (den * den * den);
            const double tol = 1e-9 * std::max(1.0, std::abs(j.d2));
            CHECK(std::abs(mv(zeta) - j.v) <= tol);
            CHECK(std::abs(m1 - j.d1) <= tol);
            CHECK(std::abs(m2 - j.d2) <= tol);
        }
    }
}

TEST_CASE("koebe(0) BMA at 0 is z/(1-2z)") {
    const auto M = bma::bma(cat::koebe(0.0), 0.0);
    for (cplx z : {cplx{0.1}, cplx{0.2, 0.1}, cplx{-0.3, 0.2}}) {
        const cplx got = (M.a * z + M.b) / (M.c * z + M.d);
        CHECK(std::abs(got - z / (1.0 - 2.0 * z)) <= 1e-14);
    }
}

TEST_CASE("q = 0 gives an affine BMA with pole at infinity") {
    const auto m = cat::identity();
    const auto M = bma::bma(m, cplx{0.2, 0.1});
    CHECK(M.c == cplx{0.0});
    CHECK(bma::pole(m, cplx{0.2, 0.1}).infinite);
}

TEST_CASE("power-map pole formula (1+az)/(a+z)") {
    std::mt19937_64 rng(2);
    for (double a : {0.5, 2.0}) {
        const auto m = cat::power(a);
        for (int i = 0; i < 1000; ++i) {
            const cplx z = random_disk_point(rng, 0.99);
            const auto p = bma::pole(m, z);
            REQUIRE(!p.infinite);
            const cplx want = (1.0 + a * z) / (a + z);
            // relative near z = -a, where the closed form blows up
            CHECK(std::abs(p.value - want) <= 1e-12 * std::max(1.0, std::abs(want)));
        }
    }
    CHECK(std::abs(bma::pole(cat::power(0.5), 0.0).value - 2.0) <= 1e-14);
}

TEST_CASE("convex_order extremal pole (1-az)/(1-a); half_plane pole is 1") {
    std::mt19937_64 rng(3);
    const double alpha = 0.35;
    const auto g = cat::convex_order(alpha);
    const auto hp = cat::half_plane(0.0);
    for (int i = 0; i < 300; ++i) {
        const cplx z = random_disk_point(rng, 0.97);
        CHECK(std::abs(bma::pole(g, z).value - (1.0 - alpha * z) / (1.0 - alpha)) <= 1e-12);
        CHECK(std::abs(bma::pole(hp, z).value - 1.0) <= 1e-12);
    }
}

TEST_CASE("A_f examples") {
    const cplx z{0.21, -0.4};
    CHECK(std::abs(bma::a_operator(cat::identity(), z) + std::conj(z)) <= 1e-15);
    CHECK(std::abs(bma::a_operator(cat::power(2.0), 0.5) - 2.0) <= 1e-13);
    std::mt19937_64 rng(4);
    const auto mb = cat::moebius(1.0);  // z/(1-z)
    for (int i = 0; i < 200; ++i)
        CHECK(std::abs(std::abs(bma::a_operator(mb, random_disk_point(rng, 0.99))) - 1.0) <=
              1e-12);
}

TEST_CASE("Lemma 2.3 identity") {
    CHECK(bma::lemma_pole_identity(cat::power(0.5), 0.3) <= 1e-12);
    CHECK(bma::lemma_pole_identity(cat::identity(), 0.0) <= 1e-15);  // reciprocal branch
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> fam(0, 6);
    double worst = 0.0;
    for (int k = 0; k < 30; ++k) {
        bma::ClassSpec spec = [&]() -> bma::ClassSpec {
            switch (fam(rng)) {
                case 0: return bma::ClassSpec::convex_order(0.3);
                case 1: return bma::ClassSpec::janowski(0.9, -0.5);
                case 2: return bma::ClassSpec::robertson(0.4);
                case 3: return bma::ClassSpec::starlike();
                case 4: return bma::ClassSpec::starlike_half();
                case 5: return bma::ClassSpec::noshiro();
                default: return bma::ClassSpec::ozaki(0.75);
            }
        }();
        const auto m = cat::random_class_member(spec, 1000 + k, 3);
        for (int i = 0; i < 100; ++i)
            worst = std::max(worst, bma::lemma_pole_identity(m, random_disk_point(rng, 0.99)));
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("classify_point") {
    // real power map on the real axis: 0, z, P collinear
    const auto m = cat::power(0.7);
    const auto c = bma::classify_point(m, 0.4);
    CHECK(c.collinear);
    CHECK(c.radial == bma::PointClassification::Radial::Outward);

    // convex members point outward everywhere
    const auto cm = cat::random_class_member(bma::ClassSpec::convex_order(0.25), 77, 3);
    std::mt19937_64 rng(6);
    for (int i = 0; i < 500; ++i) {
        const cplx z = random_disk_point(rng, 0.99);
        CHECK(bma::classify_point(cm, z).radial == bma::PointClassification::Radial::Outward);
    }

    // 1 + zq = 0 is the antipodal configuration: P_f = -z sits on the circle
    const auto anti = bma::AnalyticModel::pre_schwarzian_only(
        "anti", [](cplx z) { return bma::PreSchwarzian{-1.0 / z, 1.0 / (z * z)}; });
    const auto ac = bma::classify_point(anti, cplx{0.5, 0.0});
    CHECK(ac.radial == bma::PointClassification::Radial::OnCircle);
    CHECK(ac.antipodal);
    CHECK(ac.collinear);
}

TEST_CASE("Schwarzian examples") {
    std::mt19937_64 rng(7);
    const auto mb = cat::moebius(0.6);
    for (int i = 0; i < 100; ++i)
        CHECK(std::abs(bma::schwarzian(mb, random_disk_point(rng))) <= 1e-11);
    const cplx b{1.7, 0.0};
    CHECK(std::abs(bma::schwarzian(cat::exp_map(b), cplx{0.3, 0.2}) + 0.5 * b * b) <= 1e-12);
    CHECK(std::abs(bma::schwarzian(cat::koebe(0.0), 0.0) + 6.0) <= 1e-12);
}

TEST_CASE("Prop 2.1: affine invariance of the pole") {
    std::mt19937_64 rng(8);
    const auto m = cat::janowski(0.8, -0.3);
    const auto t = bma::affine_transform(m, cplx{2.0, 1.0}, cplx{-0.5, 3.0});
    for (int i = 0; i < 50; ++i) {
        const cplx z = random_disk_point(rng);
        CHECK(std::abs(bma::pole(m, z).value - bma::pole(t, z).value) <= 1e-12);
    }
}

TEST_CASE("Prop 2.1: automorphism conjugation, full and pre-Schwarzian paths") {
    std::mt19937_64 rng(9);
    const bma::AnalyticModel models[] = {
        cat::power(1.5), cat::koebe(0.2),
        cat::random_class_member(bma::ClassSpec::starlike(), 13, 2)};
    for (const auto& m : models) {
        for (int trial = 0; trial < 17; ++trial) {
            const cplx a = random_disk_point(rng, 0.7);
            const auto conj_m = bma::conjugate_by_automorphism(m, a);
            const cplx z = random_disk_point(rng, 0.8);
            const auto lhs = bma::pole(conj_m, z);
            const auto rhs = bma::sigma_apply(-a, bma::pole(m, bma::sigma_apply(a, z)));
            if (lhs.infinite || rhs.infinite) {
                CHECK(lhs.infinite == rhs.infinite);
            } else {
                CHECK(std::abs(lhs.value - rhs.value) <=
                      1e-10 * std::max(1.0, std::abs(rhs.value)));
            }
        }
    }
}

TEST_CASE("Prop 2.1: dilation identity") {
    std::mt19937_64 rng(10);
    const auto m = cat::power(0.5);
    for (double r : {0.3, 0.7, 0.95}) {
        const auto mr = bma::dilate(m, r);
        for (int i = 0; i < 50; ++i) {
            const cplx z = random_disk_point(rng, 0.99);
            const auto lhs = bma::pole(mr, z);
            const auto rhs = bma::pole(m, r * z);
            REQUIRE(!lhs.infinite);
            CHECK(std::abs(lhs.value - rhs.value / r) <= 1e-10 * std::max(1.0, std::abs(rhs.value) / r));
        }
    }
}

TEST_CASE("Remark 2.2: concavity is hereditary under dilation") {
    // f'(z) = e^{0.2z}/z^2 maps onto the complement of a convex set; its
    // q = -2/z + 0.2 yields P_f(z) = 0.2 z^2/(0.2 z - 2), so |P_f(z)| <= |z|
    // and every dilation keeps the poles in the closed unit disk.
    const auto m = bma::AnalyticModel::pre_schwarzian_only(
        "inverted", [](cplx z) { return bma::PreSchwarzian{-2.0 / z + 0.2, 2.0 / (z * z)}; });
    std::mt19937_64 rng(11);
    for (int i = 0; i < 10000; ++i) {
        const cplx z = random_disk_point(rng, 0.999);
        if (std::abs(z) < 1e-3) continue;
        CHECK(bma::pole(m, z).abs() <= std::abs(z) + 1e-12);
    }
    for (double r : {0.3, 0.7, 0.95}) {
        const auto mr = bma::dilate(m, r);
        double mx = 0.0;
        for (int i = 0; i < 10000; ++i) {
            const cplx z = random_disk_point(rng, 0.999);
            if (std::abs(z) < 1e-3) continue;
            mx = std::max(mx, bma::pole(mr, z).abs());
        }
        CHECK(mx <= 1.0 + 1e-9);
    }
}

TEST_CASE("Remark 2.4: |A_f| > 1 iff |P_f| < 1") {
    std::mt19937_64 rng(11);
    const bma::AnalyticModel models[] = {cat::power(0.5), cat::power(2.0), cat::koebe(0.0),
                                         cat::exp_map(3.0)};
    for (const auto& m : models) {
        for (int i = 0; i < 2000; ++i) {
            const cplx z = random_disk_point(rng, 0.99);
            const double av = std::abs(bma::a_operator(m, z));
            const double pv = bma::pole(m, z).abs();
            if (std::abs(av - 1.0) <= 1e-12 || std::abs(pv - 1.0) <= 1e-12) continue;
            CHECK((av > 1.0) == (pv < 1.0));
        }
    }
}
