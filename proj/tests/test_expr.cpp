#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bma/catalog.hpp"
#include "bma/expr.hpp"

using bma::cplx;
using bma::Jet3;

TEST_CASE("eval_jet of the bare variable") {
    const Jet3 j = bma::eval_jet(bma::parse("z"), 0.3);
    CHECK(std::abs(j.v - 0.3) <= 1e-15);
    CHECK(std::abs(j.d1 - 1.0) <= 1e-15);
    CHECK(std::abs(j.d2) <= 1e-15);
    CHECK(std::abs(j.d3) <= 1e-15);
}

TEST_CASE("Koebe formula z/(1-z)^2 at 0: (0,1,4,18), so ^ binds before /") {
    const Jet3 j = bma::eval_jet(bma::parse("z/(1-z)^2"), 0.0);
    CHECK(std::abs(j.v) <= 1e-15);
    CHECK(std::abs(j.d1 - 1.0) <= 1e-13);
    CHECK(std::abs(j.d2 - 4.0) <= 1e-13);
    CHECK(std::abs(j.d3 - 18.0) <= 1e-12);
}

TEST_CASE("((1+z)/(1-z))^2 at 0 has d1 = 4") {
    CHECK(std::abs(bma::eval_jet(bma::parse("((1+z)/(1-z))^2"), 0.0).d1 - 4.0) <= 1e-12);
}

TEST_CASE("complex literals") {
    CHECK(std::abs(bma::eval_jet(bma::parse("3+4*i"), 0.0).v - cplx{3.0, 4.0}) <= 1e-15);
    CHECK(std::abs(bma::eval_jet(bma::parse("i*z"), 0.5).v - cplx{0.0, 0.5}) <= 1e-15);
}

TEST_CASE("precedence and associativity") {
    // ^ right-associative: 2^3^2 = 512, not 64
    CHECK(std::abs(bma::eval_jet(bma::parse("2^3^2"), 0.0).v - 512.0) <= 1e-12);
    // unary minus binds looser than ^: -2^2 = -4
    CHECK(std::abs(bma::eval_jet(bma::parse("-2^2"), 0.0).v + 4.0) <= 1e-12);
    // * over +
    CHECK(std::abs(bma::eval_jet(bma::parse("1+2*3"), 0.0).v - 7.0) <= 1e-15);
}

TEST_CASE("round trip: parse(print(e)) is structurally equal") {
    const char* formulas[] = {
        "((1+z)/(1-z))^0.5", "z/(1-z)^2",  "exp(2*z)-1", "-z^3+tan(z)*i",
        "sqrt(1+z^4)",       "log(1-z)/z", "1+2.5e-1*z", "i",
    };
    for (const char* f : formulas) {
        const auto e = bma::parse(f);
        const std::string printed = bma::print(e);
        INFO(f << " -> " << printed);
        CHECK(bma::expr_equal(bma::parse(printed), e));
    }
}

TEST_CASE("syntax errors carry byte offsets") {
    try {
        bma::parse("1+");
        FAIL("expected SyntaxError");
    } catch (const bma::SyntaxError& e) {
        CHECK(e.offset == 2);
    }
    CHECK_THROWS_AS(bma::parse("2z"), bma::SyntaxError);  // no implicit multiplication
    CHECK_THROWS_AS(bma::parse(""), bma::SyntaxError);
    CHECK_THROWS_AS(bma::parse("(1+z"), bma::SyntaxError);
    CHECK_THROWS_AS(bma::parse("foo(z)"), bma::UnknownFunction);
}

TEST_CASE("fuzz: parser never crashes on random byte strings") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> len(0, 24);
    std::uniform_int_distribution<int> byte(32, 126);
    const std::string alphabet = "ziexplogsqrtan+-*/^(). 0123456789";
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    for (int trial = 0; trial < 2000; ++trial) {
        std::string s;
        const int n = len(rng);
        for (int i = 0; i < n; ++i)
            s += trial % 2 ? alphabet[pick(rng)] : static_cast<char>(byte(rng));
        try {
            bma::parse(s);
        } catch (const bma::SyntaxError&) {
        } catch (const bma::UnknownFunction&) {
        }
    }
}

TEST_CASE("DSL spellings match native catalog jets at 100 random points") {
    struct Pair {
        bma::AnalyticModel native;
        const char* formula;
    };
    const Pair pairs[] = {
        {bma::catalog::power(0.5), "((1+z)/(1-z))^0.5"},
        {bma::catalog::power(2.0), "((1+z)/(1-z))^2"},
        {bma::catalog::koebe(0.0), "z/(1-z)^2"},
        {bma::catalog::half_plane(0.0), "z/(1-z)"},
        {bma::catalog::exp_map(1.5), "exp(1.5*z)"},
        {bma::catalog::noshiro_extremal(0.0), "-2*log(1-z)-z"},
    };
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (const auto& p : pairs) {
        const auto model = bma::formula_model(p.formula);
        for (int i = 0; i < 100; ++i) {
            const cplx z = std::polar(0.9 * uni(rng), 6.283185307179586 * uni(rng));
            const Jet3 a = model.jet_at(z);
            const Jet3 b = p.native.jet_at(z);
            INFO(p.formula);
            const double scale = std::max(1.0, std::abs(b.d3));
            CHECK(std::abs(a.v - b.v) <= 1e-12);
            CHECK(std::abs(a.d1 - b.d1) <= 1e-12);
            CHECK(std::abs(a.d2 - b.d2) <= 1e-12 * scale);
            CHECK(std::abs(a.d3 - b.d3) <= 1e-12 * scale);
        }
    }
}
