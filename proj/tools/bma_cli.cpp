// Command-line surface: pole loci, convex/concave classification, Pommerenke
// order estimation, bound verification, polygon pole counting, and Schwarzian
// convexity certificates. CSV for loci, JSON for verdict reports.
// Exit codes: 0 pass, 1 theorem violation found, 2 usage/model error.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "bma/bounds.hpp"
#include "bma/catalog.hpp"
#include "bma/engine.hpp"
#include "bma/model_json.hpp"
#include "bma/orders.hpp"
#include "bma/polygon.hpp"
#include "bma/schwarzian.hpp"

namespace {

using bma::cplx;
using bma::json;

struct CommonOpts {
    std::string model_spec;
    std::string formula;
    std::size_t samples = 10000;
    std::uint64_t seed = 42;
    double radius_cap = 1.0 - 1e-6;
    std::string out;
    std::string format = "json";
    bool assume_class = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_sampler = true) {
    cmd->add_option("--model", o.model_spec, "model spec as inline JSON or a path to a JSON file");
    cmd->add_option("--formula", o.formula, "analytic formula in the expression DSL");
    if (with_sampler) {
        cmd->add_option("--samples", o.samples, "number of disk samples");
        cmd->add_option("--seed", o.seed, "sampler seed");
        cmd->add_option("--radius-cap", o.radius_cap, "sampling radius cap in (0,1)")
            ->check(CLI::Range(1e-6, 1.0 - 1e-12));
    }
    cmd->add_option("--out", o.out, "output path (default stdout)");
    cmd->add_option("--format", o.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_flag("--assume-class", o.assume_class,
                  "skip the class-hypothesis check for untagged models");
}

bma::AnalyticModel load_model(const CommonOpts& o) {
    if (!o.formula.empty() && !o.model_spec.empty())
        throw bma::Error("give exactly one of --model and --formula");
    if (!o.formula.empty()) return bma::formula_model(o.formula);
    if (o.model_spec.empty()) throw bma::Error("a model is required (--model or --formula)");
    std::string text = o.model_spec;
    if (!text.empty() && text.front() != '{') {
        std::ifstream in(text);
        if (!in) throw bma::Error("cannot open model file " + text);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    return bma::model_from_json(json::parse(text));
}

void emit(const CommonOpts& o, const std::string& payload) {
    if (o.out.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream out(o.out);
        if (!out) throw bma::Error("cannot open output file " + o.out);
        out << payload;
    }
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

int cmd_pole_locus(const CommonOpts& o, int n_r, int n_theta) {
    const auto model = load_model(o);
    std::ostringstream csv;
    csv << "z_re,z_im,p_re,p_im,abs_p,re_1_plus_zq,class\n";
    for (int i = -1; i < n_r; ++i) {
        const double r = i < 0 ? 0.0 : o.radius_cap * (i + 1) / n_r;
        for (int j = 0; j < (i < 0 ? 1 : n_theta); ++j) {
            const cplx z = std::polar(r, 2.0 * std::numbers::pi * j / n_theta);
            const auto p = bma::pole(model, z);
            const auto cls = bma::classify_point(model, z);
            const char* radial = cls.radial == bma::PointClassification::Radial::Outward
                                     ? "outward"
                                 : cls.radial == bma::PointClassification::Radial::Inward
                                     ? "inward"
                                     : "on-circle";
            csv << fmt(z.real()) << ',' << fmt(z.imag()) << ',';
            if (p.infinite)
                csv << "inf,inf,inf,";
            else
                csv << fmt(p.value.real()) << ',' << fmt(p.value.imag()) << ',' << fmt(p.abs())
                    << ',';
            csv << fmt(cls.re_value) << ',' << radial << '\n';
        }
    }
    emit(o, csv.str());
    return 0;
}

int cmd_classify(const CommonOpts& o) {
    const auto model = load_model(o);
    bma::DiskSampler gen(o.seed, o.radius_cap);
    double min_p = bma::kInf, max_p = 0.0;
    cplx min_w{}, max_w{};
    for (std::size_t i = 0; i < o.samples; ++i) {
        const cplx z = gen(i);
        const double a = bma::pole(model, z).abs();
        if (a < min_p) min_p = a, min_w = z;
        if (a > max_p) max_p = a, max_w = z;
    }
    const char* verdict = min_p >= 1.0 - 1e-9   ? "convex-consistent"
                          : max_p <= 1.0 + 1e-9 ? "concave-consistent"
                                                : "neither";
    json j;
    j["model"] = model.label();
    j["samples"] = o.samples;
    j["min_abs_pole"] = min_p;
    j["min_witness"] = {min_w.real(), min_w.imag()};
    j["max_abs_pole"] = max_p;
    j["max_witness"] = {max_w.real(), max_w.imag()};
    j["verdict"] = verdict;
    j["note"] = "sampling evidence, not proof";
    emit(o, j.dump(2));
    return 0;
}

int cmd_orders(const CommonOpts& o) {
    const auto model = load_model(o);
    const auto up = bma::upper_order(model);
    const auto lo = bma::lower_order(model);
    json j;
    j["model"] = model.label();
    j["upper"] = up.value;
    j["upper_witness"] = {up.witness.real(), up.witness.imag()};
    j["lower"] = lo.value;
    j["lower_witness"] = {lo.witness.real(), lo.witness.imag()};
    j["radius_cap"] = up.radius_cap;
    j["samples"] = up.samples;
    emit(o, j.dump(2));
    return 0;
}

bma::BoundSpec make_bound(const std::string& name, double alpha, double A, double B, double mu) {
    if (name == "lower_order") return bma::bound_lower_order(mu);
    if (name == "exclusion_disk") return bma::bound_exclusion_disk(alpha);
    if (name == "inclusion_disk") return bma::bound_inclusion_disk(mu);
    if (name == "pseudo_hyperbolic") return bma::bound_pseudo_hyperbolic(alpha);
    if (name == "convex_alpha") return bma::bound_convex_alpha(alpha);
    if (name == "modulus_alpha") return bma::bound_modulus_alpha(alpha);
    if (name == "janowski") return bma::bound_janowski(A, B);
    if (name == "robertson") return bma::bound_robertson(alpha);
    if (name == "starlike") return bma::bound_starlike();
    if (name == "starlike_half") return bma::bound_starlike_half();
    if (name == "noshiro") return bma::bound_noshiro();
    throw bma::Error("unknown bound: " + name);
}

int cmd_verify_bound(const CommonOpts& o, const std::string& bound_name, double alpha, double A,
                     double B, double mu) {
    const auto model = load_model(o);
    const auto bound = make_bound(bound_name, alpha, A, B, mu);
    const auto rep = bma::verify(model, bound, {o.samples, o.seed, o.radius_cap}, o.assume_class);
    emit(o, bma::report_to_json(rep).dump(2));
    return rep.holds ? 0 : 1;
}

int cmd_count_poles(const CommonOpts& o, const std::string& polygon_spec, bool use_cross,
                    double c_re, double c_im) {
    bma::RationalMap P;
    std::string label;
    if (use_cross) {
        P = {{1, 0, 0, 0, 1, 0, 0, 0, 2}, {0, 0, 0, 1, 0, 0, 0, 3}};  // (1+z^4+2z^8)/(z^3+3z^7)
        label = "cross";
    } else if (!polygon_spec.empty()) {
        std::string text = polygon_spec;
        if (text.front() != '{') {
            std::ifstream in(text);
            if (!in) throw bma::Error("cannot open polygon file " + text);
            std::stringstream ss;
            ss << in.rdbuf();
            text = ss.str();
        }
        const auto pm = bma::polygon_from_json(json::parse(text));
        P = bma::pole_rational(pm);
        label = pm.variant == bma::PolygonModel::Variant::Interior ? "polygon_interior"
                                                                   : "polygon_exterior";
    } else {
        throw bma::Error("count-poles needs --polygon or --cross");
    }
    const auto c = bma::ExtendedPoint::finite({c_re, c_im});
    const int winding = bma::count_preimages_winding(P, c);
    const int roots = bma::count_preimages_roots(P, c);
    json j;
    j["model"] = label;
    j["c"] = {c_re, c_im};
    j["count"] = winding;
    j["count_roots"] = roots;
    j["method_agreement"] = winding == roots;
    emit(o, j.dump(2));
    return winding == roots ? 0 : 1;
}

int cmd_schwarzian(const CommonOpts& o, const std::string& profile_name, int n, double t) {
    const auto model = load_model(o);
    bma::SchwarzianProfile profile = bma::SchwarzianProfile::constant();
    if (profile_name == "constant") profile = bma::SchwarzianProfile::constant();
    else if (profile_name == "power") profile = bma::SchwarzianProfile::power(n);
    else if (profile_name == "power_simple") profile = bma::SchwarzianProfile::power_simple(n);
    else if (profile_name == "nehari") profile = bma::SchwarzianProfile::nehari(t);
    else throw bma::Error("unknown profile: " + profile_name);
    const auto cert = bma::convexity_certificate(model, profile, o.samples, o.seed);
    json j;
    j["model"] = model.label();
    j["profile"] = profile_name;
    j["critical_a"] = bma::critical_a();
    j["verdict"] = cert.certified ? "certified_convex" : "not_applicable";
    if (!cert.certified) j["reason"] = cert.reason;
    if (cert.witness) j["witness"] = {cert.witness->real(), cert.witness->imag()};
    if (cert.certified) j["min_abs_pole"] = cert.min_pole_modulus;
    emit(o, j.dump(2));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Best Moebius approximation pole toolkit"};
    app.require_subcommand(1);

    CommonOpts o;
    int n_r = 24, n_theta = 48;
    auto* locus = app.add_subcommand("pole-locus", "emit P_f over a polar grid as CSV");
    add_common(locus, o);
    locus->add_option("--radii", n_r, "number of radial grid lines");
    locus->add_option("--angles", n_theta, "number of angular grid lines");

    auto* classify = app.add_subcommand("classify", "sampling-based convex/concave verdict");
    add_common(classify, o);

    auto* orders = app.add_subcommand("orders", "estimate Pommerenke upper/lower orders");
    add_common(orders, o);

    std::string bound_name;
    double alpha = 0.0, A = 1.0, B = -1.0, mu = 1.0;
    auto* vb = app.add_subcommand("verify-bound", "verify one pole-localization bound");
    add_common(vb, o);
    vb->add_option("--bound", bound_name, "bound id")->required();
    vb->add_option("--alpha", alpha, "order parameter");
    vb->add_option("--A", A, "Janowski A");
    vb->add_option("--B", B, "Janowski B");
    vb->add_option("--mu", mu, "lower order");

    std::string polygon_spec;
    bool use_cross = false;
    double c_re = 2.0, c_im = 0.0;
    auto* cp = app.add_subcommand("count-poles", "argument-principle pole-preimage counting");
    add_common(cp, o, /*with_sampler=*/false);
    cp->add_option("--polygon", polygon_spec, "polygon spec as inline JSON or file");
    cp->add_flag("--cross", use_cross, "use the cross-domain rational pole map");
    cp->add_option("--c", c_re, "target point, real part");
    cp->add_option("--c-imag", c_im, "target point, imaginary part");

    std::string profile_name = "constant";
    int profile_n = 1;
    double profile_t = 1.0;
    auto* sw = app.add_subcommand("schwarzian", "Schwarzian-based convexity certificate");
    add_common(sw, o);
    sw->add_option("--profile", profile_name, "constant|power|power_simple|nehari");
    sw->add_option("--n", profile_n, "profile exponent");
    sw->add_option("--t", profile_t, "Nehari t");

    try {
        app.parse(argc, argv);
        if (locus->parsed()) return cmd_pole_locus(o, n_r, n_theta);
        if (classify->parsed()) return cmd_classify(o);
        if (orders->parsed()) return cmd_orders(o);
        if (vb->parsed()) return cmd_verify_bound(o, bound_name, alpha, A, B, mu);
        if (cp->parsed()) return cmd_count_poles(o, polygon_spec, use_cross, c_re, c_im);
        if (sw->parsed()) return cmd_schwarzian(o, profile_name, profile_n, profile_t);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
