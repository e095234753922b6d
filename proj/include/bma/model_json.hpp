#pragma once

#include <string>

#include <json.hpp>

#include "bma/bounds.hpp"
#include "bma/catalog.hpp"
#include "bma/errors.hpp"
#include "bma/expr.hpp"
#include "bma/model.hpp"
#include "bma/polygon.hpp"

namespace bma {

using json = nlohmann::ordered_json;

/// Catalog dispatch by name, parameters from a JSON object.
/// Names: power(a), convex_order(alpha), janowski(A,B), robertson(alpha),
/// koebe(theta), half_plane(theta), noshiro_extremal(theta), exp_map(b),
/// cross, identity, moebius(a).
inline AnalyticModel catalog_from_json(const std::string& name, const json& params) {
    auto d = [&](const char* key, double fallback = 0.0) {
        return params.contains(key) ? params.at(key).get<double>() : fallback;
    };
    if (name == "power") return catalog::power(d("a", 0.5));
    if (name == "convex_order") return catalog::convex_order(d("alpha"));
    if (name == "janowski") return catalog::janowski(d("A", 1.0), d("B", -1.0));
    if (name == "robertson") return catalog::robertson(d("alpha"));
    if (name == "koebe") return catalog::koebe(d("theta"));
    if (name == "half_plane") return catalog::half_plane(d("theta"));
    if (name == "noshiro_extremal") return catalog::noshiro_extremal(d("theta"));
    if (name == "exp_map") return catalog::exp_map(cplx{d("b", 1.0), 0.0});
    if (name == "cross") return catalog::cross();
    if (name == "identity") return catalog::identity();
    if (name == "moebius") return catalog::moebius(cplx{d("a", 1.0), 0.0});
    throw Error("unknown catalog model: " + name);
}

inline ClassSpec class_spec_from_json(const json& spec) {
    const std::string cls = spec.at("class").get<std::string>();
    auto d = [&](const char* key, double fallback) {
        return spec.contains(key) ? spec.at(key).get<double>() : fallback;
    };
    if (cls == "convex_order") return ClassSpec::convex_order(d("alpha", 0.0));
    if (cls == "janowski") return ClassSpec::janowski(d("A", 1.0), d("B", -1.0));
    if (cls == "robertson") return ClassSpec::robertson(d("alpha", 0.0));
    if (cls == "starlike") return ClassSpec::starlike();
    if (cls == "starlike_half") return ClassSpec::starlike_half();
    if (cls == "ozaki") return ClassSpec::ozaki(d("lambda", 0.75));
    if (cls == "umezawa") return ClassSpec::umezawa(d("alpha", 2.0));
    if (cls == "noshiro") return ClassSpec::noshiro();
    if (cls == "nehari") return ClassSpec::nehari(d("t", 1.0));
    if (cls == "schlicht") return ClassSpec::schlicht();
    throw Error("unknown class: " + cls);
}

/// Model spec: {"kind":"catalog","name":...,"params":{...}}
///           | {"kind":"expr","formula":"..."}
///           | {"kind":"class","class":...,"seed":...,"degree":...}
inline AnalyticModel model_from_json(const json& spec) {
    const std::string kind = spec.at("kind").get<std::string>();
    if (kind == "catalog")
        return catalog_from_json(spec.at("name").get<std::string>(),
                                 spec.contains("params") ? spec.at("params") : json::object());
    if (kind == "expr") return formula_model(spec.at("formula").get<std::string>());
    if (kind == "class") {
        const ClassSpec cs = class_spec_from_json(spec);
        const auto seed = spec.contains("seed") ? spec.at("seed").get<std::uint64_t>() : 42u;
        const int degree = spec.contains("degree") ? spec.at("degree").get<int>() : 2;
        return catalog::random_class_member(cs, seed, degree);
    }
    throw Error("unknown model kind: " + kind);
}

inline cplx cplx_from_json(const json& v) {
    return {v.at(0).get<double>(), v.at(1).get<double>()};
}

inline BlaschkeProduct blaschke_from_json(const json& spec) {
    std::vector<cplx> zeros;
    if (spec.contains("zeros"))
        for (const auto& z : spec.at("zeros")) zeros.push_back(cplx_from_json(z));
    const cplx u = spec.contains("unimodular") ? cplx_from_json(spec.at("unimodular")) : cplx{1.0};
    return {zeros, u};
}

/// {"variant":"interior","Bk":{"zeros":[[re,im],...],"unimodular":[re,im]},"Bm":{...}}
inline PolygonModel polygon_from_json(const json& spec) {
    const std::string variant = spec.at("variant").get<std::string>();
    if (variant != "interior" && variant != "exterior")
        throw Error("polygon variant must be interior or exterior");
    return {variant == "interior" ? PolygonModel::Variant::Interior
                                  : PolygonModel::Variant::Exterior,
            blaschke_from_json(spec.at("Bk")), blaschke_from_json(spec.at("Bm"))};
}

inline json report_to_json(const BoundReport& rep) {
    json j;
    j["bound"] = rep.bound;
    j["model"] = rep.model;
    j["samples"] = rep.samples;
    j["min_margin"] = rep.min_margin;
    j["witness"] = {rep.witness.real(), rep.witness.imag()};
    j["verdict"] = rep.holds ? "holds" : "violated";
    if (rep.sharpness_gap) j["sharpness_gap"] = *rep.sharpness_gap;
    return j;
}

}  // namespace bma
