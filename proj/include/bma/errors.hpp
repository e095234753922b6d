#pragma once

#include <stdexcept>
#include <string>

namespace bma {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Division by a jet whose value slot is zero.
struct DegenerateJet : Error {
    DegenerateJet() : Error("division by a jet with zero value") {}
};

/// log/pow/sqrt evaluated on the principal branch cut (-inf, 0].
struct BranchCut : Error {
    BranchCut() : Error("argument lies on the principal branch cut (-inf, 0]") {}
};

struct SyntaxError : Error {
    std::size_t offset;
    std::string expected;
    SyntaxError(std::size_t off, std::string exp)
        : Error("syntax error at offset " + std::to_string(off) + ", expected " + exp),
          offset(off), expected(std::move(exp)) {}
};

struct UnknownFunction : Error {
    std::size_t offset;
    explicit UnknownFunction(const std::string& name, std::size_t off)
        : Error("unknown function '" + name + "' at offset " + std::to_string(off)),
          offset(off) {}
};

struct NotLocallyUnivalent : Error {
    NotLocallyUnivalent() : Error("f'(zeta) = 0: model not locally univalent at this point") {}
};

struct HypothesisMismatch : Error {
    explicit HypothesisMismatch(const std::string& what)
        : Error("class hypothesis mismatch: " + what) {}
};

struct InvalidPolygonModel : Error {
    explicit InvalidPolygonModel(const std::string& what)
        : Error("invalid polygon model: " + what) {}
};

struct NonIntegerWinding : Error {
    double value;
    explicit NonIntegerWinding(double v)
        : Error("winding quadrature " + std::to_string(v) + " is not within 0.05 of an integer"),
          value(v) {}
};

struct AmbiguousRoot : Error {
    AmbiguousRoot() : Error("polynomial root within 1e-8 of the unit circle") {}
};

}  // namespace bma
