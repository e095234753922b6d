#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "bma/errors.hpp"
#include "bma/jet.hpp"
#include "bma/polynomial.hpp"

namespace bma {

/// Finite Blaschke product: unimodular constant times factors
/// (z - z_j)/(1 - conj(z_j) z) with |z_j| < 1. Modulus 1 on |z| = 1,
/// strictly below 1 inside.
struct BlaschkeProduct {
    std::vector<cplx> zeros;
    cplx unimodular{1.0};

    BlaschkeProduct() = default;
    BlaschkeProduct(std::vector<cplx> zs, cplx u) : zeros(std::move(zs)), unimodular(u) {
        if (std::abs(std::abs(unimodular) - 1.0) > 1e-12)
            throw Error("BlaschkeProduct: constant must be unimodular");
        for (cplx z : zeros)
            if (!(std::abs(z) < 1.0)) throw Error("BlaschkeProduct: zeros must lie in the open disk");
    }

    int degree() const { return static_cast<int>(zeros.size()); }

    cplx eval(cplx z) const {
        cplx acc = unimodular;
        for (cplx zj : zeros) acc *= (z - zj) / (1.0 - std::conj(zj) * z);
        return acc;
    }

    Jet3 jet_at(cplx z) const {
        Jet3 acc = Jet3::constant(unimodular);
        const Jet3 zj = Jet3::variable(z);
        for (cplx w : zeros) acc = acc * ((zj - w) / (1.0 - std::conj(w) * zj));
        return acc;
    }

    /// Expand into a single numerator/denominator pair.
    RationalMap as_rational() const {
        Poly num{unimodular};
        Poly den{cplx{1.0}};
        for (cplx w : zeros) {
            num = poly_mul(num, Poly{-w, 1.0});
            den = poly_mul(den, Poly{1.0, -std::conj(w)});
        }
        return {num, den};
    }
};

}  // namespace bma
