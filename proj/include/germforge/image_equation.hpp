#pragma once

#include "germforge/invariant_rewrite.hpp"

namespace germforge {

struct ImageEquation {
    // monic in Z of degree |G|, over the target variables, Z, and parameters
    Polynomial F;
    // Q_0 .. Q_{d-1}; F = Z^d - Q_{d-1} Z^{d-1} + Q_{d-2} Z^{d-2} - ...
    std::vector<InvariantExpression> coefficients;
};

// q_0 .. q_{d-1} with q_{d-k} the degree-k elementary symmetric function of
// the orbit h_1 .. h_d, read off the incremental expansion of prod(Z - h_k).
std::vector<Polynomial> elementary_symmetric_orbit(const ReflectionGroup& G,
                                                   const Polynomial& h);

ImageEquation image_equation(const ReflectedGraphGerm& germ);

// Substitutes X_i -> w_i in F and compares exactly with the expanded orbit
// product; false is the diagnostic, not an error.
bool verify_pullback_factorization(const ImageEquation& eq, const ReflectedGraphGerm& germ);

} // namespace germforge
