#pragma once

#include <map>
#include <vector>

#include "germforge/group_action.hpp"
#include "germforge/poly_matrix.hpp"

namespace germforge {

// An invariant rewritten as a polynomial in the orbit-map values.
struct InvariantExpression {
    Polynomial polynomial;    // target variables plus any fixed variables
    long source_degree = -1;  // degree recovered on substituting back; -1 for 0
};

// X, Y in rank two; X1..Xn otherwise.
std::vector<std::string> target_variables(const ReflectionGroup& G);

// Engine for the exchange between source invariants and target polynomials:
// expresses invariants in the orbit-map components by a graded exact linear
// solve, caching expanded orbit-map powers across calls. Variables outside
// the group's source list (parameters, Z) ride along as fixed coefficients.
class CoinvariantDecomposer {
public:
    // reverse_candidates permutes the ansatz enumeration; solutions are
    // unique, so results must not depend on it (determinism cross-check).
    explicit CoinvariantDecomposer(ReflectionGroup G, bool reverse_candidates = false);

    // q must be G-invariant in the source variables.
    InvariantExpression rewrite(const Polynomial& q);

    // Coordinates of P along a homogeneous basis: P = sum_j coord_j(w) * basis_j.
    std::vector<InvariantExpression> decompose(const Polynomial& P,
                                               const std::vector<Polynomial>& basis);

    const ReflectionGroup& group() const { return group_; }

private:
    Polynomial orbit_power(const std::vector<int>& exponents);
    const std::vector<std::vector<int>>& graded_exponents(long degree);

    ReflectionGroup group_;
    bool reverse_candidates_;
    std::map<std::vector<int>, Polynomial> power_cache_;
    std::map<long, std::vector<std::vector<int>>> exponent_cache_;
};

InvariantExpression rewrite_invariant(const Polynomial& q, const ReflectionGroup& G);

// Module coordinates of h along the germ's coinvariant basis.
std::vector<InvariantExpression> coinvariant_decompose(const Polynomial& h,
                                                       const ReflectedGraphGerm& germ);

// The multiplication-by-h matrix: basis_i * h = sum_j alpha(i, j)(w) * basis_j.
PolyMatrix alpha_matrix(const ReflectedGraphGerm& germ);

} // namespace germforge
