#pragma once

#include "germforge/poly_matrix.hpp"
#include "germforge/reflection_group.hpp"

namespace germforge {

// (g . P)(v) = P(g^-1 v); variables outside the group's source list are
// fixed by the action.
Polynomial act(const ReflectionGroup& G, const GroupElement& g, const Polynomial& P);
Polynomial act(const ReflectionGroup& G, int element_index, const Polynomial& P);

// h_1 ... h_d with h_i = g_i . h, indexed like the element list.
std::vector<Polynomial> orbit_functions(const ReflectionGroup& G, const Polynomial& h);

// Av(P) = (1/|G|) sum of g . P; projects onto the invariant algebra.
Polynomial reynolds(const ReflectionGroup& G, const Polynomial& P);

// Divided difference (P - g . P) / L_H; exact by construction when (g, H)
// belong together.
Polynomial demazure(const ReflectionGroup& G, const GroupElement& g, const Hyperplane& H,
                    const Polynomial& P);
Polynomial demazure(const ReflectionGroup& G, int reflection_index, const Polynomial& P);

bool is_invariant(const ReflectionGroup& G, const Polynomial& P);

// The Jacobian matrix of the orbit map, rows indexed by components.
PolyMatrix orbit_jacobian(const ReflectionGroup& G);

struct JacobianFactorization {
    Polynomial determinant;
    CyclotomicNumber constant;  // residual after dividing by prod L^(e-1)
    bool ok = false;            // residual is a nonzero constant
};

// det(jac w) = c * prod over hyperplanes of L^(e-1); throws when the
// residual fails to be constant (wrong hyperplane data).
JacobianFactorization jacobian_factorization_check(const ReflectionGroup& G);

// E with entry (i, j) = g_j . r_i, over the source variables.
PolyMatrix eigen_matrix_of_basis(const ReflectionGroup& G,
                                 const std::vector<Polynomial>& basis);

} // namespace germforge
