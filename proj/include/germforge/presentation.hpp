#pragma once

#include "germforge/image_equation.hpp"

namespace germforge {

struct EigenPair {
    PolyMatrix E;    // entry (i, j) = g_j . r_i
    PolyMatrix A_Z;  // diagonal, entry (k, k) = g_k . h - Z
};

struct EigenDeterminantCheck {
    Polynomial determinant;     // det(E) over the source variables
    CyclotomicNumber constant;  // residual c of det(E) = c prod L^(|G|(e-1)/2)
    bool ok = false;            // residual is a nonzero constant
};

struct PresentationResult {
    PolyMatrix lambda;  // d x d over the target variables, Z, and parameters
    Polynomial eigen_matrix_det;
    CyclotomicNumber det_formula_constant;
};

EigenPair eigen_matrix(const ReflectedGraphGerm& germ);

EigenDeterminantCheck eigen_determinant_check(const ReflectedGraphGerm& germ);

// E . A_Z . Adj(E), every entry divided exactly by det(E), checked for
// invariance, and rewritten to the target variables.
PresentationResult presentation_matrix(const ReflectedGraphGerm& germ);

// The same matrix built from the multiplication matrix of h by subtracting
// Z on the diagonal; equal to presentation_matrix by uniqueness.
PolyMatrix presentation_via_alpha(const ReflectedGraphGerm& germ);

// det(lambda) = (-1)^d F, the sign reconciling the -Z diagonal with the
// monic-in-Z normalization of F.
bool verify_det_equals_image(const PresentationResult& pres, const ImageEquation& eq);

} // namespace germforge
