#include "germforge/presentation.hpp"

#include "germforge/errors.hpp"

namespace germforge {

namespace {
std::vector<std::string> source_ambient(const ReflectedGraphGerm& germ) {
    std::vector<std::string> with_z = germ.group.source_variables();
    with_z.push_back("Z");
    return unify_variables(with_z, germ.h.variables());
}
}

EigenPair eigen_matrix(const ReflectedGraphGerm& germ) {
    const ReflectionGroup& G = germ.group;
    int d = G.order();
    std::vector<std::string> ambient = source_ambient(germ);

    PolyMatrix base = eigen_matrix_of_basis(G, germ.basis);
    PolyMatrix E(d, d, ambient);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) E.set(i, j, base.at(i, j));

    Polynomial Z = Polynomial::variable(ambient, "Z");
    PolyMatrix A_Z(d, d, ambient);
    for (int k = 0; k < d; ++k) A_Z.set(k, k, act(G, k + 1, germ.h) - Z);
    return {std::move(E), std::move(A_Z)};
}

EigenDeterminantCheck eigen_determinant_check(const ReflectedGraphGerm& germ) {
    const ReflectionGroup& G = germ.group;
    Polynomial det = eigen_matrix_of_basis(G, germ.basis).determinant();
    Polynomial divisor =
        Polynomial::constant(G.source_variables(), CyclotomicNumber(1));
    for (const auto& hp : G.hyperplanes())
        divisor *= hp.form.pow((long)G.order() * (hp.stabilizer_order - 1) / 2);
    Polynomial residual = det.exact_divide(divisor);
    EigenDeterminantCheck check;
    check.determinant = det;
    check.ok = residual.is_constant() && !residual.is_zero();
    if (residual.is_constant()) check.constant = residual.constant_term();
    return check;
}

PresentationResult presentation_matrix(const ReflectedGraphGerm& germ) {
    const ReflectionGroup& G = germ.group;
    int d = G.order();
    EigenPair pair = eigen_matrix(germ);
    Polynomial det = pair.E.determinant();
    PolyMatrix raw = pair.E * pair.A_Z * pair.E.adjugate();

    std::vector<std::string> lvars = target_variables(G);
    lvars.push_back("Z");
    for (const auto& name : germ.parameters) lvars.push_back(name);
    PolyMatrix lambda(d, d, lvars);

    CoinvariantDecomposer dec(G);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Polynomial entry = raw.at(i, j).exact_divide(det);
            if (!is_invariant(G, entry))
                throw math_error("presentation entry (" + std::to_string(i + 1) + ", " +
                                 std::to_string(j + 1) +
                                 ") is not invariant; the basis is inconsistent");
            lambda.set(i, j, dec.rewrite(entry).polynomial);
        }

    EigenDeterminantCheck check = eigen_determinant_check(germ);
    return {std::move(lambda), std::move(check.determinant), check.constant};
}

PolyMatrix presentation_via_alpha(const ReflectedGraphGerm& germ) {
    const ReflectionGroup& G = germ.group;
    int d = G.order();
    PolyMatrix alpha = alpha_matrix(germ);
    std::vector<std::string> lvars = target_variables(G);
    lvars.push_back("Z");
    for (const auto& name : germ.parameters) lvars.push_back(name);
    PolyMatrix lambda(d, d, lvars);
    Polynomial Z = Polynomial::variable(lvars, "Z");
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Polynomial entry = alpha.at(i, j).with_variables(lvars);
            if (i == j) entry -= Z;
            lambda.set(i, j, entry);
        }
    return lambda;
}

bool verify_det_equals_image(const PresentationResult& pres, const ImageEquation& eq) {
    int d = pres.lambda.rows();
    CyclotomicNumber sign(d % 2 == 0 ? 1 : -1);
    return pres.lambda.determinant() == eq.F * sign;
}

} // namespace germforge
