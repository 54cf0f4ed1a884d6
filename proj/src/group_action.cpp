#include "germforge/group_action.hpp"

#include "germforge/cyclo_linalg.hpp"
#include "germforge/errors.hpp"

#include <algorithm>

namespace germforge {

Polynomial act(const ReflectionGroup& G, const GroupElement& g, const Polynomial& P) {
    return apply_linear_substitution(g.inverse, P, G.source_variables());
}

Polynomial act(const ReflectionGroup& G, int element_index, const Polynomial& P) {
    return act(G, G.element(element_index), P);
}

std::vector<Polynomial> orbit_functions(const ReflectionGroup& G, const Polynomial& h) {
    std::vector<Polynomial> orbit;
    orbit.reserve(G.order());
    for (const auto& g : G.elements()) orbit.push_back(act(G, g, h));
    return orbit;
}

Polynomial reynolds(const ReflectionGroup& G, const Polynomial& P) {
    Polynomial sum = Polynomial::zero(P.variables());
    for (const auto& g : G.elements()) sum += act(G, g, P);
    return sum * CyclotomicNumber(mpq_class(1, G.order()));
}

Polynomial demazure(const ReflectionGroup& G, const GroupElement& g, const Hyperplane& H,
                    const Polynomial& P) {
    return (P - act(G, g, P)).exact_divide(H.form);
}

Polynomial demazure(const ReflectionGroup& G, int reflection_index, const Polynomial& P) {
    return demazure(G, G.element(reflection_index), G.hyperplane_of(reflection_index), P);
}

bool is_invariant(const ReflectionGroup& G, const Polynomial& P) {
    for (const auto& g : G.elements())
        if (act(G, g, P) != P) return false;
    return true;
}

PolyMatrix orbit_jacobian(const ReflectionGroup& G) {
    int p = G.dimension();
    PolyMatrix jac(p, p, G.source_variables());
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            jac.set(i, j, G.orbit_map()[i].derivative(G.source_variables()[j]));
    return jac;
}

JacobianFactorization jacobian_factorization_check(const ReflectionGroup& G) {
    JacobianFactorization result;
    result.determinant = orbit_jacobian(G).determinant();
    Polynomial prod = Polynomial::constant(G.source_variables(), CyclotomicNumber(1));
    for (const auto& h : G.hyperplanes()) prod *= h.form.pow(h.stabilizer_order - 1);
    Polynomial residual = result.determinant.exact_divide(prod);
    if (!residual.is_constant())
        throw math_error("jacobian determinant over the hyperplane product is not constant");
    result.constant = residual.constant_term();
    result.ok = !result.constant.is_zero();
    return result;
}

PolyMatrix eigen_matrix_of_basis(const ReflectionGroup& G,
                                 const std::vector<Polynomial>& basis) {
    int d = G.order();
    if ((int)basis.size() != d)
        throw math_error("coinvariant basis size must equal the group order");
    PolyMatrix E(d, d, G.source_variables());
    for (int i = 0; i < d; ++i) {
        Polynomial r = basis[i].with_variables(G.source_variables());
        for (int j = 0; j < d; ++j) E.set(i, j, act(G, G.element(j + 1), r));
    }
    return E;
}

namespace {

std::vector<long> first_primes(int n) {
    std::vector<long> primes;
    for (long c = 2; (int)primes.size() < n; ++c) {
        bool prime = true;
        for (long p : primes)
            if (c % p == 0) { prime = false; break; }
        if (prime) primes.push_back(c);
    }
    return primes;
}

// det E is nonzero iff it is nonzero at any point off the reflecting
// hyperplanes (Gutkin via the determinant factorization); evaluation keeps
// the common case cheap, the symbolic determinant settles the rest.
bool eigen_matrix_nonsingular(const ReflectionGroup& G, const PolyMatrix& E) {
    int p = G.dimension(), d = E.rows();
    std::vector<long> primes = first_primes(p);
    for (long shift = 0; shift < 10; ++shift) {
        std::vector<CyclotomicNumber> point;
        for (int j = 0; j < p; ++j) point.push_back(CyclotomicNumber(primes[j] + shift));
        bool off_hyperplanes = true;
        for (const auto& h : G.hyperplanes())
            if (h.form.evaluate(point).is_zero()) { off_hyperplanes = false; break; }
        if (!off_hyperplanes) continue;
        CycloMatrix values(d, std::vector<CyclotomicNumber>(d));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) values[i][j] = E.at(i, j).evaluate(point);
        if (!matrix_determinant(values).is_zero()) return true;
        break;
    }
    return !E.determinant().is_zero();
}

} // namespace

ReflectedGraphGerm ReflectedGraphGerm::create(ReflectionGroup group, Polynomial h,
                                              std::vector<Polynomial> basis,
                                              std::vector<std::string> parameters) {
    const auto& source = group.source_variables();
    for (const auto& name : parameters)
        if (std::find(source.begin(), source.end(), name) != source.end())
            throw math_error("parameter name '" + name + "' collides with a source variable");
    for (const auto& v : h.variables()) {
        if (h.degree_in(v) == 0) continue;
        bool known = std::find(source.begin(), source.end(), v) != source.end() ||
                     std::find(parameters.begin(), parameters.end(), v) != parameters.end();
        if (!known)
            throw math_error("h uses the undeclared variable '" + v + "'");
    }
    for (const auto& [m, c] : h.terms()) {
        long source_degree = 0;
        for (size_t i = 0; i < h.variables().size(); ++i)
            if (std::find(source.begin(), source.end(), h.variables()[i]) != source.end())
                source_degree += m.exponents[i];
        if (source_degree == 0)
            throw math_error("h must vanish at the origin");
    }
    if (basis.empty()) basis = group.default_basis();
    if (basis.empty())
        throw math_error("a coinvariant basis is required for this group");
    if ((int)basis.size() != group.order())
        throw math_error("coinvariant basis size must equal the group order");
    Polynomial one = Polynomial::constant(source, CyclotomicNumber(1));
    if (basis[0] != one)
        throw math_error("the first coinvariant basis element must be 1");
    PolyMatrix E = eigen_matrix_of_basis(group, basis);
    if (!eigen_matrix_nonsingular(group, E))
        throw math_error("the coinvariant basis gives a singular eigen-matrix");
    return ReflectedGraphGerm{std::move(group), std::move(h), std::move(basis),
                              std::move(parameters)};
}

} // namespace germforge
