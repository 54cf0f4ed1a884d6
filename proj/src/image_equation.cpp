#include "germforge/image_equation.hpp"

#include "germforge/errors.hpp"

namespace germforge {

namespace {
Polynomial orbit_product(const ReflectionGroup& G, const Polynomial& h) {
    std::vector<std::string> with_z = G.source_variables();
    with_z.push_back("Z");
    std::vector<std::string> ambient = unify_variables(with_z, h.variables());
    Polynomial Z = Polynomial::variable(ambient, "Z");
    Polynomial product = Polynomial::constant(ambient, CyclotomicNumber(1));
    for (const auto& g : G.elements()) product *= Z - act(G, g, h);
    return product;
}
}

std::vector<Polynomial> elementary_symmetric_orbit(const ReflectionGroup& G,
                                                   const Polynomial& h) {
    Polynomial product = orbit_product(G, h);
    std::vector<Polynomial> q;
    for (int j = 0; j < G.order(); ++j) {
        Polynomial c = product.coefficient_of("Z", j);
        if ((G.order() - j) % 2 != 0) c = -c;
        q.push_back(c);
    }
    return q;
}

ImageEquation image_equation(const ReflectedGraphGerm& germ) {
    const ReflectionGroup& G = germ.group;
    int d = G.order();
    std::vector<Polynomial> q = elementary_symmetric_orbit(G, germ.h);

    std::vector<std::string> fvars = target_variables(G);
    fvars.push_back("Z");
    for (const auto& name : germ.parameters) fvars.push_back(name);
    Polynomial Z = Polynomial::variable(fvars, "Z");

    CoinvariantDecomposer dec(G);
    ImageEquation eq;
    eq.F = Z.pow(d);
    for (int j = 0; j < d; ++j) {
        InvariantExpression Q = dec.rewrite(q[j]);
        CyclotomicNumber sign((d - j) % 2 == 0 ? 1 : -1);
        eq.F += Q.polynomial * Z.pow(j) * sign;
        eq.coefficients.push_back(std::move(Q));
    }
    return eq;
}

bool verify_pullback_factorization(const ImageEquation& eq, const ReflectedGraphGerm& germ) {
    const ReflectionGroup& G = germ.group;
    std::map<std::string, Polynomial> bindings;
    std::vector<std::string> targets = target_variables(G);
    for (size_t i = 0; i < targets.size(); ++i) bindings[targets[i]] = G.orbit_map()[i];
    return eq.F.substitute(bindings) == orbit_product(G, germ.h);
}

} // namespace germforge
