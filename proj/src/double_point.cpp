#include "germforge/double_point.hpp"

#include <algorithm>

namespace germforge {

namespace {

CyclotomicNumber grlex_leading_coefficient(const Polynomial& p) {
    if (p.is_zero()) return CyclotomicNumber(0);
    auto best = p.terms().begin();
    for (auto it = std::next(best); it != p.terms().end(); ++it) {
        long d = it->first.degree(), bd = best->first.degree();
        if (d > bd || (d == bd && it->first.exponents > best->first.exponents))
            best = it;
    }
    return best->second;
}

DoublePointEquation assemble(std::vector<Polynomial> reflection_factors,
                             std::vector<Polynomial> non_reflection_factors,
                             const Polynomial& one) {
    DoublePointEquation result;
    result.equation = one;
    for (const Polynomial& f : reflection_factors) result.equation *= f;
    for (const Polynomial& f : non_reflection_factors) result.equation *= f;
    result.reflection_factors = std::move(reflection_factors);
    result.non_reflection_factors = std::move(non_reflection_factors);
    result.leading_constant = grlex_leading_coefficient(result.equation);
    result.degenerate = result.equation.is_zero();
    return result;
}

// The part of h of degree one in the source variables; parameters and other
// variables are weightless, so a term like x*p1 still counts as linear.
Polynomial source_linear_part(const ReflectionGroup& G, const Polynomial& h) {
    const auto& vars = h.variables();
    std::vector<long> weights(vars.size(), 0);
    const auto& source = G.source_variables();
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (std::find(source.begin(), source.end(), vars[i]) != source.end())
            weights[i] = 1;
    for (const auto& [degree, part] : h.homogeneous_parts(weights))
        if (degree == 1) return part;
    return Polynomial::zero(vars);
}

} // namespace

DoublePointEquation double_point_equation(const ReflectedGraphGerm& germ) {
    const ReflectionGroup& G = germ.group;
    const auto& refl = G.reflection_ids();
    std::vector<Polynomial> reflection_factors, non_reflection_factors;
    for (int k = 2; k <= G.order(); ++k) {
        if (std::find(refl.begin(), refl.end(), k) != refl.end())
            reflection_factors.push_back(demazure(G, k, germ.h));
        else
            non_reflection_factors.push_back(germ.h - act(G, k, germ.h));
    }
    Polynomial one = Polynomial::constant(germ.h.variables(), CyclotomicNumber(1));
    return assemble(std::move(reflection_factors), std::move(non_reflection_factors), one);
}

std::optional<DoublePointEquation> double_point_regular_case(const ReflectedGraphGerm& germ) {
    const ReflectionGroup& G = germ.group;
    Polynomial linear = source_linear_part(G, germ.h);
    if (linear.is_zero()) return std::nullopt;
    for (int k : G.reflection_ids())
        if ((linear - act(G, k, linear)).is_zero()) return std::nullopt;

    const auto& refl = G.reflection_ids();
    std::vector<Polynomial> non_reflection_factors;
    for (int k = 2; k <= G.order(); ++k)
        if (std::find(refl.begin(), refl.end(), k) == refl.end())
            non_reflection_factors.push_back(germ.h - act(G, k, germ.h));
    Polynomial one = Polynomial::constant(germ.h.variables(), CyclotomicNumber(1));
    return assemble({}, std::move(non_reflection_factors), one);
}

} // namespace germforge
