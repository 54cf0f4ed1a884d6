#include "germforge/invariant_rewrite.hpp"

#include <algorithm>
#include <functional>

#include "germforge/cyclo_linalg.hpp"
#include "germforge/errors.hpp"

namespace germforge {

std::vector<std::string> target_variables(const ReflectionGroup& G) {
    if (G.dimension() == 2) return {"X", "Y"};
    std::vector<std::string> names;
    for (int i = 1; i <= G.dimension(); ++i) names.push_back("X" + std::to_string(i));
    return names;
}

CoinvariantDecomposer::CoinvariantDecomposer(ReflectionGroup G, bool reverse_candidates)
    : group_(std::move(G)), reverse_candidates_(reverse_candidates) {}

Polynomial CoinvariantDecomposer::orbit_power(const std::vector<int>& exponents) {
    auto it = power_cache_.find(exponents);
    if (it != power_cache_.end()) return it->second;
    Polynomial p = Polynomial::constant(group_.source_variables(), CyclotomicNumber(1));
    for (size_t i = 0; i < exponents.size(); ++i)
        if (exponents[i] > 0) p *= group_.orbit_map()[i].pow(exponents[i]);
    return power_cache_.emplace(exponents, std::move(p)).first->second;
}

const std::vector<std::vector<int>>& CoinvariantDecomposer::graded_exponents(long degree) {
    auto it = exponent_cache_.find(degree);
    if (it != exponent_cache_.end()) return it->second;
    std::vector<std::vector<int>> all;
    std::vector<int> cur(group_.dimension(), 0);
    std::function<void(int, long)> walk = [&](int i, long left) {
        if (i == group_.dimension()) {
            if (left == 0) all.push_back(cur);
            return;
        }
        long d = group_.degrees()[i];
        for (int e = 0; e * d <= left; ++e) {
            cur[i] = e;
            walk(i + 1, left - e * d);
        }
        cur[i] = 0;
    };
    walk(0, degree);
    return exponent_cache_.emplace(degree, std::move(all)).first->second;
}

InvariantExpression CoinvariantDecomposer::rewrite(const Polynomial& q) {
    Polynomial one = Polynomial::constant(group_.source_variables(), CyclotomicNumber(1));
    return decompose(q, {one})[0];
}

std::vector<InvariantExpression> CoinvariantDecomposer::decompose(
    const Polynomial& P, const std::vector<Polynomial>& basis) {
    if (basis.empty()) throw math_error("cannot decompose along an empty basis");
    std::vector<long> basis_degree(basis.size());
    for (size_t j = 0; j < basis.size(); ++j) {
        basis_degree[j] = std::max<long>(basis[j].total_degree(), 0);
        std::vector<long> ones(basis[j].variables().size(), 1);
        if (!basis[j].is_zero() && !basis[j].is_homogeneous(ones, basis_degree[j]))
            throw math_error("basis element " + std::to_string(j + 1) +
                             " is not homogeneous");
    }

    const auto& source = group_.source_variables();
    std::vector<std::string> ambient = unify_variables(source, P.variables());
    Polynomial p = P.with_variables(ambient);

    std::vector<bool> is_source(ambient.size());
    for (size_t i = 0; i < ambient.size(); ++i)
        is_source[i] = std::find(source.begin(), source.end(), ambient[i]) != source.end();

    std::vector<std::string> targets = target_variables(group_);
    std::vector<std::string> result_vars = targets;
    for (size_t i = 0; i < ambient.size(); ++i) {
        if (is_source[i]) continue;
        if (std::find(targets.begin(), targets.end(), ambient[i]) != targets.end())
            throw math_error("variable '" + ambient[i] + "' collides with a target variable");
        result_vars.push_back(ambient[i]);
    }

    // group the terms by their exponents on the fixed (non-source) variables
    std::map<std::vector<int>, Polynomial> slices;
    for (const auto& [m, c] : p.terms()) {
        std::vector<int> fixed;
        std::vector<int> src(m.exponents.size(), 0);
        for (size_t i = 0; i < m.exponents.size(); ++i) {
            if (is_source[i])
                src[i] = m.exponents[i];
            else
                fixed.push_back(m.exponents[i]);
        }
        auto [it, fresh] = slices.try_emplace(fixed, Polynomial::zero(ambient));
        (void)fresh;
        it->second.add_term(Monomial{src}, c);
    }

    std::vector<long> weights(ambient.size(), 0);
    for (size_t i = 0; i < ambient.size(); ++i)
        if (is_source[i]) weights[i] = 1;
    auto reduce_to_source = [&](const Monomial& m) {
        std::vector<int> r;
        for (size_t i = 0; i < m.exponents.size(); ++i)
            if (is_source[i]) r.push_back(m.exponents[i]);
        return r;
    };

    std::vector<Polynomial> coords(basis.size(), Polynomial::zero(result_vars));

    for (const auto& [fixed, slice] : slices) {
        for (const auto& [degree, part] : slice.homogeneous_parts(weights)) {
            struct Candidate {
                size_t j;
                std::vector<int> a;
            };
            std::vector<Candidate> candidates;
            for (size_t j = 0; j < basis.size(); ++j) {
                if (basis_degree[j] > degree) continue;
                for (const auto& a : graded_exponents(degree - basis_degree[j]))
                    candidates.push_back({j, a});
            }
            if (reverse_candidates_) std::reverse(candidates.begin(), candidates.end());

            std::map<std::vector<int>, int> row_of;
            auto row_index = [&](const std::vector<int>& key) {
                return row_of.emplace(key, (int)row_of.size()).first->second;
            };
            std::vector<std::map<int, CyclotomicNumber>> columns(candidates.size());
            for (size_t k = 0; k < candidates.size(); ++k) {
                Polynomial f = basis[candidates[k].j] * orbit_power(candidates[k].a);
                for (const auto& [m, c] : f.terms())
                    columns[k][row_index(reduce_to_source(m))] = c;
            }
            std::map<int, CyclotomicNumber> rhs;
            for (const auto& [m, c] : part.terms()) rhs[row_index(reduce_to_source(m))] = c;

            CycloMatrix a(row_of.size(),
                          std::vector<CyclotomicNumber>(candidates.size(), CyclotomicNumber(0)));
            std::vector<CyclotomicNumber> b(row_of.size(), CyclotomicNumber(0));
            for (size_t k = 0; k < candidates.size(); ++k)
                for (const auto& [r, c] : columns[k]) a[r][k] = c;
            for (const auto& [r, c] : rhs) b[r] = c;

            LinearSolveResult sol = solve_linear_system(a, b);
            if (!sol.consistent)
                throw math_error(
                    "the source-degree-" + std::to_string(degree) + " part '" +
                    part.to_string() +
                    "' has no expression in the orbit-map components over the basis");

            for (size_t k = 0; k < candidates.size(); ++k) {
                if (sol.solution[k].is_zero()) continue;
                std::vector<int> exps(result_vars.size(), 0);
                for (size_t i = 0; i < candidates[k].a.size(); ++i)
                    exps[i] = candidates[k].a[i];
                for (size_t i = 0; i < fixed.size(); ++i)
                    exps[targets.size() + i] = fixed[i];
                coords[candidates[k].j].add_term(Monomial{exps}, sol.solution[k]);
            }
        }
    }

    std::vector<InvariantExpression> out;
    for (size_t j = 0; j < basis.size(); ++j) {
        long sdeg = -1;
        for (const auto& [m, c] : coords[j].terms()) {
            (void)c;
            long d = 0;
            for (size_t i = 0; i < targets.size(); ++i)
                d += m.exponents[i] * group_.degrees()[i];
            sdeg = std::max(sdeg, d);
        }
        out.push_back({coords[j], sdeg});
    }
    return out;
}

InvariantExpression rewrite_invariant(const Polynomial& q, const ReflectionGroup& G) {
    return CoinvariantDecomposer(G).rewrite(q);
}

std::vector<InvariantExpression> coinvariant_decompose(const Polynomial& h,
                                                       const ReflectedGraphGerm& germ) {
    return CoinvariantDecomposer(germ.group).decompose(h, germ.basis);
}

PolyMatrix alpha_matrix(const ReflectedGraphGerm& germ) {
    CoinvariantDecomposer dec(germ.group);
    int d = germ.group.order();
    std::vector<std::string> vars = target_variables(germ.group);
    for (const auto& name : germ.parameters) vars.push_back(name);
    PolyMatrix alpha(d, d, vars);
    for (int i = 0; i < d; ++i) {
        auto row = dec.decompose(germ.basis[i] * germ.h, germ.basis);
        for (int j = 0; j < d; ++j) alpha.set(i, j, row[j].polynomial);
    }
    return alpha;
}

} // namespace germforge
