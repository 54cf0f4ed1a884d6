#include "germforge/germ_analysis.hpp"

#include <algorithm>

#include "germforge/errors.hpp"

namespace germforge {

namespace {

long minimal_weighted_degree(const Polynomial& F, const std::vector<long>& weights) {
    if (F.is_zero()) throw math_error("the zero polynomial has no multiplicity at the origin");
    long m = F.homogeneous_parts(weights).front().first;
    if (m == 0) throw math_error("the polynomial does not vanish at the origin");
    return m;
}

std::vector<long> unit_weights(const Polynomial& F) {
    return std::vector<long>(F.variables().size(), 1);
}

} // namespace

long multiplicity_at_origin(const Polynomial& F) {
    return minimal_weighted_degree(F, unit_weights(F));
}

std::pair<long, long> multiplicity_bounds(const ReflectionGroup& G, MultiplicityMode mode) {
    std::vector<long> degrees = G.degrees_sorted(mode == MultiplicityMode::reflected_graph);
    long lower = 1, upper = 1;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (i + 1 < degrees.size()) lower *= degrees[i];
        if (i > 0) upper *= degrees[i];
    }
    return {lower, upper};
}

MultiplicityReport multiplicity_report(const ReflectedGraphGerm& germ, const Polynomial& F) {
    std::vector<long> weights(F.variables().size(), 1);
    const auto& vars = F.variables();
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (std::find(germ.parameters.begin(), germ.parameters.end(), vars[i]) !=
            germ.parameters.end())
            weights[i] = 0;

    MultiplicityReport report;
    report.multiplicity = minimal_weighted_degree(F, weights);
    auto [lower, upper] = multiplicity_bounds(germ.group, MultiplicityMode::reflected_graph);
    report.lower_bound = lower;
    report.upper_bound = upper;
    report.group_order = germ.group.order();
    return report;
}

namespace {

// exponent rows of P restricted to the source variables, one per term
std::vector<std::vector<long>> source_exponent_rows(const Polynomial& P,
                                                    const std::vector<std::string>& source) {
    const auto& vars = P.variables();
    std::vector<int> slot(vars.size(), -1);
    for (std::size_t i = 0; i < vars.size(); ++i) {
        auto it = std::find(source.begin(), source.end(), vars[i]);
        if (it != source.end()) slot[i] = (int)(it - source.begin());
    }
    std::vector<std::vector<long>> rows;
    for (const auto& [m, c] : P.terms()) {
        std::vector<long> row(source.size(), 0);
        for (std::size_t i = 0; i < m.exponents.size(); ++i)
            if (slot[i] >= 0) row[slot[i]] += m.exponents[i];
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

QuasihomogeneousType quasihomogeneous_type(const ReflectedGraphGerm& germ) {
    const ReflectionGroup& G = germ.group;
    const auto& source = G.source_variables();
    const std::size_t n = source.size();

    std::vector<Polynomial> coords = G.orbit_map();
    coords.push_back(germ.h);

    // all monomials of one coordinate share a weighted degree; each extra
    // monomial contributes one homogeneous constraint row
    std::vector<std::vector<mpq_class>> M;
    for (const Polynomial& P : coords) {
        auto rows = source_exponent_rows(P, source);
        for (std::size_t k = 1; k < rows.size(); ++k) {
            std::vector<mpq_class> diff(n);
            bool nonzero = false;
            for (std::size_t i = 0; i < n; ++i) {
                diff[i] = rows[k][i] - rows[0][i];
                if (diff[i] != 0) nonzero = true;
            }
            if (nonzero) M.push_back(std::move(diff));
        }
    }

    // reduced row echelon form over the rationals
    std::size_t pivot_row = 0;
    std::vector<int> pivot_cols;
    std::vector<bool> is_pivot(n, false);
    for (std::size_t col = 0; col < n && pivot_row < M.size(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < M.size() && M[sel][col] == 0) ++sel;
        if (sel == M.size()) continue;
        std::swap(M[pivot_row], M[sel]);
        mpq_class lead = M[pivot_row][col];
        for (auto& v : M[pivot_row]) v /= lead;
        for (std::size_t r = 0; r < M.size(); ++r) {
            if (r == pivot_row || M[r][col] == 0) continue;
            mpq_class factor = M[r][col];
            for (std::size_t i = 0; i < n; ++i) M[r][i] -= factor * M[pivot_row][i];
        }
        is_pivot[col] = true;
        pivot_cols.push_back((int)col);
        ++pivot_row;
    }

    std::vector<mpq_class> b(n, 1);
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
        mpq_class val = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (!is_pivot[i]) val -= M[r][i];
        b[pivot_cols[r]] = val;
    }

    QuasihomogeneousType result;
    for (const auto& v : b)
        if (v <= 0) return result;

    mpz_class denominators = 1;
    for (const auto& v : b) denominators = lcm(denominators, v.get_den());
    std::vector<mpz_class> scaled;
    mpz_class common = 0;
    for (const auto& v : b) {
        scaled.push_back(v.get_num() * (denominators / v.get_den()));
        common = gcd(common, scaled.back());
    }
    for (const auto& z : scaled) result.weights.push_back(mpz_class(z / common).get_si());

    for (const Polynomial& P : coords) {
        if (P.is_zero()) {
            result.coordinate_degrees.push_back(-1);
            continue;
        }
        auto rows = source_exponent_rows(P, source);
        long d = 0;
        for (std::size_t i = 0; i < n; ++i) d += rows[0][i] * result.weights[i];
        result.coordinate_degrees.push_back(d);
    }
    result.found = true;
    return result;
}

bool certify_quasihomogeneous(const ReflectedGraphGerm& germ,
                              const QuasihomogeneousType& type) {
    if (!type.found) return false;
    const auto& source = germ.group.source_variables();

    std::vector<Polynomial> coords = germ.group.orbit_map();
    coords.push_back(germ.h);

    std::vector<std::string> used = source;
    for (const Polynomial& P : coords)
        used = unify_variables(used, P.variables());
    std::string t_name = "t";
    while (std::find(used.begin(), used.end(), t_name) != used.end()) t_name += "_";

    auto ambient = unify_variables(used, {t_name});
    Polynomial t = Polynomial::variable(ambient, t_name);
    std::map<std::string, Polynomial> scaling;
    for (std::size_t i = 0; i < source.size(); ++i)
        scaling[source[i]] = t.pow(type.weights[i]) * Polynomial::variable(ambient, source[i]);

    for (std::size_t j = 0; j < coords.size(); ++j) {
        const Polynomial& P = coords[j];
        if (P.is_zero()) continue;
        if (P.substitute(scaling) != P * t.pow(type.coordinate_degrees[j])) return false;
    }
    return true;
}

mpq_class crosscap_count(long s, long k) {
    mpq_class numerator((2 * s - 1) * (2 * k - 2) + (2 * s - 1));
    return numerator / 2;
}

} // namespace germforge
