#include "germforge/reflection_group.hpp"

#include "germforge/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>

namespace germforge {
namespace {

CycloMatrix identity_matrix(int p) {
    CycloMatrix m(p, std::vector<CyclotomicNumber>(p, CyclotomicNumber(0)));
    for (int i = 0; i < p; ++i) m[i][i] = CyclotomicNumber(1);
    return m;
}

CycloMatrix multiply(const CycloMatrix& a, const CycloMatrix& b) {
    int p = (int)a.size();
    CycloMatrix r(p, std::vector<CyclotomicNumber>(p, CyclotomicNumber(0)));
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            CyclotomicNumber s(0);
            for (int k = 0; k < p; ++k) s += a[i][k] * b[k][j];
            r[i][j] = s;
        }
    return r;
}

CycloMatrix conjugate_transpose(const CycloMatrix& m) {
    int p = (int)m.size();
    CycloMatrix r(p, std::vector<CyclotomicNumber>(p, CyclotomicNumber(0)));
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) r[i][j] = m[j][i].conjugate();
    return r;
}

bool is_identity(const CycloMatrix& m) {
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m.size(); ++j) {
            if (i == j ? !m[i][j].is_one() : !m[i][j].is_zero()) return false;
        }
    return true;
}

std::string matrix_key(const CycloMatrix& m) {
    std::string key;
    for (const auto& row : m) {
        for (const auto& e : row) {
            key += e.to_string();
            key += ",";
        }
        key += ";";
    }
    return key;
}

long closure_cap() {
    if (const char* env = std::getenv("GERMFORGE_ORDER_CAP")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 10000;
}

int element_order(const CycloMatrix& m, long cap) {
    CycloMatrix cur = m;
    int k = 1;
    while (!is_identity(cur)) {
        cur = multiply(cur, m);
        if (++k > cap) throw resource_error("element order exceeds the closure cap");
    }
    return k;
}

// The normalized linear form whose kernel is Fix(g), valid when
// rank(g - Id) = 1: any nonzero row of g - Id spans the row space.
Polynomial reflection_form(const GroupElement& g,
                           const std::vector<std::string>& source_vars) {
    int p = (int)g.matrix.size();
    for (int i = 0; i < p; ++i) {
        std::vector<CyclotomicNumber> row(p);
        bool nonzero = false;
        for (int j = 0; j < p; ++j) {
            row[j] = g.matrix[i][j] - CyclotomicNumber(i == j ? 1 : 0);
            if (!row[j].is_zero()) nonzero = true;
        }
        if (!nonzero) continue;
        CyclotomicNumber scale(0);
        for (int j = 0; j < p; ++j)
            if (!row[j].is_zero()) { scale = row[j].inverse(); break; }
        Polynomial form = Polynomial::zero(source_vars);
        for (int j = 0; j < p; ++j)
            form += Polynomial::variable(source_vars, source_vars[j]) * (row[j] * scale);
        return form;
    }
    throw math_error("element is the identity; it has no reflection form");
}

// Whether g fixes the kernel of the linear form pointwise.
bool fixes_hyperplane(const GroupElement& g, const Polynomial& form,
                      const std::vector<std::string>& source_vars) {
    int p = (int)g.matrix.size();
    std::vector<CyclotomicNumber> c(p);
    int pivot = -1;
    for (int j = 0; j < p; ++j) {
        std::vector<int> e(p, 0);
        e[j] = 1;
        c[j] = form.coefficient(Monomial{e});
        if (pivot < 0 && !c[j].is_zero()) pivot = j;
    }
    for (int j = 0; j < p; ++j) {
        if (j == pivot) continue;
        // kernel basis vector e_j - (c_j / c_pivot) e_pivot
        CyclotomicNumber t = c[j] / c[pivot];
        for (int i = 0; i < p; ++i) {
            CyclotomicNumber img = g.matrix[i][j] - g.matrix[i][pivot] * t;
            CyclotomicNumber expect = CyclotomicNumber(i == j ? 1 : 0) -
                                      (i == pivot ? t : CyclotomicNumber(0));
            if (img != expect) return false;
        }
    }
    return true;
}

} // namespace

Polynomial apply_linear_substitution(const CycloMatrix& m, const Polynomial& p,
                                     const std::vector<std::string>& source_vars) {
    std::map<std::string, Polynomial> bindings;
    for (size_t j = 0; j < source_vars.size(); ++j) {
        Polynomial row = Polynomial::zero(source_vars);
        for (size_t k = 0; k < source_vars.size(); ++k)
            row += Polynomial::variable(source_vars, source_vars[k]) * m[j][k];
        bindings[source_vars[j]] = std::move(row);
    }
    return p.substitute(bindings);
}

void ReflectionGroup::classify_reflections() {
    reflection_ids_.clear();
    hyperplanes_.clear();
    long cap = closure_cap();
    std::vector<Polynomial> forms;
    for (const auto& g : elements_) {
        if (g.index == 1) continue;
        CycloMatrix diff = g.matrix;
        for (int i = 0; i < dimension_; ++i) diff[i][i] -= CyclotomicNumber(1);
        if (matrix_rank(diff) != 1) continue;
        reflection_ids_.push_back(g.index);
        Polynomial form = reflection_form(g, source_vars_);
        bool known = false;
        for (const auto& f : forms)
            if (f == form) { known = true; break; }
        if (!known) forms.push_back(form);
    }
    for (const auto& form : forms) {
        Hyperplane h;
        h.form = form;
        std::vector<int> stabilizer;
        for (const auto& g : elements_)
            if (g.index == 1 || fixes_hyperplane(g, form, source_vars_))
                stabilizer.push_back(g.index);
        h.stabilizer_order = (int)stabilizer.size();
        for (int id : stabilizer) {
            if (id == 1) continue;
            if (element_order(element(id).matrix, cap) == h.stabilizer_order) {
                h.generator_index = id;
                break;
            }
        }
        hyperplanes_.push_back(std::move(h));
    }
}

const Hyperplane& ReflectionGroup::hyperplane_of(int reflection_index) const {
    Polynomial form = reflection_form(element(reflection_index), source_vars_);
    for (const auto& h : hyperplanes_)
        if (h.form == form) return h;
    throw math_error("element is not a classified reflection");
}

void ReflectionGroup::verify_structure(bool check_reflection_generated) {
    if (check_reflection_generated) {
        std::set<std::string> reached{matrix_key(identity_matrix(dimension_))};
        std::deque<CycloMatrix> queue{identity_matrix(dimension_)};
        while (!queue.empty()) {
            CycloMatrix cur = queue.front();
            queue.pop_front();
            for (int id : reflection_ids_) {
                CycloMatrix next = multiply(cur, element(id).matrix);
                if (reached.insert(matrix_key(next)).second) queue.push_back(next);
            }
        }
        if ((int)reached.size() != order())
            throw math_error("the group is not generated by reflections");
    }
    long prod = 1;
    for (long d : degrees_) prod *= d;
    if (prod != order())
        throw math_error("orbit map degrees do not multiply to the group order");
    if ((int)orbit_map_.size() != dimension_ || (int)degrees_.size() != dimension_)
        throw math_error("orbit map must have one component per dimension");
    std::vector<long> ones(source_vars_.size(), 1);
    for (int i = 0; i < dimension_; ++i) {
        const Polynomial& w = orbit_map_[i];
        if (!w.is_homogeneous(ones, degrees_[i]))
            throw math_error("orbit map component " + std::to_string(i + 1) +
                             " is not homogeneous of its declared degree");
        for (const auto& g : elements_)
            if (apply_linear_substitution(g.inverse, w, source_vars_) != w)
                throw math_error("orbit map component " + std::to_string(i + 1) +
                                 " is not invariant under the group");
    }
    if (!default_basis_.empty() && (int)default_basis_.size() != order())
        throw math_error("coinvariant basis size must equal the group order");
}

ReflectionGroup ReflectionGroup::product(int r, int s) {
    if (r < 1 || s < 1) throw math_error("product family orders must be at least 1");
    ReflectionGroup G;
    G.dimension_ = 2;
    G.source_vars_ = {"x", "y"};
    G.name_ = "product:" + std::to_string(r) + "x" + std::to_string(s);
    for (int k = 0; k < r * s; ++k) {
        int i = k % r, j = k / r;
        GroupElement e;
        e.index = k + 1;
        e.matrix = {{CyclotomicNumber::root_of_unity(r, i), CyclotomicNumber(0)},
                    {CyclotomicNumber(0), CyclotomicNumber::root_of_unity(s, j)}};
        e.inverse = {{CyclotomicNumber::root_of_unity(r, -i), CyclotomicNumber(0)},
                     {CyclotomicNumber(0), CyclotomicNumber::root_of_unity(s, -j)}};
        G.elements_.push_back(std::move(e));
    }
    Polynomial x = Polynomial::variable(G.source_vars_, "x");
    Polynomial y = Polynomial::variable(G.source_vars_, "y");
    G.orbit_map_ = {x.pow(r), y.pow(s)};
    G.degrees_ = {r, s};
    for (int k = 0; k < r * s; ++k)
        G.default_basis_.push_back(x.pow(k % r) * y.pow(k / r));
    G.classify_reflections();
    G.verify_structure(true);
    return G;
}

ReflectionGroup ReflectionGroup::cyclic(int d) {
    if (d < 2) throw math_error("cyclic family order must be at least 2");
    ReflectionGroup G = product(1, d);
    G.name_ = "cyclic:" + std::to_string(d);
    return G;
}

ReflectionGroup ReflectionGroup::dihedral(int order) {
    if (order < 4 || order % 2 != 0)
        throw math_error("dihedral order must be an even number at least 4");
    int m = order / 2;
    ReflectionGroup G;
    G.dimension_ = 2;
    G.source_vars_ = {"x", "y"};
    G.name_ = "dihedral:" + std::to_string(order);

    CycloMatrix S = {{CyclotomicNumber::root_of_unity(m, 1), CyclotomicNumber(0)},
                     {CyclotomicNumber(0), CyclotomicNumber::root_of_unity(m, m - 1)}};
    CycloMatrix R = {{CyclotomicNumber(0), CyclotomicNumber(1)},
                     {CyclotomicNumber(1), CyclotomicNumber(0)}};
    auto s_power = [&](int t) {
        CycloMatrix p = identity_matrix(2);
        for (int i = 0; i < t; ++i) p = multiply(p, S);
        return p;
    };
    std::vector<CycloMatrix> order_list;
    order_list.push_back(identity_matrix(2));
    order_list.push_back(R);
    for (int t = 1; t < m; ++t) order_list.push_back(s_power(m - t));
    for (int t = 1; t < m; ++t) order_list.push_back(multiply(s_power(t), R));
    for (size_t k = 0; k < order_list.size(); ++k) {
        GroupElement e;
        e.index = (int)k + 1;
        e.matrix = order_list[k];
        e.inverse = conjugate_transpose(order_list[k]);
        G.elements_.push_back(std::move(e));
    }
    Polynomial x = Polynomial::variable(G.source_vars_, "x");
    Polynomial y = Polynomial::variable(G.source_vars_, "y");
    G.orbit_map_ = {x.pow(m) + y.pow(m), x * y};
    G.degrees_ = {m, 2};
    G.default_basis_.push_back(Polynomial::constant(G.source_vars_, CyclotomicNumber(1)));
    for (int k = 1; k < m; ++k) G.default_basis_.push_back(x.pow(k));
    for (int k = 1; k <= m; ++k) G.default_basis_.push_back(y.pow(k));
    G.classify_reflections();
    G.verify_structure(true);
    return G;
}

ReflectionGroup ReflectionGroup::generate_closure(const std::vector<CycloMatrix>& generators,
                                                  std::vector<Polynomial> orbit_map,
                                                  std::vector<long> degrees,
                                                  std::vector<std::string> source_vars,
                                                  std::vector<Polynomial> basis,
                                                  std::string name) {
    if (source_vars.empty())
        throw math_error("a group needs at least one source variable");
    int p = (int)source_vars.size();
    CycloMatrix id = identity_matrix(p);
    for (const auto& g : generators) {
        if ((int)g.size() != p)
            throw math_error("generator dimension does not match the variable count");
        for (const auto& row : g)
            if ((int)row.size() != p)
                throw math_error("generator matrix is not square");
        if (!is_identity(multiply(conjugate_transpose(g), g)))
            throw math_error("generator is not unitary");
    }
    long cap = closure_cap();
    std::vector<CycloMatrix> found{id};
    std::set<std::string> keys{matrix_key(id)};
    std::deque<CycloMatrix> queue{id};
    while (!queue.empty()) {
        CycloMatrix cur = queue.front();
        queue.pop_front();
        for (const auto& g : generators) {
            CycloMatrix next = multiply(cur, g);
            if (!keys.insert(matrix_key(next)).second) continue;
            if ((long)found.size() + 1 > cap)
                throw resource_error("group closure exceeded the order cap of " +
                                     std::to_string(cap));
            found.push_back(next);
            queue.push_back(next);
        }
    }
    ReflectionGroup G;
    G.dimension_ = p;
    G.source_vars_ = std::move(source_vars);
    G.name_ = std::move(name);
    for (size_t k = 0; k < found.size(); ++k) {
        GroupElement e;
        e.index = (int)k + 1;
        e.matrix = found[k];
        e.inverse = conjugate_transpose(found[k]);
        G.elements_.push_back(std::move(e));
    }
    G.orbit_map_ = std::move(orbit_map);
    G.degrees_ = std::move(degrees);
    G.default_basis_ = std::move(basis);
    G.classify_reflections();
    G.verify_structure(true);
    return G;
}

std::vector<long> ReflectionGroup::degrees_sorted(bool extended) const {
    std::vector<long> d = degrees_;
    if (extended) d.push_back(1);
    std::sort(d.begin(), d.end());
    return d;
}

} // namespace germforge
