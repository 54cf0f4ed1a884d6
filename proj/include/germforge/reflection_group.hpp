#pragma once

#include "germforge/cyclo_linalg.hpp"
#include "germforge/polynomial.hpp"

#include <string>
#include <vector>

namespace germforge {

struct GroupElement {
    int index = 0;  // 1-based; index 1 is the identity
    CycloMatrix matrix;
    CycloMatrix inverse;
};

struct Hyperplane {
    Polynomial form;          // linear, first nonzero coefficient scaled to 1
    int stabilizer_order = 0; // e, the order of the pointwise stabilizer
    int generator_index = 0;  // id of a reflection generating that cyclic stabilizer
};

// Applies the linear change of variables x_j -> sum_k m[j][k] x_k to the
// source variables of p; other variables are left alone.
Polynomial apply_linear_substitution(const CycloMatrix& m, const Polynomial& p,
                                     const std::vector<std::string>& source_vars);

class ReflectionGroup {
public:
    // Z_r x Z_s acting diagonally; element k (0-based) is
    // diag(zeta_r^(k mod r), zeta_s^(k div r)). Allows r = 1 or s = 1.
    static ReflectionGroup product(int r, int s);
    // Z_1 x Z_d with orbit map (x, y^d).
    static ReflectionGroup cyclic(int d);
    // Dihedral group of order 2m acting on C^2 with orbit map (x^m+y^m, xy).
    static ReflectionGroup dihedral(int order);
    // Breadth-first closure of the generators, capped by GERMFORGE_ORDER_CAP
    // (default 10000). The orbit map, degrees, and an optional coinvariant
    // basis come from the caller and are verified, not derived.
    static ReflectionGroup generate_closure(const std::vector<CycloMatrix>& generators,
                                            std::vector<Polynomial> orbit_map,
                                            std::vector<long> degrees,
                                            std::vector<std::string> source_vars,
                                            std::vector<Polynomial> basis,
                                            std::string name);

    int dimension() const { return dimension_; }
    int order() const { return (int)elements_.size(); }
    const std::vector<GroupElement>& elements() const { return elements_; }
    const GroupElement& element(int index) const { return elements_.at(index - 1); }
    const std::vector<int>& reflection_ids() const { return reflection_ids_; }
    const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
    const Hyperplane& hyperplane_of(int reflection_index) const;
    const std::vector<Polynomial>& orbit_map() const { return orbit_map_; }
    const std::vector<long>& degrees() const { return degrees_; }
    // Ascending; appends the trivial graph degree 1 when extended.
    std::vector<long> degrees_sorted(bool extended) const;
    const std::vector<std::string>& source_variables() const { return source_vars_; }
    // Empty for user-supplied groups without a declared basis.
    const std::vector<Polynomial>& default_basis() const { return default_basis_; }
    const std::string& name() const { return name_; }

private:
    ReflectionGroup() = default;
    void classify_reflections();
    void verify_structure(bool check_reflection_generated);

    int dimension_ = 0;
    std::vector<GroupElement> elements_;
    std::vector<int> reflection_ids_;
    std::vector<Hyperplane> hyperplanes_;
    std::vector<Polynomial> orbit_map_;
    std::vector<long> degrees_;
    std::vector<std::string> source_vars_;
    std::vector<Polynomial> default_basis_;
    std::string name_;
};

// The bundle defining a reflected graph germ f = (w, h).
struct ReflectedGraphGerm {
    ReflectionGroup group;
    Polynomial h;                         // source variables plus parameters
    std::vector<Polynomial> basis;        // r_1 ... r_d with r_1 = 1
    std::vector<std::string> parameters;  // symbolic invariant indeterminates

    // Validates h(0) = 0, the basis shape, and that the eigen-matrix built
    // from the basis is nonsingular; empty basis means the group default.
    static ReflectedGraphGerm create(ReflectionGroup group, Polynomial h,
                                     std::vector<Polynomial> basis = {},
                                     std::vector<std::string> parameters = {});
};

} // namespace germforge
