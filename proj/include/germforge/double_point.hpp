#pragma once

#include <optional>

#include "germforge/group_action.hpp"

namespace germforge {

// Defining equation of the double-point hypersurface of f = (w, h) in the
// source: one divided-difference factor per reflection times one plain
// difference h - g.h per remaining non-identity element.
struct DoublePointEquation {
    Polynomial equation;  // expanded product of all factors
    std::vector<Polynomial> reflection_factors;      // indexed like reflection_ids()
    std::vector<Polynomial> non_reflection_factors;  // ascending element index
    CyclotomicNumber leading_constant;  // graded-lex leading coefficient of equation
    bool degenerate = false;            // the product vanishes identically
};

DoublePointEquation double_point_equation(const ReflectedGraphGerm& germ);

// Shortcut for germs whose linear part is nonzero and moved by every
// reflection: the divided-difference factors are then local units, so the
// plain differences alone cut out the double points. For the rank-two
// product groups that condition is the same as asking that the linear part
// not define a reflecting hyperplane. Empty when it fails.
std::optional<DoublePointEquation> double_point_regular_case(const ReflectedGraphGerm& germ);

} // namespace germforge
