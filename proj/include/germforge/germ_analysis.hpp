#pragma once

#include "germforge/group_action.hpp"

namespace germforge {

struct MultiplicityReport {
    long multiplicity = 0;
    long lower_bound = 0;
    long upper_bound = 0;
    long group_order = 0;
};

enum class MultiplicityMode { reflection_map, reflected_graph };

// Minimal total degree among the terms of F; throws for the zero polynomial
// and for one that misses the origin.
long multiplicity_at_origin(const Polynomial& F);

// Products of the sorted coordinate degrees with the largest (resp. the
// smallest) one left out. Graph mode appends the trivial degree 1, which
// makes the upper bound the group order.
std::pair<long, long> multiplicity_bounds(const ReflectionGroup& G, MultiplicityMode mode);

// Multiplicity of the image equation at the origin together with the graph
// bounds; parameters weigh nothing, so the multiplicity is the one seen at
// generic parameter values.
MultiplicityReport multiplicity_report(const ReflectedGraphGerm& germ, const Polynomial& F);

struct QuasihomogeneousType {
    std::vector<long> weights;             // one per source variable, gcd 1
    std::vector<long> coordinate_degrees;  // w_1 ... w_n then h; -1 for a zero coordinate
    bool found = false;
};

// Positive integer weights making every coordinate of (w, h) weighted
// homogeneous, from the exact linear system of monomial degree equalities;
// parameters weigh nothing. Free weights are fixed at 1, which is complete
// in rank two (an underdetermined system there means no constraints at all).
QuasihomogeneousType quasihomogeneous_type(const ReflectedGraphGerm& germ);

// Substitutes x_i -> t^{b_i} x_i with a fresh t and compares coordinate j
// against t^{d_j} times itself; false when the type was not found.
bool certify_quasihomogeneous(const ReflectedGraphGerm& germ,
                              const QuasihomogeneousType& type);

// ((2s-1)(2k-2) + (2s-1)) / 2; the numerator is odd, so the count is never
// an integer and the parity obstruction fires.
mpq_class crosscap_count(long s, long k);

} // namespace germforge
