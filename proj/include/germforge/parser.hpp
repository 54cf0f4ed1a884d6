#pragma once

#include <string>

#include "germforge/reflection_group.hpp"

namespace germforge {

// Recursive-descent parser for polynomial expressions: +, -, *, ^ with
// positive integer exponents, rational literals like 3/2, root-of-unity
// literals like z3^2, and parentheses; whitespace never matters. Names must
// come from the declared variable list; an undeclared name of the shape
// z<digits> reads as a root of unity. Errors carry line and column.
Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& variables);

// "product:2x2", "cyclic:4", "dihedral:6", or "file:<path>". The file form
// reads a key = value document with dimension, conductor, generator (one
// key per matrix, entries in the cyclotomic text form), orbit_map, degrees,
// and optional variables, basis, name.
ReflectionGroup parse_group_spec(const std::string& spec);

struct ParameterSpec {
    std::string name;
    std::string target_expression;  // empty = stays symbolic
};

// Germ document: key = value lines with # comments. Keys: group, h, params.
// A params entry is a bare name or name=expression with the expression in
// target variables.
struct GermDocument {
    std::string group_spec;
    std::string h_source;
    std::vector<ParameterSpec> parameters;
};

GermDocument parse_germ_document(const std::string& text);
GermDocument load_germ_document(const std::string& path);

// Parses the group, checks parameter names against the reserved source,
// target, and Z names, parses h over source plus parameters, and folds
// assigned parameters into h by pulling their target expressions back
// through the orbit map.
ReflectedGraphGerm assemble_germ(const GermDocument& doc);

} // namespace germforge
