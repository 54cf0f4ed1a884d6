#pragma once

#include "germforge/cyclotomic.hpp"

#include <vector>

namespace germforge {

using CycloMatrix = std::vector<std::vector<CyclotomicNumber>>;

int matrix_rank(CycloMatrix m);
CyclotomicNumber matrix_determinant(CycloMatrix m);

struct LinearSolveResult {
    bool consistent = false;
    // A particular solution with every free variable set to zero.
    std::vector<CyclotomicNumber> solution;
    std::vector<int> free_columns;

    bool unique() const { return consistent && free_columns.empty(); }
};

// Solves a x = b by exact Gaussian elimination (first-nonzero pivoting).
LinearSolveResult solve_linear_system(CycloMatrix a, std::vector<CyclotomicNumber> b);

} // namespace germforge
