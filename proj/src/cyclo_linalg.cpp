#include "germforge/cyclo_linalg.hpp"

#include "germforge/errors.hpp"

#include <utility>

namespace germforge {

int matrix_rank(CycloMatrix m) {
    if (m.empty()) return 0;
    int rows = (int)m.size(), cols = (int)m[0].size(), rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (!m[i][col].is_zero()) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        CyclotomicNumber inv = m[rank][col].inverse();
        for (int j = col; j < cols; ++j) m[rank][j] *= inv;
        for (int i = rank + 1; i < rows; ++i) {
            if (m[i][col].is_zero()) continue;
            CyclotomicNumber f = m[i][col];
            for (int j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

CyclotomicNumber matrix_determinant(CycloMatrix m) {
    int n = (int)m.size();
    CyclotomicNumber det(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (!m[i][col].is_zero()) { pivot = i; break; }
        if (pivot < 0) return CyclotomicNumber(0);
        if (pivot != col) {
            std::swap(m[col], m[pivot]);
            det = -det;
        }
        det *= m[col][col];
        CyclotomicNumber inv = m[col][col].inverse();
        for (int i = col + 1; i < n; ++i) {
            if (m[i][col].is_zero()) continue;
            CyclotomicNumber f = m[i][col] * inv;
            for (int j = col; j < n; ++j) m[i][j] -= f * m[col][j];
        }
    }
    return det;
}

LinearSolveResult solve_linear_system(CycloMatrix a, std::vector<CyclotomicNumber> b) {
    int rows = (int)a.size();
    int cols = rows == 0 ? 0 : (int)a[0].size();
    if ((int)b.size() != rows) throw math_error("right-hand side size mismatch");
    std::vector<int> pivot_col;
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (!a[i][col].is_zero()) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(a[r], a[pivot]);
        std::swap(b[r], b[pivot]);
        CyclotomicNumber inv = a[r][col].inverse();
        for (int j = col; j < cols; ++j) a[r][j] *= inv;
        b[r] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][col].is_zero()) continue;
            CyclotomicNumber f = a[i][col];
            for (int j = col; j < cols; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(col);
        ++r;
    }
    LinearSolveResult result;
    for (int i = r; i < rows; ++i)
        if (!b[i].is_zero()) return result;
    result.consistent = true;
    result.solution.assign(cols, CyclotomicNumber(0));
    for (int i = 0; i < r; ++i) result.solution[pivot_col[i]] = b[i];
    for (int col = 0, k = 0; col < cols; ++col) {
        if (k < (int)pivot_col.size() && pivot_col[k] == col)
            ++k;
        else
            result.free_columns.push_back(col);
    }
    return result;
}

} // namespace germforge
