#pragma once

#include "germforge/polynomial.hpp"

#include <string>
#include <vector>

namespace germforge {

// Matrix over the polynomial ring. All entries share the matrix's variable
// list; assignment re-expresses the entry over that list.
class PolyMatrix {
public:
    enum class DetAlgorithm { automatic, cofactor, bareiss };

    PolyMatrix(int rows, int cols, std::vector<std::string> variables);
    static PolyMatrix identity(int n, std::vector<std::string> variables);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::vector<std::string>& variables() const { return variables_; }

    const Polynomial& at(int i, int j) const { return entries_[i * cols_ + j]; }
    void set(int i, int j, const Polynomial& p);

    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix scaled(const Polynomial& p) const;
    PolyMatrix transpose() const;
    PolyMatrix substitute(const std::map<std::string, Polynomial>& bindings,
                          std::vector<std::string> result_variables) const;

    // Cofactor expansion for dimension <= 4, fraction-free elimination
    // above that; the explicit algorithms exist so tests can cross-check.
    Polynomial determinant(DetAlgorithm alg = DetAlgorithm::automatic) const;
    // adj(M) with M * adj(M) = det(M) * Id.
    PolyMatrix adjugate() const;

    bool operator==(const PolyMatrix& o) const;
    bool operator!=(const PolyMatrix& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    PolyMatrix minor_matrix(int row, int col) const;
    Polynomial det_cofactor() const;
    Polynomial det_bareiss() const;

    int rows_, cols_;
    std::vector<std::string> variables_;
    std::vector<Polynomial> entries_;
};

} // namespace germforge
