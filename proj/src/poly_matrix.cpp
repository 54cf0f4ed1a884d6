#include "germforge/poly_matrix.hpp"

#include "germforge/errors.hpp"

namespace germforge {

PolyMatrix::PolyMatrix(int rows, int cols, std::vector<std::string> variables)
    : rows_(rows), cols_(cols), variables_(std::move(variables)),
      entries_(rows * cols, Polynomial::zero(variables_)) {
    if (rows < 1 || cols < 1) throw math_error("matrix dimensions must be positive");
}

PolyMatrix PolyMatrix::identity(int n, std::vector<std::string> variables) {
    PolyMatrix m(n, n, std::move(variables));
    Polynomial one = Polynomial::constant(m.variables_, CyclotomicNumber(1));
    for (int i = 0; i < n; ++i) m.set(i, i, one);
    return m;
}

void PolyMatrix::set(int i, int j, const Polynomial& p) {
    entries_[i * cols_ + j] = p.with_variables(variables_);
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw math_error("matrix shape mismatch in addition");
    PolyMatrix r = *this;
    for (size_t k = 0; k < entries_.size(); ++k)
        r.entries_[k] = entries_[k] + o.entries_[k].with_variables(variables_);
    return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw math_error("matrix shape mismatch in subtraction");
    PolyMatrix r = *this;
    for (size_t k = 0; k < entries_.size(); ++k)
        r.entries_[k] = entries_[k] - o.entries_[k].with_variables(variables_);
    return r;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_) throw math_error("matrix shape mismatch in product");
    PolyMatrix r(rows_, o.cols_, variables_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < o.cols_; ++j) {
            Polynomial s = Polynomial::zero(variables_);
            for (int k = 0; k < cols_; ++k)
                s += at(i, k) * o.at(k, j).with_variables(variables_);
            r.entries_[i * o.cols_ + j] = std::move(s);
        }
    return r;
}

PolyMatrix PolyMatrix::scaled(const Polynomial& p) const {
    PolyMatrix r = *this;
    Polynomial q = p.with_variables(variables_);
    for (auto& e : r.entries_) e *= q;
    return r;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix r(cols_, rows_, variables_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.entries_[j * rows_ + i] = at(i, j);
    return r;
}

PolyMatrix PolyMatrix::substitute(const std::map<std::string, Polynomial>& bindings,
                                  std::vector<std::string> result_variables) const {
    PolyMatrix r(rows_, cols_, std::move(result_variables));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            r.set(i, j, at(i, j).substitute(bindings));
    return r;
}

PolyMatrix PolyMatrix::minor_matrix(int row, int col) const {
    PolyMatrix m(rows_ - 1, cols_ - 1, variables_);
    for (int i = 0, mi = 0; i < rows_; ++i) {
        if (i == row) continue;
        for (int j = 0, mj = 0; j < cols_; ++j) {
            if (j == col) continue;
            m.entries_[mi * (cols_ - 1) + mj] = at(i, j);
            ++mj;
        }
        ++mi;
    }
    return m;
}

Polynomial PolyMatrix::det_cofactor() const {
    if (rows_ == 1) return at(0, 0);
    Polynomial det = Polynomial::zero(variables_);
    for (int i = 0; i < rows_; ++i) {
        if (at(i, 0).is_zero()) continue;
        Polynomial term = at(i, 0) * minor_matrix(i, 0).det_cofactor();
        det += (i % 2 == 0) ? term : -term;
    }
    return det;
}

Polynomial PolyMatrix::det_bareiss() const {
    int n = rows_;
    std::vector<Polynomial> a = entries_;
    auto e = [&](int i, int j) -> Polynomial& { return a[i * n + j]; };
    bool negate = false;
    Polynomial prev = Polynomial::constant(variables_, CyclotomicNumber(1));
    for (int k = 0; k + 1 < n; ++k) {
        if (e(k, k).is_zero()) {
            int r = -1;
            for (int i = k + 1; i < n; ++i)
                if (!e(i, k).is_zero()) { r = i; break; }
            if (r < 0) return Polynomial::zero(variables_);
            for (int j = 0; j < n; ++j) std::swap(e(k, j), e(r, j));
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                e(i, j) = (e(i, j) * e(k, k) - e(i, k) * e(k, j)).exact_divide(prev);
            e(i, k) = Polynomial::zero(variables_);
        }
        prev = e(k, k);
    }
    return negate ? -e(n - 1, n - 1) : e(n - 1, n - 1);
}

Polynomial PolyMatrix::determinant(DetAlgorithm alg) const {
    if (rows_ != cols_) throw math_error("determinant of a non-square matrix");
    switch (alg) {
    case DetAlgorithm::cofactor: return det_cofactor();
    case DetAlgorithm::bareiss: return det_bareiss();
    default: return rows_ <= 4 ? det_cofactor() : det_bareiss();
    }
}

PolyMatrix PolyMatrix::adjugate() const {
    if (rows_ != cols_) throw math_error("adjugate of a non-square matrix");
    if (rows_ == 1)
        return identity(1, variables_);
    PolyMatrix adj(rows_, cols_, variables_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            Polynomial c = minor_matrix(i, j).determinant();
            adj.entries_[j * cols_ + i] = ((i + j) % 2 == 0) ? c : -c;
        }
    return adj;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t k = 0; k < entries_.size(); ++k)
        if (entries_[k] != o.entries_[k]) return false;
    return true;
}

std::string PolyMatrix::to_string() const {
    std::string out;
    for (int i = 0; i < rows_; ++i) {
        out += "[";
        for (int j = 0; j < cols_; ++j) {
            if (j) out += ", ";
            out += at(i, j).to_string();
        }
        out += "]\n";
    }
    return out;
}

} // namespace germforge
