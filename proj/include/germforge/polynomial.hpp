#pragma once

#include "germforge/cyclotomic.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace germforge {

// Exponent vector over a fixed ambient variable list.
struct Monomial {
    std::vector<int> exponents;

    long degree() const {
        long d = 0;
        for (int e : exponents) d += e;
        return d;
    }
    bool divides(const Monomial& m) const {
        for (size_t i = 0; i < exponents.size(); ++i)
            if (exponents[i] > m.exponents[i]) return false;
        return true;
    }
    Monomial operator+(const Monomial& m) const {
        Monomial r = *this;
        for (size_t i = 0; i < exponents.size(); ++i) r.exponents[i] += m.exponents[i];
        return r;
    }
    Monomial operator-(const Monomial& m) const {
        Monomial r = *this;
        for (size_t i = 0; i < exponents.size(); ++i) r.exponents[i] -= m.exponents[i];
        return r;
    }
    bool operator==(const Monomial& m) const { return exponents == m.exponents; }
};

// Serialization order: total degree ascending, lex descending within a degree
// block. Map iteration in this order is exactly the canonical text order.
struct MonomialDisplayOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        long da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.exponents > b.exponents;
    }
};

// Sparse multivariate polynomial over the cyclotomic rationals, attached to
// an ordered variable list. Binary operations reconcile differing lists by
// merging them; merging fails only when the shared variables disagree about
// their relative order.
class Polynomial {
public:
    using TermMap = std::map<Monomial, CyclotomicNumber, MonomialDisplayOrder>;

    Polynomial() = default;
    explicit Polynomial(std::vector<std::string> variables)
        : variables_(std::move(variables)) {}

    static Polynomial zero(std::vector<std::string> variables) {
        return Polynomial(std::move(variables));
    }
    static Polynomial constant(std::vector<std::string> variables, CyclotomicNumber c);
    static Polynomial variable(const std::vector<std::string>& variables,
                               const std::string& name);
    static Polynomial from_exponents(std::vector<std::string> variables,
                                     std::vector<int> exponents, CyclotomicNumber c);

    const std::vector<std::string>& variables() const { return variables_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    int term_count() const { return (int)terms_.size(); }
    // -1 for the zero polynomial.
    long total_degree() const;
    long degree_in(const std::string& name) const;

    CyclotomicNumber coefficient(const Monomial& m) const;
    CyclotomicNumber constant_term() const;
    // The coefficient of name^power, a polynomial in the same variable list
    // with that variable's exponent cleared.
    Polynomial coefficient_of(const std::string& name, int power) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial operator*(const CyclotomicNumber& c) const;
    Polynomial pow(long k) const;

    // Quotient when the division is exact; throws math_error carrying the
    // nonzero remainder otherwise.
    Polynomial exact_divide(const Polynomial& q) const;

    Polynomial substitute(const std::map<std::string, Polynomial>& bindings) const;
    // Same value over a variable list that must cover every variable this
    // polynomial actually uses.
    Polynomial with_variables(std::vector<std::string> variables) const;
    Polynomial derivative(const std::string& name) const;
    CyclotomicNumber evaluate(const std::vector<CyclotomicNumber>& point) const;

    // Weighted-homogeneous parts, degree ascending; empty for zero.
    std::vector<std::pair<long, Polynomial>> homogeneous_parts(
        const std::vector<long>& weights) const;
    bool is_homogeneous(const std::vector<long>& weights, long degree) const;

    // Mathematical equality (variable lists reconciled first).
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string to_string() const;

    // Internal mutation used by builders; keeps the no-zero-terms invariant.
    void add_term(const Monomial& m, const CyclotomicNumber& c);

private:
    // Leading term under graded lex (highest degree, lex-largest exponent
    // vector); drives division.
    TermMap::const_iterator grlex_leader() const;

    std::vector<std::string> variables_;
    TermMap terms_;
};

inline Polynomial operator*(const CyclotomicNumber& c, const Polynomial& p) {
    return p * c;
}

// Merge of two variable lists preserving both relative orders; throws
// math_error when the shared variables are ordered inconsistently.
std::vector<std::string> unify_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b);

} // namespace germforge
