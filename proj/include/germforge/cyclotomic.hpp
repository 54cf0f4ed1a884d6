#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <vector>

namespace germforge {

// An element of the cyclotomic field Q(zeta_m), stored in the power basis
// 1, z, ..., z^{phi(m)-1} modulo the m-th cyclotomic polynomial. Values are
// kept canonical: after every operation the element is reduced to the
// smallest conductor that contains it, so equality is plain coefficient
// comparison and conductor 1 means the element is rational.
class CyclotomicNumber {
public:
    CyclotomicNumber() : conductor_(1), coeffs_(1, mpq_class(0)) {}
    CyclotomicNumber(const mpq_class& r) : conductor_(1), coeffs_(1, r) {}
    CyclotomicNumber(long n) : conductor_(1), coeffs_(1, mpq_class(n)) {}
    CyclotomicNumber(int n) : conductor_(1), coeffs_(1, mpq_class(n)) {}

    // zeta_m^k
    static CyclotomicNumber root_of_unity(long m, long k = 1);

    long conductor() const { return conductor_; }
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const { return conductor_ == 1; }
    bool is_one() const { return conductor_ == 1 && coeffs_[0] == 1; }
    // The rational value; only valid when is_rational().
    const mpq_class& rational_value() const;

    CyclotomicNumber operator-() const;
    CyclotomicNumber operator+(const CyclotomicNumber& o) const;
    CyclotomicNumber operator-(const CyclotomicNumber& o) const;
    CyclotomicNumber operator*(const CyclotomicNumber& o) const;
    CyclotomicNumber& operator+=(const CyclotomicNumber& o) { return *this = *this + o; }
    CyclotomicNumber& operator-=(const CyclotomicNumber& o) { return *this = *this - o; }
    CyclotomicNumber& operator*=(const CyclotomicNumber& o) { return *this = *this * o; }

    CyclotomicNumber inverse() const;
    CyclotomicNumber operator/(const CyclotomicNumber& o) const { return *this * o.inverse(); }

    // Complex conjugation, z^j -> z^{m-j}; exact.
    CyclotomicNumber conjugate() const;

    bool operator==(const CyclotomicNumber& o) const {
        return conductor_ == o.conductor_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const CyclotomicNumber& o) const { return !(*this == o); }
    // Arbitrary total order (conductor, then coefficients); used for map keys.
    bool operator<(const CyclotomicNumber& o) const;

    // Copy of this element re-expressed in Q(zeta_m); m must be a multiple
    // of the conductor.
    CyclotomicNumber embedded(long m) const;

    // Canonical text: "5", "-3/2", "z4", "2*z3^2", "(1/2 + z4)" style.
    // With parens=true a sum of several basis terms is parenthesized (the
    // form used for coefficients inside polynomial output).
    std::string to_string(bool parens = false) const;

    // True when the leading display sign is negative, i.e. the first nonzero
    // power-basis coordinate is negative. Polynomial printing pulls that
    // sign out of the coefficient.
    bool display_negative() const;
    // Number of nonzero power-basis coordinates.
    int term_count() const;

    static long phi(long m);
    // Coefficients of the m-th cyclotomic polynomial, constant term first.
    static const std::vector<mpz_class>& cyclotomic_polynomial(long m);

private:
    CyclotomicNumber(long conductor, std::vector<mpq_class> coeffs)
        : conductor_(conductor), coeffs_(std::move(coeffs)) {}

    void reduce_to_minimal_conductor();

    long conductor_;
    std::vector<mpq_class> coeffs_;
};

inline CyclotomicNumber operator*(const mpq_class& r, const CyclotomicNumber& c) {
    return CyclotomicNumber(r) * c;
}

} // namespace germforge
