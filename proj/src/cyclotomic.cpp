#include "germforge/cyclotomic.hpp"

#include "germforge/errors.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <utility>

namespace germforge {
namespace {

std::vector<long> divisors_of(long m) {
    std::vector<long> small, large;
    for (long d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            small.push_back(d);
            if (d != m / d) large.push_back(m / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// Quotient of num by the monic polynomial den; both constant-term first.
// The remainder must vanish, which holds for every division performed here.
std::vector<mpz_class> divide_monic_exact(std::vector<mpz_class> num,
                                          const std::vector<mpz_class>& den) {
    long dden = (long)den.size() - 1;
    long dq = (long)num.size() - 1 - dden;
    std::vector<mpz_class> q(dq + 1);
    for (long i = dq; i >= 0; --i) {
        mpz_class c = num[i + dden];
        q[i] = c;
        if (c != 0)
            for (long j = 0; j <= dden; ++j) num[i + j] -= c * den[j];
    }
    return q;
}

std::map<long, std::vector<mpz_class>>& cyclo_cache() {
    static std::map<long, std::vector<mpz_class>> cache;
    return cache;
}
std::mutex cyclo_mutex;

// Requires cyclo_mutex held; recursion stays within the lock.
const std::vector<mpz_class>& cyclo_locked(long m) {
    auto& cache = cyclo_cache();
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    std::vector<mpz_class> p(m + 1);
    p[0] = -1;
    p[m] = 1;
    for (long d : divisors_of(m))
        if (d != m) p = divide_monic_exact(std::move(p), cyclo_locked(d));
    return cache.emplace(m, std::move(p)).first->second;
}

// Remainder of v modulo the monic min_poly, padded/truncated to its degree.
std::vector<mpq_class> reduce_mod(std::vector<mpq_class> v,
                                  const std::vector<mpz_class>& min_poly) {
    long deg = (long)min_poly.size() - 1;
    if ((long)v.size() < deg) v.resize(deg);
    for (long i = (long)v.size() - 1; i >= deg; --i) {
        if (v[i] != 0) {
            mpq_class c = v[i];
            for (long j = 0; j < deg; ++j) v[i - deg + j] -= c * mpq_class(min_poly[j]);
        }
    }
    v.resize(deg);
    return v;
}

struct FieldTables {
    std::vector<mpz_class> min_poly;
    long deg;
    // For each divisor d of m: the power basis of Q(zeta_d) written in the
    // power basis of Q(zeta_m), one column per basis element.
    std::map<long, std::vector<std::vector<mpq_class>>> divisor_columns;
};

const FieldTables& field_tables(long m) {
    static std::map<long, FieldTables> registry;
    static std::mutex registry_mutex;
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto it = registry.find(m);
    if (it != registry.end()) return it->second;

    FieldTables ft;
    {
        std::lock_guard<std::mutex> plock(cyclo_mutex);
        ft.min_poly = cyclo_locked(m);
    }
    ft.deg = (long)ft.min_poly.size() - 1;
    for (long d : divisors_of(m)) {
        if (d == m) continue;
        long dd = CyclotomicNumber::phi(d);
        std::vector<std::vector<mpq_class>> cols;
        for (long j = 0; j < dd; ++j) {
            std::vector<mpq_class> v(j * (m / d) + 1);
            v[j * (m / d)] = 1;
            cols.push_back(reduce_mod(std::move(v), ft.min_poly));
        }
        ft.divisor_columns.emplace(d, std::move(cols));
    }
    return registry.emplace(m, std::move(ft)).first->second;
}

// Solves cols * x = target over the rationals by row reduction. Returns
// false when the system is inconsistent.
bool solve_columns(const std::vector<std::vector<mpq_class>>& cols,
                   const std::vector<mpq_class>& target,
                   std::vector<mpq_class>& x) {
    long rows = (long)target.size();
    long n = (long)cols.size();
    std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(n + 1));
    for (long i = 0; i < rows; ++i) {
        for (long j = 0; j < n; ++j) a[i][j] = cols[j][i];
        a[i][n] = target[i];
    }
    std::vector<long> pivot_col(rows, -1);
    long r = 0;
    for (long c = 0; c < n && r < rows; ++c) {
        long p = -1;
        for (long i = r; i < rows; ++i)
            if (a[i][c] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(a[r], a[p]);
        mpq_class inv = 1 / a[r][c];
        for (long j = c; j <= n; ++j) a[r][j] *= inv;
        for (long i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            mpq_class f = a[i][c];
            for (long j = c; j <= n; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col[r] = c;
        ++r;
    }
    for (long i = r; i < rows; ++i)
        if (a[i][n] != 0) return false;
    x.assign(n, mpq_class(0));
    for (long i = 0; i < r; ++i) x[pivot_col[i]] = a[i][n];
    return true;
}

} // namespace

long CyclotomicNumber::phi(long m) {
    long result = m;
    long n = m;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

const std::vector<mpz_class>& CyclotomicNumber::cyclotomic_polynomial(long m) {
    std::lock_guard<std::mutex> lock(cyclo_mutex);
    return cyclo_locked(m);
}

CyclotomicNumber CyclotomicNumber::root_of_unity(long m, long k) {
    if (m < 1) throw math_error("root of unity order must be positive");
    k %= m;
    if (k < 0) k += m;
    if (k == 0) return CyclotomicNumber(1);
    const FieldTables& ft = field_tables(m);
    std::vector<mpq_class> v(k + 1);
    v[k] = 1;
    CyclotomicNumber result(m, reduce_mod(std::move(v), ft.min_poly));
    result.reduce_to_minimal_conductor();
    return result;
}

bool CyclotomicNumber::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

const mpq_class& CyclotomicNumber::rational_value() const {
    if (conductor_ != 1) throw math_error("cyclotomic value is not rational");
    return coeffs_[0];
}

void CyclotomicNumber::reduce_to_minimal_conductor() {
    if (conductor_ == 1) return;
    bool higher = false;
    for (size_t j = 1; j < coeffs_.size(); ++j)
        if (coeffs_[j] != 0) { higher = true; break; }
    if (!higher) {
        coeffs_.resize(1);
        conductor_ = 1;
        return;
    }
    const FieldTables& ft = field_tables(conductor_);
    for (const auto& [d, cols] : ft.divisor_columns) {
        if (d == 1) continue;
        std::vector<mpq_class> x;
        if (solve_columns(cols, coeffs_, x)) {
            conductor_ = d;
            coeffs_ = std::move(x);
            return;
        }
    }
}

CyclotomicNumber CyclotomicNumber::embedded(long m) const {
    if (m == conductor_) return *this;
    if (m % conductor_ != 0)
        throw math_error("cyclotomic embedding target is not a conductor multiple");
    const FieldTables& ft = field_tables(m);
    long stride = m / conductor_;
    std::vector<mpq_class> v((coeffs_.size() - 1) * stride + 1);
    for (size_t j = 0; j < coeffs_.size(); ++j) v[j * stride] = coeffs_[j];
    return CyclotomicNumber(m, reduce_mod(std::move(v), ft.min_poly));
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    std::vector<mpq_class> v = coeffs_;
    for (auto& c : v) c = -c;
    return CyclotomicNumber(conductor_, std::move(v));
}

CyclotomicNumber CyclotomicNumber::operator+(const CyclotomicNumber& o) const {
    if (conductor_ == 1 && o.conductor_ == 1)
        return CyclotomicNumber(coeffs_[0] + o.coeffs_[0]);
    long m = std::lcm(conductor_, o.conductor_);
    CyclotomicNumber a = embedded(m), b = o.embedded(m);
    for (size_t j = 0; j < a.coeffs_.size(); ++j) a.coeffs_[j] += b.coeffs_[j];
    a.reduce_to_minimal_conductor();
    return a;
}

CyclotomicNumber CyclotomicNumber::operator-(const CyclotomicNumber& o) const {
    return *this + (-o);
}

CyclotomicNumber CyclotomicNumber::operator*(const CyclotomicNumber& o) const {
    if (conductor_ == 1 && o.conductor_ == 1)
        return CyclotomicNumber(coeffs_[0] * o.coeffs_[0]);
    if (is_zero() || o.is_zero()) return CyclotomicNumber(0);
    long m = std::lcm(conductor_, o.conductor_);
    CyclotomicNumber a = embedded(m), b = o.embedded(m);
    std::vector<mpq_class> prod(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            if (b.coeffs_[j] != 0) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    CyclotomicNumber result(m, reduce_mod(std::move(prod), field_tables(m).min_poly));
    result.reduce_to_minimal_conductor();
    return result;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
    if (is_zero()) throw math_error("division by zero");
    if (conductor_ == 1) return CyclotomicNumber(mpq_class(1) / coeffs_[0]);
    const FieldTables& ft = field_tables(conductor_);
    std::vector<std::vector<mpq_class>> cols;
    for (long j = 0; j < ft.deg; ++j) {
        std::vector<mpq_class> v(coeffs_.size() + j);
        for (size_t i = 0; i < coeffs_.size(); ++i) v[i + j] = coeffs_[i];
        cols.push_back(reduce_mod(std::move(v), ft.min_poly));
    }
    std::vector<mpq_class> target(ft.deg), x;
    target[0] = 1;
    if (!solve_columns(cols, target, x))
        throw math_error("cyclotomic inverse does not exist");
    CyclotomicNumber result(conductor_, std::move(x));
    result.reduce_to_minimal_conductor();
    return result;
}

CyclotomicNumber CyclotomicNumber::conjugate() const {
    if (conductor_ == 1) return *this;
    const FieldTables& ft = field_tables(conductor_);
    std::vector<mpq_class> v(conductor_);
    for (size_t j = 0; j < coeffs_.size(); ++j)
        v[j == 0 ? 0 : conductor_ - j] += coeffs_[j];
    // Conjugation is an automorphism of every cyclotomic subfield, so the
    // conductor cannot drop.
    return CyclotomicNumber(conductor_, reduce_mod(std::move(v), ft.min_poly));
}

bool CyclotomicNumber::operator<(const CyclotomicNumber& o) const {
    if (conductor_ != o.conductor_) return conductor_ < o.conductor_;
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        int c = cmp(coeffs_[j], o.coeffs_[j]);
        if (c != 0) return c < 0;
    }
    return false;
}

bool CyclotomicNumber::display_negative() const {
    for (const auto& c : coeffs_)
        if (c != 0) return c < 0;
    return false;
}

int CyclotomicNumber::term_count() const {
    int n = 0;
    for (const auto& c : coeffs_)
        if (c != 0) ++n;
    return n;
}

std::string CyclotomicNumber::to_string(bool parens) const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        const mpq_class& c = coeffs_[j];
        if (c == 0) continue;
        std::string term;
        mpq_class mag = c < 0 ? mpq_class(-c) : c;
        if (j == 0) {
            term = mag.get_str();
        } else {
            std::string base = "z" + std::to_string(conductor_);
            if (j > 1) base += "^" + std::to_string(j);
            term = (mag == 1) ? base : mag.get_str() + "*" + base;
        }
        if (out.empty())
            out = (c < 0 ? "-" : "") + term;
        else
            out += (c < 0 ? " - " : " + ") + term;
    }
    if (parens && term_count() > 1) return "(" + out + ")";
    return out;
}

} // namespace germforge
