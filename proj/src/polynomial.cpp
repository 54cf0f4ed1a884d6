#include "germforge/polynomial.hpp"

#include "germforge/errors.hpp"

#include <algorithm>

namespace germforge {

std::vector<std::string> unify_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b) {
    if (a == b) return a;
    std::vector<std::string> merged = a;
    auto index_of = [&](const std::string& v) -> long {
        auto it = std::find(merged.begin(), merged.end(), v);
        return it == merged.end() ? -1 : it - merged.begin();
    };
    long last_shared = -1;
    for (const auto& v : b) {
        long idx = index_of(v);
        if (idx >= 0) {
            if (idx < last_shared)
                throw math_error("variable lists cannot be reconciled: '" + v +
                                 "' is ordered inconsistently");
            last_shared = idx;
        }
    }
    for (size_t k = 0; k < b.size(); ++k) {
        if (index_of(b[k]) >= 0) continue;
        long lo = 0, hi = (long)merged.size();
        for (size_t j = 0; j < k; ++j) {
            long idx = index_of(b[j]);
            if (idx >= 0) lo = std::max(lo, idx + 1);
        }
        for (size_t j = k + 1; j < b.size(); ++j) {
            long idx = index_of(b[j]);
            if (idx >= 0) hi = std::min(hi, idx);
        }
        if (lo > hi)
            throw math_error("variable lists cannot be reconciled: '" + b[k] +
                             "' is ordered inconsistently");
        merged.insert(merged.begin() + hi, b[k]);
    }
    return merged;
}

Polynomial Polynomial::constant(std::vector<std::string> variables, CyclotomicNumber c) {
    Polynomial p(std::move(variables));
    if (!c.is_zero())
        p.terms_.emplace(Monomial{std::vector<int>(p.variables_.size(), 0)}, std::move(c));
    return p;
}

Polynomial Polynomial::variable(const std::vector<std::string>& variables,
                                const std::string& name) {
    auto it = std::find(variables.begin(), variables.end(), name);
    if (it == variables.end())
        throw math_error("unknown variable '" + name + "'");
    std::vector<int> e(variables.size(), 0);
    e[it - variables.begin()] = 1;
    return from_exponents(variables, std::move(e), CyclotomicNumber(1));
}

Polynomial Polynomial::from_exponents(std::vector<std::string> variables,
                                      std::vector<int> exponents, CyclotomicNumber c) {
    if (exponents.size() != variables.size())
        throw math_error("exponent vector length does not match variable list");
    Polynomial p(std::move(variables));
    if (!c.is_zero()) p.terms_.emplace(Monomial{std::move(exponents)}, std::move(c));
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

long Polynomial::total_degree() const {
    long d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

long Polynomial::degree_in(const std::string& name) const {
    auto it = std::find(variables_.begin(), variables_.end(), name);
    if (it == variables_.end()) return 0;
    size_t idx = it - variables_.begin();
    long d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, (long)m.exponents[idx]);
    return d;
}

CyclotomicNumber Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? CyclotomicNumber(0) : it->second;
}

CyclotomicNumber Polynomial::constant_term() const {
    return coefficient(Monomial{std::vector<int>(variables_.size(), 0)});
}

Polynomial Polynomial::coefficient_of(const std::string& name, int power) const {
    auto it = std::find(variables_.begin(), variables_.end(), name);
    if (it == variables_.end())
        return power == 0 ? *this : zero(variables_);
    size_t idx = it - variables_.begin();
    Polynomial r(variables_);
    for (const auto& [m, c] : terms_) {
        if (m.exponents[idx] != power) continue;
        Monomial stripped = m;
        stripped.exponents[idx] = 0;
        r.terms_.emplace(std::move(stripped), c);
    }
    return r;
}

void Polynomial::add_term(const Monomial& m, const CyclotomicNumber& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(variables_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (variables_ != o.variables_) {
        auto merged = unify_variables(variables_, o.variables_);
        return with_variables(merged) + o.with_variables(merged);
    }
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (variables_ != o.variables_) {
        auto merged = unify_variables(variables_, o.variables_);
        return with_variables(merged) * o.with_variables(merged);
    }
    Polynomial r(variables_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma + mb, ca * cb);
    return r;
}

Polynomial Polynomial::operator*(const CyclotomicNumber& c) const {
    if (c.is_zero()) return zero(variables_);
    Polynomial r(variables_);
    for (const auto& [m, tc] : terms_) r.terms_.emplace(m, tc * c);
    return r;
}

Polynomial Polynomial::pow(long k) const {
    if (k < 0) throw math_error("negative polynomial power");
    Polynomial r = constant(variables_, CyclotomicNumber(1));
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1) r *= base;
        base = (k >>= 1) > 0 ? base * base : base;
    }
    return r;
}

Polynomial::TermMap::const_iterator Polynomial::grlex_leader() const {
    auto best = terms_.begin();
    for (auto it = std::next(best); it != terms_.end(); ++it) {
        long d = it->first.degree(), bd = best->first.degree();
        if (d > bd || (d == bd && it->first.exponents > best->first.exponents))
            best = it;
    }
    return best;
}

Polynomial Polynomial::exact_divide(const Polynomial& q) const {
    if (q.is_zero()) throw math_error("division by zero polynomial");
    if (variables_ != q.variables_) {
        auto merged = unify_variables(variables_, q.variables_);
        return with_variables(merged).exact_divide(q.with_variables(merged));
    }
    Polynomial p = *this, quot(variables_), rem(variables_);
    auto dlead = q.grlex_leader();
    const Monomial& dm = dlead->first;
    CyclotomicNumber dinv = dlead->second.inverse();
    while (!p.is_zero()) {
        auto pl = p.grlex_leader();
        if (dm.divides(pl->first)) {
            Monomial t = pl->first - dm;
            CyclotomicNumber c = pl->second * dinv;
            quot.add_term(t, c);
            for (const auto& [m, qc] : q.terms_) p.add_term(t + m, -(c * qc));
        } else {
            rem.add_term(pl->first, pl->second);
            p.terms_.erase(pl);
        }
    }
    if (!rem.is_zero())
        throw math_error("inexact polynomial division; remainder " + rem.to_string());
    return quot;
}

Polynomial Polynomial::with_variables(std::vector<std::string> variables) const {
    if (variables == variables_) return *this;
    std::vector<long> where(variables_.size(), -1);
    for (size_t i = 0; i < variables_.size(); ++i) {
        auto it = std::find(variables.begin(), variables.end(), variables_[i]);
        if (it != variables.end()) where[i] = it - variables.begin();
    }
    Polynomial r(std::move(variables));
    for (const auto& [m, c] : terms_) {
        Monomial t{std::vector<int>(r.variables_.size(), 0)};
        for (size_t i = 0; i < variables_.size(); ++i) {
            if (m.exponents[i] == 0) continue;
            if (where[i] < 0)
                throw math_error("variable '" + variables_[i] +
                                 "' is used but absent from the target list");
            t.exponents[where[i]] = m.exponents[i];
        }
        r.add_term(t, c);
    }
    return r;
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& bindings) const {
    std::vector<std::string> rvars;
    for (const auto& v : variables_) {
        auto it = bindings.find(v);
        rvars = unify_variables(rvars, it != bindings.end()
                                           ? it->second.variables()
                                           : std::vector<std::string>{v});
    }
    Polynomial result(rvars);
    for (const auto& [m, c] : terms_) {
        Polynomial acc = constant(rvars, c);
        for (size_t i = 0; i < variables_.size(); ++i) {
            if (m.exponents[i] == 0) continue;
            auto it = bindings.find(variables_[i]);
            Polynomial base = it != bindings.end()
                                  ? it->second.with_variables(rvars)
                                  : variable(rvars, variables_[i]);
            acc *= base.pow(m.exponents[i]);
        }
        result += acc;
    }
    return result;
}

Polynomial Polynomial::derivative(const std::string& name) const {
    auto it = std::find(variables_.begin(), variables_.end(), name);
    if (it == variables_.end()) return zero(variables_);
    size_t idx = it - variables_.begin();
    Polynomial r(variables_);
    for (const auto& [m, c] : terms_) {
        if (m.exponents[idx] == 0) continue;
        Monomial t = m;
        t.exponents[idx] -= 1;
        r.add_term(t, c * CyclotomicNumber((long)m.exponents[idx]));
    }
    return r;
}

CyclotomicNumber Polynomial::evaluate(const std::vector<CyclotomicNumber>& point) const {
    if (point.size() != variables_.size())
        throw math_error("evaluation point size does not match variable list");
    CyclotomicNumber sum(0);
    for (const auto& [m, c] : terms_) {
        CyclotomicNumber term = c;
        for (size_t i = 0; i < point.size(); ++i)
            for (int e = 0; e < m.exponents[i]; ++e) term *= point[i];
        sum += term;
    }
    return sum;
}

std::vector<std::pair<long, Polynomial>> Polynomial::homogeneous_parts(
    const std::vector<long>& weights) const {
    if (weights.size() != variables_.size())
        throw math_error("weight vector length does not match variable list");
    std::map<long, Polynomial> parts;
    for (const auto& [m, c] : terms_) {
        long d = 0;
        for (size_t i = 0; i < weights.size(); ++i) d += weights[i] * m.exponents[i];
        auto [it, inserted] = parts.emplace(d, Polynomial(variables_));
        it->second.add_term(m, c);
    }
    return {parts.begin(), parts.end()};
}

bool Polynomial::is_homogeneous(const std::vector<long>& weights, long degree) const {
    auto parts = homogeneous_parts(weights);
    return parts.empty() || (parts.size() == 1 && parts[0].first == degree);
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (variables_ == o.variables_) return terms_ == o.terms_;
    auto merged = unify_variables(variables_, o.variables_);
    return with_variables(merged).terms_ == o.with_variables(merged).terms_;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        bool neg = c.display_negative();
        CyclotomicNumber mag = neg ? -c : c;
        std::string mono;
        for (size_t i = 0; i < variables_.size(); ++i) {
            if (m.exponents[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += variables_[i];
            if (m.exponents[i] > 1) mono += "^" + std::to_string(m.exponents[i]);
        }
        std::string body;
        if (mono.empty())
            body = mag.to_string(true);
        else
            body = mag.is_one() ? mono : mag.to_string(true) + "*" + mono;
        if (out.empty())
            out = (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out;
}

} // namespace germforge
