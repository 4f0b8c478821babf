#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qeuler/errors.hpp"
#include "qeuler/ground.hpp"

namespace qeuler {

// Ordered variable context shared by the polynomials over it. Weights, when
// declared, are the (even, positive) cohomological degrees of the variables.
class VarSet {
public:
    static std::shared_ptr<const VarSet> make(std::vector<std::string> names,
                                              std::optional<std::vector<int>> weights = {});

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_[i]; }
    bool has_weights() const { return weights_.has_value(); }
    const std::vector<int>& weights() const;
    std::optional<std::size_t> index_of(const std::string& name) const;

    friend bool operator==(const VarSet& a, const VarSet& b) {
        return a.names_ == b.names_ && a.weights_ == b.weights_;
    }

private:
    std::vector<std::string> names_;
    std::optional<std::vector<int>> weights_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

// True for names matching [A-Za-z_][A-Za-z0-9_]*.
bool is_identifier(const std::string& s);

using Monomial = std::vector<int>;

// Descending lexicographic order on exponent tuples: the storage and
// printing order of polynomial terms.
struct LexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

inline Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline bool monomial_divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline int monomial_total_degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

// Sparse multivariate polynomial over the coefficient field K, with an
// attached variable context. Terms are stored (and printed) in descending
// lexicographic exponent order; no zero coefficients are stored.
template <typename K>
class MPoly {
public:
    using TermMap = std::map<Monomial, K, LexDescending>;

    MPoly() = default;
    explicit MPoly(VarSetPtr vars) : vars_(std::move(vars)) { require_vars(); }

    static MPoly zero(VarSetPtr vars) { return MPoly(std::move(vars)); }

    static MPoly constant(VarSetPtr vars, K value) {
        MPoly p(std::move(vars));
        if (!Ground<K>::is_zero(value))
            p.terms_.emplace(Monomial(p.vars_->size(), 0), std::move(value));
        return p;
    }

    static MPoly variable(VarSetPtr vars, std::size_t index) {
        MPoly p(std::move(vars));
        if (index >= p.vars_->size()) throw ValidationError("variable index out of range");
        Monomial m(p.vars_->size(), 0);
        m[index] = 1;
        p.terms_.emplace(std::move(m), Ground<K>::one());
        return p;
    }

    static MPoly monomial_term(VarSetPtr vars, Monomial m, K coeff) {
        MPoly p(std::move(vars));
        if (m.size() != p.vars_->size()) throw ValidationError("monomial arity mismatch");
        for (int e : m)
            if (e < 0) throw ValidationError("negative exponent in monomial");
        if (!Ground<K>::is_zero(coeff)) p.terms_.emplace(std::move(m), std::move(coeff));
        return p;
    }

    static MPoly from_terms(VarSetPtr vars, TermMap terms) {
        MPoly p(std::move(vars));
        for (auto& [m, c] : terms) {
            if (m.size() != p.vars_->size()) throw ValidationError("monomial arity mismatch");
            if (!Ground<K>::is_zero(c)) p.terms_.emplace(m, c);
        }
        return p;
    }

    const VarSetPtr& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && monomial_total_degree(terms_.begin()->first) == 0);
    }

    K constant_value() const {
        if (terms_.empty()) return Ground<K>::zero();
        if (!is_constant()) throw ValidationError("polynomial is not constant");
        return terms_.begin()->second;
    }

    K coeff_of(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Ground<K>::zero() : it->second;
    }

    int total_degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, monomial_total_degree(m));
        return d;
    }

    MPoly operator-() const {
        MPoly r(*this);
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    MPoly& operator+=(const MPoly& o) {
        require_compatible(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    MPoly& operator-=(const MPoly& o) {
        require_compatible(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        a.require_compatible(b);
        MPoly r(a.vars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(monomial_mul(ma, mb), ca * cb);
        return r;
    }

    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    MPoly& operator*=(const K& s) {
        if (Ground<K>::is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c = c * s;
        return *this;
    }

    friend MPoly operator*(MPoly a, const K& s) { return a *= s; }
    friend MPoly operator*(const K& s, MPoly a) { return a *= s; }

    MPoly pow(int e) const {
        if (e < 0) throw ValidationError("negative polynomial power");
        MPoly acc = constant(vars_, Ground<K>::one());
        MPoly base(*this);
        while (e) {
            if (e & 1) acc *= base;
            if (e >>= 1) base *= base;
        }
        return acc;
    }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        if (a.vars_ != b.vars_ && !(a.vars_ && b.vars_ && *a.vars_ == *b.vars_)) return false;
        return a.terms_ == b.terms_;
    }

    // Partial derivative with respect to the variable at `index`.
    MPoly diff(std::size_t index) const {
        if (index >= vars_->size()) throw ValidationError("variable index out of range");
        MPoly r(vars_);
        for (const auto& [m, c] : terms_) {
            if (m[index] == 0) continue;
            Monomial d(m);
            K coeff = c * Ground<K>::from_rational(Rational(d[index]));
            --d[index];
            r.add_term(std::move(d), std::move(coeff));
        }
        return r;
    }

    // Weighted degree of one exponent tuple; requires declared weights.
    int weighted_degree_of(const Monomial& m) const {
        const auto& w = vars_->weights();
        int d = 0;
        for (std::size_t i = 0; i < m.size(); ++i) d += w[i] * m[i];
        return d;
    }

    // Maximum weighted degree over the terms (-1 for the zero polynomial).
    int weighted_degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, weighted_degree_of(m));
        return d;
    }

    bool is_weighted_homogeneous(int* degree = nullptr) const {
        int d = -1;
        for (const auto& [m, c] : terms_) {
            int t = weighted_degree_of(m);
            if (d >= 0 && t != d) return false;
            d = t;
        }
        if (degree) *degree = d;
        return true;
    }

    // Substitutes images[i] for variable i; images live over `target`.
    MPoly substitute(const VarSetPtr& target, const std::vector<MPoly>& images) const {
        if (images.size() != vars_->size())
            throw ValidationError("substitution image count mismatch");
        for (const auto& im : images)
            if (!(im.vars_ == target || *im.vars_ == *target))
                throw ValidationError("substitution image over wrong variable set");
        // Memoized variable powers keep repeated exponents cheap.
        std::vector<std::vector<MPoly>> powers(vars_->size());
        auto power = [&](std::size_t i, int e) -> const MPoly& {
            auto& cache = powers[i];
            if (cache.empty()) cache.push_back(constant(target, Ground<K>::one()));
            while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
            return cache[static_cast<std::size_t>(e)];
        };
        MPoly out(target);
        for (const auto& [m, c] : terms_) {
            MPoly term = constant(target, c);
            for (std::size_t i = 0; i < m.size(); ++i)
                if (m[i] > 0) term *= power(i, m[i]);
            out += term;
        }
        return out;
    }

    // Applies fn to every coefficient, producing a polynomial over K2.
    template <typename K2, typename Fn>
    MPoly<K2> map_coeffs(Fn&& fn) const {
        typename MPoly<K2>::TermMap out;
        for (const auto& [m, c] : terms_) {
            K2 v = fn(c);
            if (!Ground<K2>::is_zero(v)) out.emplace(m, std::move(v));
        }
        return MPoly<K2>::from_terms(vars_, std::move(out));
    }

    // Canonical text form: terms in descending lexicographic exponent order,
    // "a/b" or "a" coefficients, explicit "*", "^" only for exponents > 1.
    // Over Q(q) non-constant coefficients print parenthesized (diagnostics
    // only; such strings are not inside the input grammar).
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            std::string coeff_str;
            bool negative = false;
            if constexpr (std::is_same_v<K, Rational>) {
                negative = c.sign() < 0;
                coeff_str = c.abs().to_string();
            } else {
                if (c.is_constant()) {
                    Rational r = c.constant_value();
                    negative = r.sign() < 0;
                    coeff_str = r.abs().to_string();
                } else {
                    coeff_str = "(" + Ground<K>::to_string(c) + ")";
                }
            }
            out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
            bool coeff_is_one = coeff_str == "1";
            bool wrote = false;
            if (!coeff_is_one || monomial_total_degree(m) == 0) {
                out += coeff_str;
                wrote = true;
            }
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                if (wrote) out += "*";
                out += vars_->name(i);
                if (m[i] > 1) out += "^" + std::to_string(m[i]);
                wrote = true;
            }
        }
        return out;
    }

    // Divides by the content so coefficients are integral over the ground
    // ring, collectively primitive, with positive leading sign.
    void normalize_primitive() {
        std::vector<K> coeffs;
        coeffs.reserve(terms_.size());
        for (const auto& [m, c] : terms_) coeffs.push_back(c);
        Ground<K>::normalize_primitive(coeffs);
        std::size_t i = 0;
        for (auto& [m, c] : terms_) c = coeffs[i++];
    }

private:
    void require_vars() const {
        if (!vars_) throw ValidationError("polynomial without variable context");
    }

    void require_compatible(const MPoly& o) const {
        if (vars_ == o.vars_) return;
        if (vars_ && o.vars_ && *vars_ == *o.vars_) return;
        throw ValidationError("polynomial variable sets differ");
    }

    void add_term(Monomial m, K c) {
        if (Ground<K>::is_zero(c)) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(std::move(m), std::move(c));
        } else {
            it->second += c;
            if (Ground<K>::is_zero(it->second)) terms_.erase(it);
        }
    }

    VarSetPtr vars_;
    TermMap terms_;
};

// Moves the variable named q_name (exponents become q-powers in the
// coefficients) out of the variable set. The result is a polynomial over
// Q(q) in the remaining variables.
MPoly<RatFnQ> promote_q(const MPoly<Rational>& p, const std::string& q_name = "q");

// Inverse of promote_q: re-expands q-polynomial coefficients as powers of a
// trailing variable q_name. Fails unless every coefficient is a polynomial
// in q (a Laurent denominator q^m cannot be represented with nonnegative
// exponents, and a general denominator is not in Lambda at all).
MPoly<Rational> demote_q(const MPoly<RatFnQ>& p, const std::string& q_name = "q",
                         std::optional<std::vector<int>> weights_with_q = {});

}  // namespace qeuler
