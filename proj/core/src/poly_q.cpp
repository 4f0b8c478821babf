#include "qeuler/poly_q.hpp"

#include <utility>

#include "qeuler/errors.hpp"

namespace qeuler {

PolyQ::PolyQ(Rational constant) {
    if (!constant.is_zero()) c_.push_back(std::move(constant));
}

PolyQ PolyQ::monomial(Rational coeff, int exp) {
    if (exp < 0) throw ValidationError("polynomial monomial with negative exponent");
    PolyQ p;
    if (coeff.is_zero()) return p;
    p.c_.assign(static_cast<std::size_t>(exp) + 1, Rational(0));
    p.c_.back() = std::move(coeff);
    return p;
}

PolyQ PolyQ::from_coeffs(std::vector<Rational> coeffs) {
    PolyQ p;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

void PolyQ::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& PolyQ::leading_coeff() const {
    if (c_.empty()) throw ValidationError("leading coefficient of zero polynomial");
    return c_.back();
}

Rational PolyQ::coeff(int exp) const {
    if (exp < 0 || static_cast<std::size_t>(exp) >= c_.size()) return Rational(0);
    return c_[static_cast<std::size_t>(exp)];
}

bool PolyQ::is_monomial(int* exp) const {
    int found = -1;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (found >= 0) return false;
        found = static_cast<int>(i);
    }
    if (found < 0) return false;
    if (exp) *exp = found;
    return true;
}

bool PolyQ::is_power_of_q() const {
    int e;
    return is_monomial(&e) && c_.back().is_one();
}

PolyQ PolyQ::operator-() const {
    PolyQ r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

PolyQ& PolyQ::operator+=(const PolyQ& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() || b.is_zero()) return PolyQ();
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return PolyQ::from_coeffs(std::move(out));
}

PolyQ& PolyQ::operator*=(const Rational& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
}

PolyQDivRem PolyQ::divrem(const PolyQ& d) const {
    if (d.is_zero()) throw ValidationError("polynomial division by zero");
    PolyQ rem(*this);
    PolyQ quot;
    int dd = d.degree();
    const Rational& lc = d.leading_coeff();
    while (!rem.is_zero() && rem.degree() >= dd) {
        int shift = rem.degree() - dd;
        Rational f = rem.leading_coeff() / lc;
        quot += monomial(f, shift);
        rem -= monomial(f, shift) * d;
    }
    return {std::move(quot), std::move(rem)};
}

PolyQ PolyQ::gcd(PolyQ a, PolyQ b) {
    // Remainders are made monic each step to keep coefficients small.
    while (!b.is_zero()) {
        PolyQ r = a.divrem(b).rem;
        a = std::move(b);
        b = r.is_zero() ? PolyQ() : r.monic();
    }
    return a.is_zero() ? a : a.monic();
}

PolyQ PolyQ::lcm(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() || b.is_zero()) return PolyQ();
    PolyQ g = gcd(a, b);
    return (a * b).divrem(g).quot.monic();
}

PolyQ PolyQ::monic() const {
    if (is_zero()) throw ValidationError("monic form of zero polynomial");
    PolyQ r(*this);
    Rational inv = leading_coeff().inverse();
    r *= inv;
    return r;
}

Rational PolyQ::content() const {
    Rational g(0);
    for (const auto& x : c_) g = Rational::gcd(g, x);
    return g;
}

Rational PolyQ::eval(const Rational& r) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * r + c_[i];
    return acc;
}

std::string PolyQ::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Rational& c = c_[i];
        if (c.is_zero()) continue;
        Rational a = c.abs();
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        bool unit_coeff = a.is_one() && i > 0;
        if (!unit_coeff) out += a.to_string();
        if (i > 0) {
            if (!unit_coeff) out += "*";
            out += "q";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

RatFnQ::RatFnQ(PolyQ num, PolyQ den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw ValidationError("rational function with zero denominator");
    canonicalize();
}

RatFnQ RatFnQ::q_power(int m) {
    if (m >= 0) return RatFnQ(PolyQ::monomial(Rational(1), m));
    return RatFnQ(PolyQ(1), PolyQ::monomial(Rational(1), -m));
}

void RatFnQ::canonicalize() {
    if (num_.is_zero()) {
        den_ = PolyQ(1);
        return;
    }
    PolyQ g = PolyQ::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divrem(g).quot;
        den_ = den_.divrem(g).quot;
    }
    Rational lc = den_.leading_coeff();
    if (!lc.is_one()) {
        Rational inv = lc.inverse();
        num_ *= inv;
        den_ *= inv;
    }
}

Rational RatFnQ::constant_value() const {
    if (!is_constant()) throw ValidationError("rational function is not constant: " + to_string());
    return num_.coeff(0);
}

std::vector<std::pair<int, Rational>> RatFnQ::laurent_terms() const {
    if (!is_laurent()) throw ValidationError("not a Laurent polynomial: " + to_string());
    int shift = den_.degree();
    std::vector<std::pair<int, Rational>> out;
    for (int i = 0; i <= num_.degree(); ++i) {
        Rational c = num_.coeff(i);
        if (!c.is_zero()) out.emplace_back(i - shift, std::move(c));
    }
    return out;
}

RatFnQ RatFnQ::operator-() const {
    RatFnQ r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFnQ operator+(const RatFnQ& a, const RatFnQ& b) {
    return RatFnQ(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFnQ operator-(const RatFnQ& a, const RatFnQ& b) {
    return RatFnQ(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFnQ operator*(const RatFnQ& a, const RatFnQ& b) {
    return RatFnQ(a.num_ * b.num_, a.den_ * b.den_);
}

RatFnQ operator/(const RatFnQ& a, const RatFnQ& b) {
    if (b.is_zero()) throw ValidationError("rational function division by zero");
    return RatFnQ(a.num_ * b.den_, a.den_ * b.num_);
}

RatFnQ RatFnQ::inverse() const {
    return RatFnQ(1) / *this;
}

Rational RatFnQ::eval(const Rational& r) const {
    Rational d = den_.eval(r);
    if (d.is_zero())
        throw ValidationError("denominator vanishes at q = " + r.to_string() + ": " + to_string());
    return num_.eval(r) / d;
}

std::string RatFnQ::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

LaurentUnit laurent_unit_test(const RatFnQ& v) {
    if (v.is_zero()) return {LaurentUnit::Kind::zero, Rational(0), 0};
    int num_exp;
    if (!v.num().is_monomial(&num_exp) || !v.den().is_power_of_q())
        return {LaurentUnit::Kind::nonunit, Rational(0), 0};
    return {LaurentUnit::Kind::unit, v.num().leading_coeff(), num_exp - v.den().degree()};
}

}  // namespace qeuler
