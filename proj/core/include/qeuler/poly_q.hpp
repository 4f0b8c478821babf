#pragma once

#include <string>
#include <vector>

#include "qeuler/rational.hpp"

namespace qeuler {

struct PolyQDivRem;

// Dense univariate polynomial in q over Rational. Invariant: no trailing
// zero coefficients (the zero polynomial has an empty coefficient vector).
class PolyQ {
public:
    PolyQ() = default;
    PolyQ(Rational constant);
    PolyQ(long constant) : PolyQ(Rational(constant)) {}
    static PolyQ monomial(Rational coeff, int exp);
    static PolyQ q() { return monomial(Rational(1), 1); }
    static PolyQ from_coeffs(std::vector<Rational> coeffs);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& leading_coeff() const;
    Rational coeff(int exp) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    // True iff exactly one nonzero coefficient; exp receives its exponent.
    bool is_monomial(int* exp = nullptr) const;
    // True iff this is c * q^m for the given m (in particular q^0 = constants).
    bool is_power_of_q() const;

    PolyQ operator-() const;
    PolyQ& operator+=(const PolyQ& o);
    PolyQ& operator-=(const PolyQ& o);
    friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
    friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
    friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
    PolyQ& operator*=(const PolyQ& o) { return *this = *this * o; }
    PolyQ& operator*=(const Rational& s);

    friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.c_ == b.c_; }

    // Euclidean division by a nonzero divisor: *this = q * d + r, deg r < deg d.
    PolyQDivRem divrem(const PolyQ& d) const;

    // Monic gcd (zero if both operands are zero).
    static PolyQ gcd(PolyQ a, PolyQ b);
    // Monic lcm.
    static PolyQ lcm(const PolyQ& a, const PolyQ& b);

    PolyQ monic() const;  // throws on zero
    // Rational gcd of the coefficients, sign-adjusted so content > 0.
    Rational content() const;

    Rational eval(const Rational& r) const;

    // Descending powers, e.g. "2*q^3 - 1/2*q + 5"; "0" for zero.
    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> c_;
};

struct PolyQDivRem {
    PolyQ quot, rem;
};

// Rational function in q: num/den in canonical form (den monic, gcd(num,den)
// = 1, and den = 1 when num = 0). Equality of canonical forms is value
// equality. This is the ground field for algebras over the Laurent ring.
class RatFnQ {
public:
    RatFnQ() = default;
    RatFnQ(Rational constant) : num_(constant) {}
    RatFnQ(long constant) : num_(Rational(constant)) {}
    RatFnQ(PolyQ num) : num_(std::move(num)) {}
    RatFnQ(PolyQ num, PolyQ den);  // canonicalizes; throws on zero den
    // q^m; negative m yields 1/q^{-m}.
    static RatFnQ q_power(int m);

    const PolyQ& num() const { return num_; }
    const PolyQ& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return den_.is_one() && num_.degree() <= 0; }
    Rational constant_value() const;  // requires is_constant()

    // Lies in the Laurent subring: denominator is a power of q.
    bool is_laurent() const { return den_.is_power_of_q(); }
    // Laurent terms (exponent, coefficient), ascending exponent. Requires
    // is_laurent(); exponents may be negative.
    std::vector<std::pair<int, Rational>> laurent_terms() const;

    RatFnQ operator-() const;
    RatFnQ& operator+=(const RatFnQ& o) { return *this = *this + o; }
    RatFnQ& operator-=(const RatFnQ& o) { return *this = *this - o; }
    RatFnQ& operator*=(const RatFnQ& o) { return *this = *this * o; }
    RatFnQ& operator/=(const RatFnQ& o) { return *this = *this / o; }
    friend RatFnQ operator+(const RatFnQ& a, const RatFnQ& b);
    friend RatFnQ operator-(const RatFnQ& a, const RatFnQ& b);
    friend RatFnQ operator*(const RatFnQ& a, const RatFnQ& b);
    friend RatFnQ operator/(const RatFnQ& a, const RatFnQ& b);  // throws on zero divisor

    RatFnQ inverse() const;  // throws on zero
    friend bool operator==(const RatFnQ& a, const RatFnQ& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    // Requires den(r) != 0.
    Rational eval(const Rational& r) const;

    // "num" when den = 1, "(num)/(den)" otherwise.
    std::string to_string() const;

private:
    void canonicalize();
    PolyQ num_;
    PolyQ den_ = PolyQ(1);
};

// Classification of a rational function as a unit of the Laurent ring.
struct LaurentUnit {
    enum class Kind { zero, unit, nonunit } kind;
    // For kind == unit: the value is c * q^m with c a nonzero rational.
    Rational c;
    int m = 0;
};

LaurentUnit laurent_unit_test(const RatFnQ& v);

}  // namespace qeuler
