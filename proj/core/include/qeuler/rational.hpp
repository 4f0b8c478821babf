#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace qeuler {

// Arbitrary-precision rational number. Always kept in canonical form:
// gcd(numerator, denominator) = 1 and denominator > 0.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(long n, long d);

    // Accepts the same syntax canonical printing produces: "a" or "a/b",
    // optionally signed. Throws ParseError on malformed input.
    static Rational from_string(const std::string& text);

    const mpq_class& raw() const { return v_; }
    static Rational from_raw(mpq_class v);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational numerator() const { return from_raw(mpq_class(v_.get_num())); }
    Rational denominator() const { return from_raw(mpq_class(v_.get_den())); }

    // Requires an integer value that fits in long.
    long to_long() const;

    Rational operator-() const { return from_raw(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);  // throws on division by zero

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational inverse() const;  // throws on zero
    Rational abs() const { return from_raw(mpq_class(::abs(v_))); }
    Rational pow(long e) const;  // negative e allowed for nonzero values

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    // "a" for integers, "a/b" otherwise; '-' prefix for negatives.
    std::string to_string() const { return v_.get_str(); }

    // gcd(|a|,|b|)/lcm(den_a,den_b)-style content gcd: nonnegative, and both
    // a/g and b/g are integers when a, b are integers. Used for content scaling.
    static Rational gcd(const Rational& a, const Rational& b);

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace qeuler
