#include "qeuler/rational.hpp"

#include <cctype>
#include <ostream>

#include "qeuler/errors.hpp"

namespace qeuler {

Rational::Rational(long n, long d) {
    if (d == 0) throw ValidationError("rational with zero denominator");
    v_ = mpq_class(static_cast<signed long>(n), static_cast<signed long>(d));
    v_.canonicalize();
}

Rational Rational::from_raw(mpq_class v) {
    Rational r;
    v.canonicalize();
    r.v_ = std::move(v);
    return r;
}

Rational Rational::from_string(const std::string& text) {
    // mpq_set_str accepts forms like "1/0" and whitespace; validate first.
    std::size_t i = 0;
    auto digits = [&](std::size_t from) {
        std::size_t j = from;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        return j;
    };
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    std::size_t num_end = digits(i);
    if (num_end == i) throw ParseError("expected integer in rational literal", i);
    i = num_end;
    if (i < text.size() && text[i] == '/') {
        std::size_t den_end = digits(i + 1);
        if (den_end == i + 1) throw ParseError("expected denominator digits", i + 1);
        i = den_end;
    }
    if (i != text.size()) throw ParseError("trailing characters in rational literal", i);

    mpq_class v;
    if (mpq_set_str(v.get_mpq_t(), text.c_str(), 10) != 0)
        throw ParseError("malformed rational literal", 0);
    if (v.get_den() == 0) throw ParseError("zero denominator in rational literal", 0);
    v.canonicalize();
    return from_raw(std::move(v));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ValidationError("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw ValidationError("inverse of zero");
    return Rational(1) / *this;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    Rational base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rational acc(1);
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

long Rational::to_long() const {
    if (!is_integer()) throw ValidationError("rational is not an integer: " + to_string());
    if (!v_.get_num().fits_slong_p())
        throw ValidationError("integer out of range: " + to_string());
    return v_.get_num().get_si();
}

Rational Rational::gcd(const Rational& a, const Rational& b) {
    if (a.is_zero()) return b.abs();
    if (b.is_zero()) return a.abs();
    mpz_class gn, dl;
    mpz_gcd(gn.get_mpz_t(), a.v_.get_num().get_mpz_t(), b.v_.get_num().get_mpz_t());
    mpz_lcm(dl.get_mpz_t(), a.v_.get_den().get_mpz_t(), b.v_.get_den().get_mpz_t());
    return from_raw(mpq_class(gn) / mpq_class(dl));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace qeuler
