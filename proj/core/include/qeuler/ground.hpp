#pragma once

#include <string>
#include <vector>

#include "qeuler/poly_q.hpp"
#include "qeuler/rational.hpp"

namespace qeuler {

// Traits for the two coefficient fields: Q (ground ring Q) and Q(q) (ground
// ring Lambda = Q[q, q^-1]). Computation happens in the field; "integral"
// and "unit" are relative to the ground ring.
template <typename K>
struct Ground;

template <>
struct Ground<Rational> {
    static constexpr const char* name = "Q";
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_rational(const Rational& r) { return r; }
    static bool is_zero(const Rational& x) { return x.is_zero(); }
    // Units of Q: all nonzero values.
    static bool is_ring_unit(const Rational& x) { return !x.is_zero(); }
    // Q is its own ground ring.
    static bool is_integral(const Rational&) { return true; }
    static std::string to_string(const Rational& x) { return x.to_string(); }
    static std::string unit_certificate(const Rational& x) { return x.to_string(); }

    // Scales v to the canonical primitive representative of its line: integer
    // coordinates with gcd 1 and positive first nonzero entry.
    static void normalize_primitive(std::vector<Rational>& v) {
        Rational g(0);
        for (const auto& x : v) g = Rational::gcd(g, x);
        if (g.is_zero()) return;
        for (const auto& x : v) {
            if (x.is_zero()) continue;
            if (x.sign() < 0) g = -g;
            break;
        }
        Rational inv = g.inverse();
        for (auto& x : v) x *= inv;
    }
};

template <>
struct Ground<RatFnQ> {
    static constexpr const char* name = "Lambda";
    static RatFnQ zero() { return RatFnQ(); }
    static RatFnQ one() { return RatFnQ(1); }
    static RatFnQ from_rational(const Rational& r) { return RatFnQ(r); }
    static bool is_zero(const RatFnQ& x) { return x.is_zero(); }
    // Units of Lambda: c * q^m with c a nonzero rational.
    static bool is_ring_unit(const RatFnQ& x) {
        return laurent_unit_test(x).kind == LaurentUnit::Kind::unit;
    }
    // Lambda consists of the Laurent polynomials.
    static bool is_integral(const RatFnQ& x) { return x.is_laurent(); }
    static std::string to_string(const RatFnQ& x) { return x.to_string(); }
    static std::string unit_certificate(const RatFnQ& x) {
        LaurentUnit u = laurent_unit_test(x);
        if (u.kind != LaurentUnit::Kind::unit) return x.to_string();
        std::string s = u.c.to_string();
        if (u.m != 0) s += " * q^" + std::to_string(u.m);
        return s;
    }

    // Scales v to the canonical primitive representative of its Q(q)-line:
    // polynomial coordinates with no common polynomial factor, rational
    // content 1, and positive leading coefficient in the first nonzero entry.
    static void normalize_primitive(std::vector<RatFnQ>& v) {
        PolyQ den_lcm(1);
        bool any = false;
        for (const auto& x : v) {
            if (x.is_zero()) continue;
            any = true;
            den_lcm = PolyQ::lcm(den_lcm, x.den());
        }
        if (!any) return;
        std::vector<PolyQ> nums;
        nums.reserve(v.size());
        PolyQ g;
        for (const auto& x : v) {
            PolyQ n = x.is_zero() ? PolyQ() : x.num() * den_lcm.divrem(x.den()).quot;
            g = PolyQ::gcd(g, n);
            nums.push_back(std::move(n));
        }
        Rational content(0);
        for (auto& n : nums) {
            if (!n.is_zero()) n = n.divrem(g).quot;
            content = Rational::gcd(content, n.content());
        }
        for (const auto& n : nums) {
            if (n.is_zero()) continue;
            if (n.leading_coeff().sign() < 0) content = -content;
            break;
        }
        Rational inv = content.inverse();
        for (std::size_t i = 0; i < v.size(); ++i) {
            PolyQ n = nums[i];
            n *= inv;
            v[i] = RatFnQ(std::move(n));
        }
    }
};

}  // namespace qeuler
