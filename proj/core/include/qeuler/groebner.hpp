#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "qeuler/mpoly.hpp"

namespace qeuler {

// Graded reverse lexicographic order on exponent tuples (the fixed monomial
// order of every Groebner computation here; storage order of MPoly terms is
// unrelated).
inline bool grevlex_less(const Monomial& a, const Monomial& b) {
    int da = monomial_total_degree(a), db = monomial_total_degree(b);
    if (da != db) return da < db;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

struct GrevlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(a, b); }
};

// Leading monomial under grevlex; polynomial must be nonzero.
template <typename K>
const Monomial& grevlex_lead(const MPoly<K>& p) {
    if (p.is_zero()) throw ValidationError("leading monomial of zero polynomial");
    const Monomial* best = nullptr;
    for (const auto& [m, c] : p.terms())
        if (!best || grevlex_less(*best, m)) best = &m;
    return *best;
}

template <typename K>
struct GroebnerBasis {
    VarSetPtr vars;
    // Reduced basis: monic, pairwise-indivisible leading monomials, every
    // tail term irreducible; sorted by ascending grevlex leading monomial.
    std::vector<MPoly<K>> gens;
};

// Remainder of multivariate division by gens: no term of the result is
// divisible by any leading monomial. Deterministic: the grevlex-largest
// reducible term is rewritten by the first basis element whose lead divides
// it, in basis order.
template <typename K>
MPoly<K> normal_form(const MPoly<K>& p, const GroebnerBasis<K>& gb) {
    std::vector<const Monomial*> leads;
    leads.reserve(gb.gens.size());
    for (const auto& g : gb.gens) leads.push_back(&grevlex_lead(g));

    MPoly<K> work(p);
    MPoly<K> remainder(p.vars());
    while (!work.is_zero()) {
        const Monomial& m = grevlex_lead(work);
        K c = work.coeff_of(m);
        bool reduced = false;
        for (std::size_t i = 0; i < gb.gens.size(); ++i) {
            if (!monomial_divides(*leads[i], m)) continue;
            Monomial shift(m.size());
            for (std::size_t v = 0; v < m.size(); ++v) shift[v] = m[v] - (*leads[i])[v];
            K factor = c / gb.gens[i].coeff_of(*leads[i]);
            work -= MPoly<K>::monomial_term(work.vars(), std::move(shift), std::move(factor)) *
                    gb.gens[i];
            reduced = true;
            break;
        }
        if (!reduced) {
            MPoly<K> t = MPoly<K>::monomial_term(work.vars(), m, c);
            remainder += t;
            work -= t;
        }
    }
    return remainder;
}

namespace detail {

template <typename K>
MPoly<K> s_polynomial(const MPoly<K>& f, const MPoly<K>& g) {
    const Monomial& lf = grevlex_lead(f);
    const Monomial& lg = grevlex_lead(g);
    Monomial shift_f(lf.size()), shift_g(lf.size());
    for (std::size_t i = 0; i < lf.size(); ++i) {
        int l = std::max(lf[i], lg[i]);
        shift_f[i] = l - lf[i];
        shift_g[i] = l - lg[i];
    }
    MPoly<K> a = MPoly<K>::monomial_term(f.vars(), std::move(shift_f),
                                         Ground<K>::one() / f.coeff_of(lf)) * f;
    MPoly<K> b = MPoly<K>::monomial_term(g.vars(), std::move(shift_g),
                                         Ground<K>::one() / g.coeff_of(lg)) * g;
    return a - b;
}

}  // namespace detail

// Buchberger's algorithm with normal pair selection (lowest lcm degree
// first) and the coprime-lead and chain elimination criteria. New basis
// elements are content-scaled to keep coefficients in the ground ring.
template <typename K>
GroebnerBasis<K> buchberger(const VarSetPtr& vars, const std::vector<MPoly<K>>& generators) {
    std::vector<MPoly<K>> basis;
    std::vector<Monomial> leads;
    for (const auto& g : generators) {
        if (g.is_zero()) continue;
        if (!(g.vars() == vars || *g.vars() == *vars))
            throw ValidationError("generator over wrong variable set");
        MPoly<K> p(g);
        p.normalize_primitive();
        basis.push_back(std::move(p));
        leads.push_back(grevlex_lead(basis.back()));
    }

    // Pair key: (lcm degree, lcm, i, j) makes the selection order total.
    struct PairKey {
        int deg;
        Monomial lcm;
        std::size_t i, j;
        bool operator<(const PairKey& o) const {
            if (deg != o.deg) return deg < o.deg;
            if (lcm != o.lcm) return grevlex_less(lcm, o.lcm);
            if (i != o.i) return i < o.i;
            return j < o.j;
        }
    };
    auto lcm_of = [](const Monomial& a, const Monomial& b) {
        Monomial l(a.size());
        for (std::size_t t = 0; t < a.size(); ++t) l[t] = std::max(a[t], b[t]);
        return l;
    };
    std::set<PairKey> queue;
    std::set<std::pair<std::size_t, std::size_t>> handled;
    auto push_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            Monomial l = lcm_of(leads[i], leads[j]);
            queue.insert({monomial_total_degree(l), std::move(l), i, j});
        }
    };
    for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

    GroebnerBasis<K> gb_view{vars, {}};
    while (!queue.empty()) {
        PairKey pk = *queue.begin();
        queue.erase(queue.begin());
        handled.insert({pk.i, pk.j});

        // Coprime leads: the s-polynomial reduces to zero.
        Monomial sum = monomial_mul(leads[pk.i], leads[pk.j]);
        if (sum == pk.lcm) continue;
        // Chain criterion: some third lead divides the lcm and both
        // associated pairs were already handled.
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == pk.i || k == pk.j) continue;
            if (!monomial_divides(leads[k], pk.lcm)) continue;
            auto key1 = std::minmax(pk.i, k);
            auto key2 = std::minmax(pk.j, k);
            if (handled.count({key1.first, key1.second}) &&
                handled.count({key2.first, key2.second}))
                skip = true;
        }
        if (skip) continue;

        gb_view.gens = basis;
        MPoly<K> rem = normal_form(detail::s_polynomial(basis[pk.i], basis[pk.j]), gb_view);
        if (rem.is_zero()) continue;
        rem.normalize_primitive();
        basis.push_back(std::move(rem));
        leads.push_back(grevlex_lead(basis.back()));
        push_pairs_for(basis.size() - 1);
    }

    // Minimalize: drop elements whose lead another surviving lead divides.
    std::vector<std::size_t> order(basis.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (leads[a] != leads[b]) return grevlex_less(leads[a], leads[b]);
        return a < b;
    });
    std::vector<MPoly<K>> minimal;
    std::vector<Monomial> minimal_leads;
    for (std::size_t idx : order) {
        bool divisible = false;
        for (const auto& l : minimal_leads)
            if (monomial_divides(l, leads[idx])) {
                divisible = true;
                break;
            }
        if (!divisible) {
            minimal.push_back(basis[idx]);
            minimal_leads.push_back(leads[idx]);
        }
    }

    // Inter-reduce tails and scale monic.
    GroebnerBasis<K> result{vars, {}};
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        GroebnerBasis<K> others{vars, {}};
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.gens.push_back(minimal[j]);
        MPoly<K> red = normal_form(minimal[i], others);
        K lc = red.coeff_of(grevlex_lead(red));
        red *= Ground<K>::one() / lc;
        result.gens.push_back(std::move(red));
    }
    std::sort(result.gens.begin(), result.gens.end(), [](const MPoly<K>& a, const MPoly<K>& b) {
        return grevlex_less(grevlex_lead(a), grevlex_lead(b));
    });
    return result;
}

// The monomials outside the leading-term ideal, sorted by total degree then
// descending lex. Throws if the quotient is not finite-dimensional (some
// variable has no pure power among the leading monomials).
template <typename K>
std::vector<Monomial> staircase_basis(const GroebnerBasis<K>& gb) {
    std::size_t n = gb.vars->size();
    std::vector<Monomial> leads;
    for (const auto& g : gb.gens) leads.push_back(grevlex_lead(g));

    std::vector<int> bound(n, -1);
    for (const auto& l : leads) {
        int var = -1;
        bool pure = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (l[i] == 0) continue;
            if (var >= 0) {
                pure = false;
                break;
            }
            var = static_cast<int>(i);
        }
        if (!pure || var < 0) continue;
        if (bound[var] < 0 || l[var] < bound[var]) bound[var] = l[var];
    }
    // The unit ideal (lead 1 present) yields the zero ring: empty staircase.
    for (const auto& l : leads)
        if (monomial_total_degree(l) == 0) return {};
    for (std::size_t i = 0; i < n; ++i)
        if (bound[i] < 0)
            throw ValidationError("quotient is infinite-dimensional: no pure power of " +
                                  gb.vars->name(i) + " among leading monomials");

    std::vector<Monomial> out;
    Monomial current(n, 0);
    auto enumerate = [&](auto&& self, std::size_t var) -> void {
        if (var == n) {
            for (const auto& l : leads)
                if (monomial_divides(l, current)) return;
            out.push_back(current);
            return;
        }
        for (int e = 0; e < bound[var]; ++e) {
            current[var] = e;
            self(self, var + 1);
        }
        current[var] = 0;
    };
    enumerate(enumerate, 0);

    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        int da = monomial_total_degree(a), db = monomial_total_degree(b);
        if (da != db) return da < db;
        return LexDescending{}(a, b);
    });
    return out;
}

}  // namespace qeuler
