#pragma once

#include <vector>

#include "qeuler/frobenius.hpp"

namespace qeuler {

// Evaluation q -> r with r a nonzero rational: the ring map Lambda -> Q.
struct SpecializationMap {
    Rational r;
    explicit SpecializationMap(Rational value) : r(std::move(value)) {
        if (r.is_zero()) throw ValidationError("specialization point must be nonzero");
    }

    // Requires a Laurent value (a general rational function is not in the
    // domain of the ring map, even when its denominator misses r).
    Rational operator()(const RatFnQ& v) const {
        if (!v.is_laurent())
            throw ValidationError("non-Laurent coordinate encountered in specialization: " +
                                  v.to_string());
        return v.eval(r);
    }
};

inline std::vector<Rational> specialize_coords(const std::vector<RatFnQ>& coords,
                                               const SpecializationMap& theta) {
    std::vector<Rational> out;
    out.reserve(coords.size());
    for (const auto& c : coords) out.push_back(theta(c));
    return out;
}

// Transport of the algebra along q -> r: every structure constant is
// evaluated. Structure constants must be Laurent. Ring maps preserve the
// axioms, so the result is not re-validated.
inline AlgebraPtr<Rational> specialize_algebra(const Algebra<RatFnQ>& alg,
                                               const SpecializationMap& theta) {
    std::size_t n = alg.dim();
    std::vector<std::vector<Rational>> table;
    table.reserve(n * (n + 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) table.push_back(specialize_coords(alg.product(i, j), theta));
    return Algebra<Rational>::unchecked_from_parts(alg.print_vars(), alg.basis(),
                                                   std::move(table),
                                                   specialize_coords(alg.identity(), theta));
}

// Specialized Frobenius data: algebra and functional are evaluated at q = r
// and the Gram/dual/characteristic data is recomputed from scratch over Q.
inline FrobeniusData<Rational> specialize_data(const FrobeniusData<RatFnQ>& data,
                                               const SpecializationMap& theta) {
    return frobenius_structure(specialize_algebra(*data.algebra, theta),
                               specialize_coords(data.f, theta));
}

}  // namespace qeuler
