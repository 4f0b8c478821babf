#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qeuler/algebra.hpp"
#include "qeuler/poly_q.hpp"
#include "qeuler/rational.hpp"

namespace qeuler {

// A user-supplied algebra presentation, read from a small text format:
//
//   vars: x y
//   weights: 2 4          (optional; positive even integers, one per variable)
//   ground: Q             (or Lambda; Lambda requires a variable named q)
//   generators:
//   x^2 - y
//   y^2
//   functional: auto      (or explicit whitespace-separated rational values,
//                          one per basis element; omit for a dry run)
//
// Lines starting with '#' and blank lines are ignored. Over Lambda the
// variable q is promoted into the coefficient ring: generators are parsed
// over all declared variables and q-powers move into Laurent coefficients.
struct Presentation {
    enum class FunctionalKind { none, automatic, values };

    std::vector<std::string> var_names;
    std::optional<std::vector<int>> weights;
    bool ground_lambda = false;
    std::vector<std::string> generator_text;
    FunctionalKind functional_kind = FunctionalKind::none;
    std::vector<Rational> functional_values;
};

Presentation parse_presentation_text(const std::string& text);
Presentation read_presentation_file(const std::string& path);

// Quotient algebra over Q from the parsed presentation (ground must be Q).
AlgebraPtr<Rational> build_presented_algebra_rational(const Presentation& p);

// Quotient algebra over Q(q) (ground must be Lambda): generators are parsed
// over the declared variables and the q variable is promoted into the
// coefficient field.
AlgebraPtr<RatFnQ> build_presented_algebra_laurent(const Presentation& p);

// Index of the first basis monomial that lies in the socle. Throws
// ValidationError when no basis monomial does.
template <typename K>
std::size_t automatic_functional_index(const Algebra<K>& alg) {
    const std::size_t n = alg.dim();
    auto soc = socle(alg);
    if (!soc.empty()) {
        Matrix<K> span_cols(n, soc.size());
        for (std::size_t j = 0; j < soc.size(); ++j)
            for (std::size_t i = 0; i < n; ++i) span_cols.at(i, j) = soc[j][i];
        for (std::size_t m = 0; m < n; ++m) {
            std::vector<K> e(n, Ground<K>::zero());
            e[m] = Ground<K>::one();
            if (span_cols.solve(e)) return m;
        }
    }
    throw ValidationError(
        "no basis monomial lies in the socle; supply explicit functional values");
}

// Deterministic functional choice: the dual of the first basis monomial that
// lies in the socle, normalized so the functional takes value 1 on it.
template <typename K>
std::vector<K> automatic_functional(const Algebra<K>& alg) {
    std::vector<K> f(alg.dim(), Ground<K>::zero());
    f[automatic_functional_index(alg)] = Ground<K>::one();
    return f;
}

// Reads one whitespace-separated rational per basis element (used for the
// --functional FILE override).
std::vector<Rational> read_functional_file(const std::string& path, std::size_t expected);

}  // namespace qeuler
