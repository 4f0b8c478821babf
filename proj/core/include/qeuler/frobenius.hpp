#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qeuler/algebra.hpp"

namespace qeuler {

// A commutative algebra together with a Frobenius form: the linear
// functional f, its Gram matrix f(b_i b_j) (nondegenerate; over Lambda its
// determinant is additionally a Laurent unit), the dual basis, and the
// characteristic element omega = sum_i b_i * b_i^#.
template <typename K>
struct FrobeniusData {
    AlgebraPtr<K> algebra;
    std::vector<K> f;
    Matrix<K> gram;
    Matrix<K> gram_inv;
    std::vector<std::vector<K>> dual_basis;
    std::vector<K> omega;

    K f_of(const std::vector<K>& coords) const {
        K acc = Ground<K>::zero();
        for (std::size_t i = 0; i < coords.size(); ++i)
            if (!Ground<K>::is_zero(coords[i])) acc += coords[i] * f[i];
        return acc;
    }

    Element<K> omega_element() const { return {algebra, omega}; }
};

// Builds the Frobenius data for (algebra, f). Throws ValidationError when
// the form is degenerate; over Lambda also when the Gram determinant is not
// a Laurent unit (the extension condition). The identity f(omega) = dim is
// checked unconditionally.
template <typename K>
FrobeniusData<K> frobenius_structure(AlgebraPtr<K> algebra, std::vector<K> f) {
    const Algebra<K>& alg = *algebra;
    std::size_t n = alg.dim();
    if (f.size() != n) throw ValidationError("functional value count does not match dimension");

    FrobeniusData<K> data;
    data.algebra = std::move(algebra);
    data.f = std::move(f);

    data.gram = Matrix<K>(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            data.gram.at(i, j) = data.f_of(alg.product(i, j));
            data.gram.at(j, i) = data.gram.at(i, j);
        }

    K det = data.gram.determinant();
    if (Ground<K>::is_zero(det))
        throw ValidationError("Frobenius form is degenerate: Gram matrix is singular");
    if (!Ground<K>::is_ring_unit(det))
        throw ValidationError(
            "Frobenius form fails the extension condition over Lambda: Gram determinant " +
            Ground<K>::to_string(det) + " is not a Laurent unit");

    auto inv = data.gram.inverse();
    if (!inv) throw Error("Gram inversion failed despite nonzero determinant");
    data.gram_inv = std::move(*inv);

    data.dual_basis.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<K> dual(n, Ground<K>::zero());
        for (std::size_t i = 0; i < n; ++i) dual[i] = data.gram_inv.at(i, j);
        data.dual_basis[j] = std::move(dual);
    }

    data.omega.assign(n, Ground<K>::zero());
    for (std::size_t i = 0; i < n; ++i) {
        const std::vector<K>& dual = data.dual_basis[i];
        for (std::size_t j = 0; j < n; ++j) {
            if (Ground<K>::is_zero(dual[j])) continue;
            const std::vector<K>& cell = alg.product(i, j);
            for (std::size_t v = 0; v < n; ++v)
                if (!Ground<K>::is_zero(cell[v])) data.omega[v] += dual[j] * cell[v];
        }
    }

    K trace = data.f_of(data.omega);
    if (!(trace == Ground<K>::from_rational(Rational(static_cast<long>(n)))))
        throw Error("f(omega) != dim: Frobenius data is inconsistent (internal error)");
    return data;
}

// Coefficient matrix M of the coproduct, alpha(a) = sum_{u,v} M_{uv} b_u (x) b_v,
// computed from alpha(a) = sum_i (a b_i) (x) b_i^#.
template <typename K>
Matrix<K> coproduct(const FrobeniusData<K>& data, const std::vector<K>& a) {
    const Algebra<K>& alg = *data.algebra;
    std::size_t n = alg.dim();
    Matrix<K> m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<K> e(n, Ground<K>::zero());
        e[i] = Ground<K>::one();
        std::vector<K> left = alg.multiply(a, e);
        const std::vector<K>& right = data.dual_basis[i];
        for (std::size_t u = 0; u < n; ++u) {
            if (Ground<K>::is_zero(left[u])) continue;
            for (std::size_t v = 0; v < n; ++v)
                if (!Ground<K>::is_zero(right[v])) m.at(u, v) += left[u] * right[v];
        }
    }
    return m;
}

// Multiplication folded over a coproduct matrix: sum_{u,v} M_{uv} b_u b_v.
template <typename K>
std::vector<K> fold_product(const Algebra<K>& alg, const Matrix<K>& m) {
    std::size_t n = alg.dim();
    std::vector<K> out(n, Ground<K>::zero());
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
            if (Ground<K>::is_zero(m.at(u, v))) continue;
            const std::vector<K>& cell = alg.product(u, v);
            for (std::size_t w = 0; w < n; ++w)
                if (!Ground<K>::is_zero(cell[w])) out[w] += m.at(u, v) * cell[w];
        }
    return out;
}

// Frobenius data for the twisted form x -> f(u * x).
template <typename K>
FrobeniusData<K> twist(const FrobeniusData<K>& data, const std::vector<K>& u) {
    const Algebra<K>& alg = *data.algebra;
    std::size_t n = alg.dim();
    std::vector<K> fu(n, Ground<K>::zero());
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<K> e(n, Ground<K>::zero());
        e[i] = Ground<K>::one();
        fu[i] = data.f_of(alg.multiply(u, e));
    }
    return frobenius_structure(data.algebra, std::move(fu));
}

// Direct sum: block multiplication table with fresh labels u1.. / v1..,
// concatenated functionals, Frobenius data recomputed on the sum. Blocks of
// valid algebras stay valid, so the table is not re-validated.
template <typename K>
FrobeniusData<K> direct_sum(const FrobeniusData<K>& a, const FrobeniusData<K>& b) {
    std::size_t na = a.algebra->dim(), nb = b.algebra->dim();
    std::size_t n = na + nb;
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < na; ++i) labels.push_back("u" + std::to_string(i + 1));
    for (std::size_t i = 0; i < nb; ++i) labels.push_back("v" + std::to_string(i + 1));
    VarSetPtr vars = VarSet::make(labels);

    std::vector<Monomial> basis;
    basis.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Monomial m(n, 0);
        m[i] = 1;
        basis.push_back(std::move(m));
    }

    std::vector<std::vector<K>> table;
    table.reserve(n * (n + 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            std::vector<K> cell(n, Ground<K>::zero());
            if (i < na && j < na) {
                const std::vector<K>& c = a.algebra->product(i, j);
                for (std::size_t v = 0; v < na; ++v) cell[v] = c[v];
            } else if (i >= na && j >= na) {
                const std::vector<K>& c = b.algebra->product(i - na, j - na);
                for (std::size_t v = 0; v < nb; ++v) cell[na + v] = c[v];
            }
            table.push_back(std::move(cell));
        }

    std::vector<K> identity(n, Ground<K>::zero());
    for (std::size_t i = 0; i < na; ++i) identity[i] = a.algebra->identity()[i];
    for (std::size_t i = 0; i < nb; ++i) identity[na + i] = b.algebra->identity()[i];

    AlgebraPtr<K> sum = Algebra<K>::unchecked_from_parts(std::move(vars), std::move(basis),
                                                         std::move(table), std::move(identity));
    std::vector<K> f;
    f.reserve(n);
    for (const auto& x : a.f) f.push_back(x);
    for (const auto& x : b.f) f.push_back(x);
    return frobenius_structure(std::move(sum), std::move(f));
}

// Semisimplicity via the characteristic element: omega is a unit iff the
// algebra is semisimple (over Lambda: iff the Gram determinant of every
// specialization stays nonzero; the Laurent-unit test witnesses it).
template <typename K>
UnitResult<K> is_semisimple_via_omega(const FrobeniusData<K>& data) {
    return is_unit(*data.algebra, data.omega);
}

}  // namespace qeuler
