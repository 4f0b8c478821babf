#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qeuler/groebner.hpp"
#include "qeuler/linalg.hpp"
#include "qeuler/mpoly.hpp"

namespace qeuler {

// Finite-dimensional commutative unital algebra over the field K, presented
// by a basis and a cached multiplication table. Instances are immutable;
// construct through the static factories.
template <typename K>
class Algebra {
public:
    // Quotient K[vars]/(generators). Computes a reduced Groebner basis; the
    // staircase monomials become the algebra basis. Throws if the quotient
    // is the zero ring or infinite-dimensional.
    static std::shared_ptr<const Algebra> quotient(const VarSetPtr& vars,
                                                   const std::vector<MPoly<K>>& generators) {
        GroebnerBasis<K> gb = buchberger(vars, generators);
        std::vector<Monomial> basis = staircase_basis(gb);
        if (basis.empty())
            throw ValidationError("quotient is the zero ring: ideal contains a unit");

        auto alg = std::shared_ptr<Algebra>(new Algebra());
        alg->vars_ = vars;
        alg->basis_ = std::move(basis);
        alg->gb_ = std::move(gb);
        alg->build_index();

        std::size_t n = alg->basis_.size();
        alg->table_.resize(n * (n + 1) / 2);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                MPoly<K> prod = MPoly<K>::monomial_term(
                    vars, monomial_mul(alg->basis_[i], alg->basis_[j]), Ground<K>::one());
                alg->table_[alg->tri(i, j)] = alg->coords_of_reduced(normal_form(prod, *alg->gb_));
            }
        }

        auto one = alg->index_.find(Monomial(vars->size(), 0));
        if (one == alg->index_.end())
            throw ValidationError("staircase does not contain the unit monomial");
        alg->identity_.assign(n, Ground<K>::zero());
        alg->identity_[one->second] = Ground<K>::one();
        return alg;
    }

    // Algebra from labelled basis and full structure-constant table:
    // table[i][j] holds the coordinates of b_i * b_j. Validates dimension
    // cap, commutativity, and associativity, and solves for the identity.
    static std::shared_ptr<const Algebra> from_table(
        const std::vector<std::string>& labels,
        const std::vector<std::vector<std::vector<K>>>& table, std::size_t dim_cap = 64) {
        std::size_t n = labels.size();
        if (n == 0) throw ValidationError("empty basis");
        if (n > dim_cap)
            throw ValidationError("dimension " + std::to_string(n) +
                                  " exceeds structure-constant validation cap " +
                                  std::to_string(dim_cap));
        VarSetPtr vars = VarSet::make(labels);
        if (table.size() != n) throw ValidationError("structure table has wrong dimension");
        for (const auto& row : table) {
            if (row.size() != n) throw ValidationError("structure table has wrong dimension");
            for (const auto& cell : row)
                if (cell.size() != n) throw ValidationError("structure table has wrong dimension");
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (table[i][j] != table[j][i])
                    throw ValidationError("structure table is not commutative at (" + labels[i] +
                                          ", " + labels[j] + ")");

        auto alg = std::shared_ptr<Algebra>(new Algebra());
        alg->vars_ = vars;
        alg->basis_.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            Monomial m(n, 0);
            m[i] = 1;
            alg->basis_.push_back(std::move(m));
        }
        alg->build_index();
        alg->table_.resize(n * (n + 1) / 2);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) alg->table_[alg->tri(i, j)] = table[i][j];

        alg->check_associativity(labels);
        alg->solve_identity(labels);
        return alg;
    }

    // Internal factory: parts must already satisfy the algebra axioms (used
    // for specialization and other structure-preserving transports).
    static std::shared_ptr<const Algebra> unchecked_from_parts(VarSetPtr vars,
                                                               std::vector<Monomial> basis,
                                                               std::vector<std::vector<K>> table,
                                                               std::vector<K> identity) {
        std::size_t n = basis.size();
        if (table.size() != n * (n + 1) / 2 || identity.size() != n)
            throw ValidationError("algebra parts have inconsistent sizes");
        for (const auto& cell : table)
            if (cell.size() != n) throw ValidationError("algebra parts have inconsistent sizes");
        auto alg = std::shared_ptr<Algebra>(new Algebra());
        alg->vars_ = std::move(vars);
        alg->basis_ = std::move(basis);
        alg->table_ = std::move(table);
        alg->identity_ = std::move(identity);
        alg->build_index();
        return alg;
    }

    std::size_t dim() const { return basis_.size(); }
    const VarSetPtr& print_vars() const { return vars_; }
    const std::vector<Monomial>& basis() const { return basis_; }
    const std::vector<K>& identity() const { return identity_; }
    const std::optional<GroebnerBasis<K>>& groebner() const { return gb_; }

    // Raw triangular multiplication table (row-major over i <= j).
    const std::vector<std::vector<K>>& raw_table() const { return table_; }

    std::string basis_name(std::size_t i) const {
        return MPoly<K>::monomial_term(vars_, basis_[i], Ground<K>::one()).to_string();
    }

    // Coordinates of b_i * b_j.
    const std::vector<K>& product(std::size_t i, std::size_t j) const {
        return table_[tri(std::min(i, j), std::max(i, j))];
    }

    std::vector<K> multiply(const std::vector<K>& a, const std::vector<K>& b) const {
        require_coords(a);
        require_coords(b);
        std::vector<K> out(dim(), Ground<K>::zero());
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (Ground<K>::is_zero(a[i])) continue;
            for (std::size_t j = 0; j < b.size(); ++j) {
                if (Ground<K>::is_zero(b[j])) continue;
                K f = a[i] * b[j];
                const std::vector<K>& cell = product(i, j);
                for (std::size_t v = 0; v < out.size(); ++v)
                    if (!Ground<K>::is_zero(cell[v])) out[v] += f * cell[v];
            }
        }
        return out;
    }

    // Matrix of multiplication by a in the algebra basis (column j holds
    // the coordinates of a * b_j).
    Matrix<K> regular_rep(const std::vector<K>& a) const {
        require_coords(a);
        std::size_t n = dim();
        Matrix<K> m(n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) {
                if (Ground<K>::is_zero(a[i])) continue;
                const std::vector<K>& cell = product(i, j);
                for (std::size_t v = 0; v < n; ++v)
                    if (!Ground<K>::is_zero(cell[v])) m.at(v, j) += a[i] * cell[v];
            }
        return m;
    }

    // Coordinates of the residue class of p (requires a quotient
    // presentation; reduces p first).
    std::vector<K> coords_of_poly(const MPoly<K>& p) const {
        if (!gb_) throw ValidationError("algebra has no polynomial presentation");
        return coords_of_reduced(normal_form(p, *gb_));
    }

    MPoly<K> to_poly(const std::vector<K>& coords) const {
        require_coords(coords);
        MPoly<K> out(vars_);
        for (std::size_t i = 0; i < coords.size(); ++i)
            out += MPoly<K>::monomial_term(vars_, basis_[i], coords[i]);
        return out;
    }

    std::string coords_to_string(const std::vector<K>& coords) const {
        return to_poly(coords).to_string();
    }

    // Revalidates associativity of the cached table; throws ValidationError
    // naming a witness triple. Cheap only at small dimensions.
    void validate_associativity() const {
        std::vector<std::string> labels;
        labels.reserve(dim());
        for (std::size_t i = 0; i < dim(); ++i) labels.push_back(basis_name(i));
        check_associativity(labels);
    }

    // Trace of the regular representation of each basis element.
    std::vector<K> trace_vector() const {
        std::size_t n = dim();
        std::vector<K> t(n, Ground<K>::zero());
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v) t[u] += product(u, v)[v];
        return t;
    }

private:
    Algebra() = default;

    std::size_t tri(std::size_t i, std::size_t j) const {
        return i * dim() - i * (i - 1) / 2 + (j - i);
    }

    void build_index() {
        for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
    }

    void require_coords(const std::vector<K>& v) const {
        if (v.size() != dim()) throw ValidationError("coordinate vector has wrong length");
    }

    std::vector<K> coords_of_reduced(const MPoly<K>& nf) const {
        std::vector<K> out(dim(), Ground<K>::zero());
        for (const auto& [m, c] : nf.terms()) {
            auto it = index_.find(m);
            if (it == index_.end())
                throw Error("normal form contains a non-basis monomial (internal error)");
            out[it->second] = c;
        }
        return out;
    }

    void check_associativity(const std::vector<std::string>& labels) const {
        // With a commutative table, associativity is equivalent to all
        // left-multiplication matrices commuting pairwise.
        std::size_t n = dim();
        std::vector<Matrix<K>> reps;
        reps.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<K> e(n, Ground<K>::zero());
            e[i] = Ground<K>::one();
            reps.push_back(regular_rep(e));
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = i + 1; k < n; ++k) {
                Matrix<K> a = reps[i] * reps[k];
                Matrix<K> b = reps[k] * reps[i];
                if (!(a == b)) {
                    for (std::size_t j = 0; j < n; ++j)
                        for (std::size_t v = 0; v < n; ++v)
                            if (!(a.at(v, j) == b.at(v, j)))
                                throw ValidationError(
                                    "structure table is not associative: (" + labels[i] + "*" +
                                    labels[j] + ")*" + labels[k] + " != " + labels[i] + "*(" +
                                    labels[j] + "*" + labels[k] + ")");
                }
            }
    }

    void solve_identity(const std::vector<std::string>& labels) {
        // e is the identity iff sum_i e_i c_{ij}^v = delta_{jv} for all j, v.
        std::size_t n = dim();
        Matrix<K> a(n * n, n);
        std::vector<K> rhs(n * n, Ground<K>::zero());
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t v = 0; v < n; ++v) {
                for (std::size_t i = 0; i < n; ++i) a.at(j * n + v, i) = product(i, j)[v];
                if (j == v) rhs[j * n + v] = Ground<K>::one();
            }
        auto e = a.solve(rhs);
        if (!e)
            throw ValidationError("structure table has no identity element (basis " + labels[0] +
                                  "...)");
        identity_ = std::move(*e);
    }

    VarSetPtr vars_;
    std::vector<Monomial> basis_;
    std::map<Monomial, std::size_t, LexDescending> index_;
    std::vector<std::vector<K>> table_;
    std::vector<K> identity_;
    std::optional<GroebnerBasis<K>> gb_;
};

template <typename K>
using AlgebraPtr = std::shared_ptr<const Algebra<K>>;

// Element of a specific algebra instance.
template <typename K>
struct Element {
    AlgebraPtr<K> algebra;
    std::vector<K> coords;

    bool is_zero() const {
        for (const auto& c : coords)
            if (!Ground<K>::is_zero(c)) return false;
        return true;
    }

    std::string to_string() const { return algebra->coords_to_string(coords); }

    friend Element operator+(const Element& a, const Element& b) {
        a.require_same(b);
        Element r(a);
        for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
        return r;
    }

    friend Element operator-(const Element& a, const Element& b) {
        a.require_same(b);
        Element r(a);
        for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
        return r;
    }

    friend Element operator*(const Element& a, const Element& b) {
        a.require_same(b);
        return {a.algebra, a.algebra->multiply(a.coords, b.coords)};
    }

    friend Element operator*(const K& s, Element a) {
        for (auto& c : a.coords) c = s * c;
        return a;
    }

    friend bool operator==(const Element& a, const Element& b) {
        return a.algebra == b.algebra && a.coords == b.coords;
    }

private:
    void require_same(const Element& o) const {
        if (algebra != o.algebra)
            throw ValidationError("elements belong to different algebra instances");
    }
};

// Classification of an element as a unit or (zero) divisor via the
// determinant of its regular representation. Over Lambda (K = Q(q)) a third
// outcome exists: det nonzero but not a Laurent unit; such an element is
// not invertible in the Laurent extension yet annihilates nothing, so no
// witness is attached.
template <typename K>
struct UnitResult {
    enum class Verdict { unit, zero_divisor, non_unit };
    Verdict verdict;
    K det;
    std::optional<std::vector<K>> inverse;  // for verdict == unit
    std::optional<std::vector<K>> witness;  // for verdict == zero_divisor
    bool is_unit() const { return verdict == Verdict::unit; }
};

template <typename K>
UnitResult<K> is_unit(const Algebra<K>& alg, const std::vector<K>& a) {
    Matrix<K> rep = alg.regular_rep(a);
    K det = rep.determinant();
    if (Ground<K>::is_ring_unit(det)) {
        auto inv = rep.solve(alg.identity());
        if (!inv) throw Error("regular representation is singular despite unit determinant");
        return {UnitResult<K>::Verdict::unit, std::move(det), std::move(inv), std::nullopt};
    }
    if (Ground<K>::is_zero(det)) {
        auto kernel = rep.kernel_basis();
        if (kernel.empty()) throw Error("zero determinant without kernel (internal error)");
        std::vector<K> witness = std::move(kernel.front());
        Ground<K>::normalize_primitive(witness);
        return {UnitResult<K>::Verdict::zero_divisor, std::move(det), std::nullopt,
                std::move(witness)};
    }
    return {UnitResult<K>::Verdict::non_unit, std::move(det), std::nullopt, std::nullopt};
}

// Trace form T_{ij} = tr(regular_rep(b_i b_j)).
template <typename K>
Matrix<K> trace_form(const Algebra<K>& alg) {
    std::size_t n = alg.dim();
    std::vector<K> t = alg.trace_vector();
    Matrix<K> form(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const std::vector<K>& cell = alg.product(i, j);
            K val = Ground<K>::zero();
            for (std::size_t u = 0; u < n; ++u)
                if (!Ground<K>::is_zero(cell[u])) val += cell[u] * t[u];
            form.at(i, j) = val;
            form.at(j, i) = form.at(i, j);
        }
    return form;
}

// Semisimplicity reference test: the trace form is nondegenerate iff the
// algebra is semisimple (characteristic zero).
template <typename K>
bool is_semisimple_trace_oracle(const Algebra<K>& alg) {
    return !Ground<K>::is_zero(trace_form(alg).determinant());
}

// Basis of the nilradical: the kernel of the trace form (characteristic
// zero). Vectors are primitive and ordered by the elimination's free
// columns.
template <typename K>
std::vector<std::vector<K>> nilradical(const Algebra<K>& alg) {
    auto kernel = trace_form(alg).kernel_basis();
    for (auto& v : kernel) Ground<K>::normalize_primitive(v);
    return kernel;
}

// Basis of the socle: the annihilator of the nilradical.
template <typename K>
std::vector<std::vector<K>> socle(const Algebra<K>& alg) {
    std::vector<std::vector<K>> nil = nilradical(alg);
    std::size_t n = alg.dim();
    Matrix<K> stacked(nil.size() * n, n);
    for (std::size_t l = 0; l < nil.size(); ++l) {
        Matrix<K> rep = alg.regular_rep(nil[l]);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) stacked.at(l * n + i, j) = rep.at(i, j);
    }
    auto kernel = stacked.kernel_basis();
    for (auto& v : kernel) Ground<K>::normalize_primitive(v);
    return kernel;
}

}  // namespace qeuler
