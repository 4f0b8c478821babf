#include "qeuler/grassmannian.hpp"

#include <sstream>

namespace qeuler {

long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

void GrassmannianSpec::validate(long dim_cap) const {
    if (k < 1 || n <= k)
        throw ValidationError("Grassmannian parameters need 1 <= k < n; got k = " +
                              std::to_string(k) + ", n = " + std::to_string(n));
    long dim = binomial(n, k);
    if (dim > dim_cap)
        throw ValidationError("cohomology dimension C(" + std::to_string(n) + "," +
                              std::to_string(k) + ") = " + std::to_string(dim) +
                              " exceeds the build cap " + std::to_string(dim_cap));
}

VarSetPtr grassmann_vars(int k, int n, bool with_q) {
    std::vector<std::string> names;
    std::vector<int> weights;
    for (int i = 1; i <= k; ++i) {
        names.push_back("x" + std::to_string(i));
        weights.push_back(2 * i);
    }
    if (with_q) {
        names.push_back("q");
        weights.push_back(2 * n);
    }
    return VarSet::make(std::move(names), std::move(weights));
}

namespace {

// Unweighted scratch variables named prefix1..prefixCount, appended in order.
void append_vars(std::vector<std::string>& names, const std::string& prefix, int count) {
    for (int i = 1; i <= count; ++i) names.push_back(prefix + std::to_string(i));
}

// e_0..e_max of the variables at indices [first, first+count), by the
// truncated product expansion of prod_i (1 + t v_i).
std::vector<MPoly<Rational>> elementary_table(const VarSetPtr& vars, int first, int count,
                                              int max_degree) {
    std::vector<MPoly<Rational>> e(static_cast<std::size_t>(max_degree) + 1,
                                   MPoly<Rational>::zero(vars));
    e[0] = MPoly<Rational>::constant(vars, Rational(1));
    for (int v = 0; v < count; ++v) {
        MPoly<Rational> x = MPoly<Rational>::variable(vars, static_cast<std::size_t>(first + v));
        for (int d = std::min(v + 1, max_degree); d >= 1; --d)
            e[static_cast<std::size_t>(d)] += e[static_cast<std::size_t>(d - 1)] * x;
    }
    return e;
}

MPoly<Rational> mpoly_det(std::vector<std::vector<MPoly<Rational>>> m) {
    std::size_t n = m.size();
    if (n == 0) throw ValidationError("empty matrix determinant");
    if (n == 1) return m[0][0];
    const VarSetPtr& vars = m[0][0].vars();
    MPoly<Rational> det = MPoly<Rational>::zero(vars);
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i][0].is_zero()) continue;
        std::vector<std::vector<MPoly<Rational>>> minor;
        minor.reserve(n - 1);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == i) continue;
            minor.emplace_back(m[r].begin() + 1, m[r].end());
        }
        MPoly<Rational> contrib = m[i][0] * mpoly_det(std::move(minor));
        if (i % 2)
            det -= contrib;
        else
            det += contrib;
    }
    return det;
}

// Embeds p into a superset variable context; map[i] is the target index of
// source variable i.
MPoly<Rational> embed(const MPoly<Rational>& p, const VarSetPtr& target,
                      const std::vector<std::size_t>& map) {
    typename MPoly<Rational>::TermMap out;
    for (const auto& [m, c] : p.terms()) {
        Monomial big(target->size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) big[map[i]] = m[i];
        out.emplace(std::move(big), c);
    }
    return MPoly<Rational>::from_terms(target, std::move(out));
}

}  // namespace

MPoly<Rational> power_sum_in_elementary(int m, int k) {
    if (m < 1) throw ValidationError("power sum index must be >= 1");
    if (k < 1) throw ValidationError("need at least one variable");
    VarSetPtr vars = grassmann_vars(k, k + 1, false);
    auto e = [&](int i) {
        if (i > k) return MPoly<Rational>::zero(vars);
        return MPoly<Rational>::variable(vars, static_cast<std::size_t>(i - 1));
    };
    std::vector<MPoly<Rational>> p(static_cast<std::size_t>(m) + 1, MPoly<Rational>::zero(vars));
    for (int t = 1; t <= m; ++t) {
        MPoly<Rational> acc = MPoly<Rational>::zero(vars);
        if (t <= k) acc += e(t) * Rational(t % 2 ? t : -t);
        for (int i = 1; i < t; ++i) {
            MPoly<Rational> part = e(i) * p[static_cast<std::size_t>(t - i)];
            if (i % 2)
                acc += part;
            else
                acc -= part;
        }
        p[static_cast<std::size_t>(t)] = std::move(acc);
    }
    return p[static_cast<std::size_t>(m)];
}

MPoly<Rational> landau_ginzburg(const GrassmannianSpec& spec) {
    spec.validate();
    VarSetPtr vars = grassmann_vars(spec.k, spec.n, spec.quantum);
    std::vector<std::size_t> map;
    for (int i = 0; i < spec.k; ++i) map.push_back(static_cast<std::size_t>(i));
    MPoly<Rational> w =
        embed(power_sum_in_elementary(spec.n + 1, spec.k), vars, map) *
        Rational(1, spec.n + 1);
    if (spec.quantum) {
        Monomial qx1(vars->size(), 0);
        qx1[0] = 1;
        qx1[vars->size() - 1] = 1;
        w += MPoly<Rational>::monomial_term(vars, std::move(qx1),
                                            Rational(spec.k % 2 ? -1 : 1));
    }
    return w;
}

std::vector<MPoly<Rational>> potential_ideal(const GrassmannianSpec& spec) {
    MPoly<Rational> w = landau_ginzburg(spec);
    std::vector<MPoly<Rational>> gens;
    gens.reserve(static_cast<std::size_t>(spec.k));
    for (int i = 0; i < spec.k; ++i) gens.push_back(w.diff(static_cast<std::size_t>(i)));
    return gens;
}

MPoly<Rational> schur_polynomial(const Partition& lam, int k) {
    if (k < 1) throw ValidationError("need at least one variable");
    if (lam.length() > k)
        throw ValidationError("partition " + lam.to_string() + " has more than " +
                              std::to_string(k) + " rows");
    VarSetPtr vars = grassmann_vars(k, k + 1, false);
    if (lam.length() == 0) return MPoly<Rational>::constant(vars, Rational(1));
    Partition conj = lam.conjugate();
    int size = conj.length();
    auto entry = [&](int i, int j) {
        int idx = conj.part(i) - i + j;
        if (idx < 0 || idx > k) return MPoly<Rational>::zero(vars);
        if (idx == 0) return MPoly<Rational>::constant(vars, Rational(1));
        return MPoly<Rational>::variable(vars, static_cast<std::size_t>(idx - 1));
    };
    std::vector<std::vector<MPoly<Rational>>> m;
    m.reserve(static_cast<std::size_t>(size));
    for (int i = 1; i <= size; ++i) {
        std::vector<MPoly<Rational>> row;
        row.reserve(static_cast<std::size_t>(size));
        for (int j = 1; j <= size; ++j) row.push_back(entry(i, j));
        m.push_back(std::move(row));
    }
    return mpoly_det(std::move(m));
}

MPoly<Rational> euler_polynomial(int k, int n, int cap) {
    if (k < 1 || n <= k) throw ValidationError("need 1 <= k < n");
    int mm = n - k;
    if (k * mm > cap)
        throw ValidationError("Euler polynomial cap exceeded: k(n-k) = " +
                              std::to_string(k * mm) + " > " + std::to_string(cap));

    // Chern roots: l1..lk for the subbundle, m1..m{n-k} for the quotient.
    std::vector<std::string> root_names;
    append_vars(root_names, "l", k);
    append_vars(root_names, "m", mm);
    VarSetPtr roots = VarSet::make(std::move(root_names));

    MPoly<Rational> e = MPoly<Rational>::constant(roots, Rational(1));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < mm; ++j)
            e *= MPoly<Rational>::variable(roots, static_cast<std::size_t>(k + j)) -
                 MPoly<Rational>::variable(roots, static_cast<std::size_t>(i));

    std::vector<MPoly<Rational>> e_sub = elementary_table(roots, 0, k, k * mm + 1);
    std::vector<MPoly<Rational>> e_quot = elementary_table(roots, k, mm, k * mm + 1);

    std::vector<std::string> xy_names;
    append_vars(xy_names, "x", k);
    append_vars(xy_names, "y", mm);
    VarSetPtr xy = VarSet::make(std::move(xy_names));
    MPoly<Rational> acc = MPoly<Rational>::zero(xy);

    // Bisymmetric reduction: the lex-leading exponent tuple is weakly
    // decreasing inside each root group, so subtracting the matching product
    // of elementary polynomials cancels it; lex descent terminates.
    while (!e.is_zero()) {
        // Copies: `e -= product` below erases this exact leading term.
        const auto [mono, c] = *e.terms().begin();
        Monomial image(xy->size(), 0);
        MPoly<Rational> product = MPoly<Rational>::constant(roots, c);
        auto consume = [&](int first, int count, const std::vector<MPoly<Rational>>& table,
                           int out_first) {
            for (int i = 0; i < count; ++i) {
                int cur = mono[static_cast<std::size_t>(first + i)];
                int next = i + 1 < count ? mono[static_cast<std::size_t>(first + i + 1)] : 0;
                if (cur < next)
                    throw Error("bisymmetric reduction met a non-dominant monomial");
                if (cur > next) {
                    image[static_cast<std::size_t>(out_first + i)] = cur - next;
                    product *= table[static_cast<std::size_t>(i + 1)].pow(cur - next);
                }
            }
        };
        consume(0, k, e_sub, 0);
        consume(k, mm, e_quot, k);
        e -= product;
        acc += MPoly<Rational>::monomial_term(xy, std::move(image), c);
    }

    // Eliminate the quotient classes: y_m = -sum_{i=1}^{min(k,m)} x_i y_{m-i}.
    VarSetPtr xw = grassmann_vars(k, n, false);
    std::vector<MPoly<Rational>> y(static_cast<std::size_t>(mm) + 1, MPoly<Rational>::zero(xw));
    y[0] = MPoly<Rational>::constant(xw, Rational(1));
    for (int m = 1; m <= mm; ++m)
        for (int i = 1; i <= std::min(k, m); ++i)
            y[static_cast<std::size_t>(m)] -=
                MPoly<Rational>::variable(xw, static_cast<std::size_t>(i - 1)) *
                y[static_cast<std::size_t>(m - i)];

    std::vector<MPoly<Rational>> images;
    for (int i = 0; i < k; ++i)
        images.push_back(MPoly<Rational>::variable(xw, static_cast<std::size_t>(i)));
    for (int m = 1; m <= mm; ++m) images.push_back(y[static_cast<std::size_t>(m)]);
    return acc.substitute(xw, images);
}

namespace {

Rational functional_sign_for(int k, int n) {
    return Rational((k * (n - k)) % 2 ? -1 : 1);
}

void check_dimension(std::size_t got, int k, int n) {
    long expect = binomial(n, k);
    if (static_cast<long>(got) != expect)
        throw TheoremViolation("cohomology dimension mismatch for G_{" + std::to_string(k) + "," +
                               std::to_string(n) + "}: staircase has " + std::to_string(got) +
                               " monomials, expected C(n,k) = " + std::to_string(expect));
}

std::size_t rect_index(const std::vector<Partition>& parts, int k, int n) {
    Partition rect = Partition::make(std::vector<int>(static_cast<std::size_t>(k), n - k));
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i] == rect) return i;
    throw Error("full-box partition missing from the box enumeration");
}

}  // namespace

ClassicalCohomology build_cohomology_classical(int k, int n, bool anchor_check) {
    GrassmannianSpec spec{k, n, false};
    spec.validate();

    auto alg = Algebra<Rational>::quotient(grassmann_vars(k, n, false), potential_ideal(spec));
    check_dimension(alg->dim(), k, n);

    std::vector<Partition> parts = partitions_in_box(k, n - k);
    if (parts.size() != alg->dim()) throw Error("box partition count mismatch");

    std::size_t dim = alg->dim();
    Matrix<Rational> schur(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        std::vector<Rational> coords = alg->coords_of_poly(schur_polynomial(parts[j], k));
        for (std::size_t i = 0; i < dim; ++i) schur.at(i, j) = coords[i];
    }
    auto inv = schur.inverse();
    if (!inv)
        throw TheoremViolation("Schur polynomials do not form a basis of H*(G_{" +
                               std::to_string(k) + "," + std::to_string(n) + "})");

    Rational sign = functional_sign_for(k, n);
    std::size_t rect = rect_index(parts, k, n);
    std::vector<Rational> f(dim);
    for (std::size_t m = 0; m < dim; ++m) f[m] = sign * inv->at(rect, m);

    ClassicalCohomology out{spec, frobenius_structure(alg, std::move(f)), std::move(parts),
                            std::move(schur), sign};

    if (anchor_check && k * (n - k) <= 8) {
        std::vector<Rational> anchor = alg->coords_of_poly(euler_polynomial(k, n));
        if (anchor != out.data.omega)
            throw TheoremViolation(
                "functional normalization failed for G_{" + std::to_string(k) + "," +
                std::to_string(n) +
                "}: the characteristic element does not match the Euler polynomial");
    }
    return out;
}

QuantumCohomology build_cohomology_quantum(int k, int n) {
    GrassmannianSpec spec{k, n, true};
    spec.validate();

    std::vector<MPoly<RatFnQ>> gens;
    for (const auto& g : potential_ideal(spec)) gens.push_back(promote_q(g));
    auto alg = Algebra<RatFnQ>::quotient(gens.front().vars(), gens);
    check_dimension(alg->dim(), k, n);

    std::vector<Partition> parts = partitions_in_box(k, n - k);
    if (parts.size() != alg->dim()) throw Error("box partition count mismatch");

    std::size_t dim = alg->dim();
    Matrix<RatFnQ> schur(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        MPoly<RatFnQ> s = schur_polynomial(parts[j], k).map_coeffs<RatFnQ>(
            [](const Rational& c) { return RatFnQ(c); });
        std::vector<RatFnQ> coords = alg->coords_of_poly(s);
        for (std::size_t i = 0; i < dim; ++i) schur.at(i, j) = coords[i];
    }
    auto inv = schur.inverse();
    if (!inv)
        throw TheoremViolation("Schur polynomials do not form a basis of QH*(G_{" +
                               std::to_string(k) + "," + std::to_string(n) + "})");

    Rational sign = functional_sign_for(k, n);
    std::size_t rect = rect_index(parts, k, n);
    std::vector<RatFnQ> f(dim);
    for (std::size_t m = 0; m < dim; ++m) {
        const RatFnQ& c = inv->at(rect, m);
        if (!c.is_constant())
            throw TheoremViolation(
                "quantum Schur change of basis is not classical on the defining row: entry " +
                c.to_string());
        f[m] = RatFnQ(sign * c.constant_value());
    }

    if (k * (n - k) <= 8) {
        ClassicalCohomology cl = build_cohomology_classical(k, n, true);
        if (cl.data.algebra->basis() != alg->basis())
            throw TheoremViolation("quantum and classical staircases differ for G_{" +
                                   std::to_string(k) + "," + std::to_string(n) + "}");
        for (std::size_t m = 0; m < dim; ++m)
            if (!(f[m] == RatFnQ(cl.data.f[m])))
                throw TheoremViolation(
                    "quantum functional does not reduce to the classical one for G_{" +
                    std::to_string(k) + "," + std::to_string(n) + "}");
    }

    return {spec, frobenius_structure(alg, std::move(f)), std::move(parts), sign};
}

MPoly<Rational> hessian_polynomial(const GrassmannianSpec& spec) {
    MPoly<Rational> w = landau_ginzburg(spec);
    std::vector<std::vector<MPoly<Rational>>> h;
    h.reserve(static_cast<std::size_t>(spec.k));
    for (int i = 0; i < spec.k; ++i) {
        std::vector<MPoly<Rational>> row;
        row.reserve(static_cast<std::size_t>(spec.k));
        MPoly<Rational> di = w.diff(static_cast<std::size_t>(i));
        for (int j = 0; j < spec.k; ++j) row.push_back(di.diff(static_cast<std::size_t>(j)));
        h.push_back(std::move(row));
    }
    return mpoly_det(std::move(h));
}

namespace {

template <typename K>
HessianReport<K> make_report(const GrassmannianSpec& spec, const FrobeniusData<K>& data,
                             std::vector<K> hessian_nf) {
    HessianReport<K> rep;
    rep.spec = spec;
    rep.omega = data.omega;
    rep.hessian_nf = std::move(hessian_nf);
    rep.paper_sign = binomial(spec.n, 2) % 2 ? -1 : 1;

    const Algebra<K>& alg = *data.algebra;
    std::size_t dim = alg.dim();

    // Scalar comparison: candidate ratio at the first nonzero coordinate of
    // omega, then full coordinate check.
    std::optional<K> eps;
    for (std::size_t i = 0; i < dim; ++i) {
        if (Ground<K>::is_zero(rep.omega[i])) continue;
        K cand = rep.hessian_nf[i] / rep.omega[i];
        bool all = true;
        for (std::size_t j = 0; j < dim; ++j)
            if (!(rep.hessian_nf[j] == cand * rep.omega[j])) {
                all = false;
                break;
            }
        if (all) eps = std::move(cand);
        break;
    }
    if (eps) {
        Rational value;
        if constexpr (std::is_same_v<K, Rational>) {
            value = *eps;
        } else {
            if (!eps->is_constant()) eps.reset();
            if (eps) value = eps->constant_value();
        }
        if (eps) rep.epsilon = value;
    }

    if (rep.epsilon && !rep.epsilon->is_zero()) {
        std::vector<K> u(alg.identity());
        K scale = Ground<K>::from_rational(*rep.epsilon);
        for (auto& c : u) c = c * scale;
        rep.unit_factor = std::move(u);
        return rep;
    }

    // General unit factor: particular solution of omega * u = hessian, then
    // kernel adjustments until the factor is invertible.
    Matrix<K> repm = alg.regular_rep(rep.omega);
    auto part = repm.solve(rep.hessian_nf);
    if (part) {
        std::vector<std::vector<K>> candidates{*part};
        for (auto& z : repm.kernel_basis()) {
            std::vector<K> shifted(*part);
            for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += z[i];
            candidates.push_back(std::move(shifted));
        }
        for (auto& cand : candidates) {
            if (is_unit(alg, cand).is_unit()) {
                rep.unit_factor = std::move(cand);
                break;
            }
        }
    }
    return rep;
}

}  // namespace

HessianReport<Rational> verify_hessian_theorem(const ClassicalCohomology& c) {
    std::vector<Rational> h = c.data.algebra->coords_of_poly(hessian_polynomial(c.spec));
    return make_report(c.spec, c.data, std::move(h));
}

HessianReport<RatFnQ> verify_hessian_theorem(const QuantumCohomology& c) {
    std::vector<RatFnQ> h =
        c.data.algebra->coords_of_poly(promote_q(hessian_polynomial(c.spec)));
    return make_report(c.spec, c.data, std::move(h));
}

}  // namespace qeuler
