#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qeuler/frobenius.hpp"
#include "qeuler/parser.hpp"

using namespace qeuler;

namespace {

AlgebraPtr<Rational> quotient1(const std::string& gen) {
    auto v = VarSet::make({"x"});
    return Algebra<Rational>::quotient(v, {parse_poly(gen, v)});
}

std::vector<Rational> rf(std::vector<long> vals) {
    std::vector<Rational> out;
    for (long v : vals) out.emplace_back(v);
    return out;
}

AlgebraPtr<RatFnQ> laurent_quotient(const MPoly<RatFnQ>& gen) {
    return Algebra<RatFnQ>::quotient(gen.vars(), {gen});
}

MPoly<RatFnQ> x_sq_minus(RatFnQ c) {
    auto v = VarSet::make({"x"});
    auto x = MPoly<RatFnQ>::variable(v, 0);
    return x * x - MPoly<RatFnQ>::constant(v, c);
}

}  // namespace

TEST_CASE("dual basis and characteristic element of the length-2 Jordan block") {
    // Q[x]/(x^2) with f(1) = 0, f(x) = 1.
    auto data = frobenius_structure(quotient1("x^2"), rf({0, 1}));
    // Gram matrix [[0,1],[1,0]]
    CHECK(data.gram.at(0, 0).is_zero());
    CHECK(data.gram.at(0, 1).is_one());
    CHECK(data.gram.at(1, 0).is_one());
    CHECK(data.gram.at(1, 1).is_zero());
    // duals: 1^# = x, x^# = 1
    CHECK(data.dual_basis[0] == rf({0, 1}));
    CHECK(data.dual_basis[1] == rf({1, 0}));
    // omega = 1*x + x*1 = 2x
    CHECK(data.omega == rf({0, 2}));
    CHECK(data.omega_element().to_string() == "2*x");
    // f(omega) = dim
    CHECK(data.f_of(data.omega) == Rational(2));
}

TEST_CASE("characteristic element of the length-3 Jordan block") {
    // Q[x]/(x^3) with f dual to x^2: omega = 3x^2.
    auto data = frobenius_structure(quotient1("x^3"), rf({0, 0, 1}));
    CHECK(data.omega == rf({0, 0, 3}));
    CHECK(data.f_of(data.omega) == Rational(3));
    // gram and its inverse are the antidiagonal; gram * gram_inv = I
    CHECK(data.gram * data.gram_inv == Matrix<Rational>::identity(3));
}

TEST_CASE("duality identity f(b_i * b_j^#) = delta_ij") {
    auto check_duality = [](const FrobeniusData<Rational>& data) {
        std::size_t n = data.algebra->dim();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<Rational> ei(n, Rational(0));
                ei[i] = Rational(1);
                Rational v = data.f_of(data.algebra->multiply(ei, data.dual_basis[j]));
                CHECK(v == (i == j ? Rational(1) : Rational(0)));
            }
    };
    check_duality(frobenius_structure(quotient1("x^3"), rf({0, 0, 1})));
    check_duality(frobenius_structure(quotient1("x^3 - 1"), rf({0, 0, 1})));
    check_duality(frobenius_structure(quotient1("x^4"), rf({1, 0, 0, 1})));
}

TEST_CASE("degenerate functionals are rejected") {
    CHECK_THROWS_WITH_AS(frobenius_structure(quotient1("x^2"), rf({1, 0})),
                         "Frobenius form is degenerate: Gram matrix is singular",
                         ValidationError);
    // f = 0 entirely
    CHECK_THROWS_AS(frobenius_structure(quotient1("x^2"), rf({0, 0})), ValidationError);
    // wrong arity
    CHECK_THROWS_AS(frobenius_structure(quotient1("x^2"), rf({1})), ValidationError);
}

TEST_CASE("extension condition over the Laurent ground") {
    // f(1) = 0, f(x) = 1 on Lambda[x]/(x^2 - q): Gram det -1, a Laurent unit.
    auto alg = laurent_quotient(x_sq_minus(RatFnQ(PolyQ::q())));
    auto data = frobenius_structure(alg, {RatFnQ(0), RatFnQ(1)});
    CHECK(data.omega == std::vector<RatFnQ>{RatFnQ(0), RatFnQ(2)});

    // f(1) = 1, f(x) = 1 gives Gram det q - 1: nonzero but not a Laurent
    // unit, so the form does not extend.
    try {
        frobenius_structure(alg, {RatFnQ(1), RatFnQ(1)});
        FAIL("expected extension-condition failure");
    } catch (const ValidationError& ex) {
        CHECK(std::string(ex.what()).find("extension condition") != std::string::npos);
        CHECK(std::string(ex.what()).find("not a Laurent unit") != std::string::npos);
    }
}

TEST_CASE("coproduct of the identity and cocommutativity") {
    auto data = frobenius_structure(quotient1("x^2"), rf({0, 1}));
    // alpha(1) = 1 (x) x + x (x) 1
    Matrix<Rational> m = coproduct(data, data.algebra->identity());
    CHECK(m.at(0, 0).is_zero());
    CHECK(m.at(0, 1).is_one());
    CHECK(m.at(1, 0).is_one());
    CHECK(m.at(1, 1).is_zero());
    // beta(alpha(1)) = omega
    CHECK(fold_product(*data.algebra, m) == data.omega);
}

TEST_CASE("coproduct properties across sample algebras") {
    auto samples = {
        frobenius_structure(quotient1("x^3"), rf({0, 0, 1})),
        frobenius_structure(quotient1("x^3 - 1"), rf({0, 0, 1})),
        frobenius_structure(quotient1("x^4"), rf({0, 0, 0, 1})),
    };
    for (const auto& data : samples) {
        const auto& alg = *data.algebra;
        std::size_t n = alg.dim();
        std::vector<std::vector<Rational>> probes = {alg.identity(), data.omega};
        std::vector<Rational> mix(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) mix[i] = Rational(static_cast<long>(i + 1));
        probes.push_back(mix);
        for (const auto& a : probes) {
            Matrix<Rational> m = coproduct(data, a);
            // coefficient matrix identity: M = regular_rep(a) * gram_inv
            CHECK(m == alg.regular_rep(a) * data.gram_inv);
            // cocommutativity: M is symmetric
            CHECK(m == m.transpose());
            // counit: (f (x) id) alpha(a) = a
            std::vector<Rational> back(n, Rational(0));
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t v = 0; v < n; ++v) back[v] += data.f[u] * m.at(u, v);
            CHECK(back == a);
        }
        // beta(alpha(1)) = omega
        CHECK(fold_product(alg, coproduct(data, alg.identity())) == data.omega);
    }
}

TEST_CASE("twisting by a unit transforms omega by the inverse") {
    // Semisimple case: Q[x]/(x^2 - 1), f dual to 1; twist by u = x.
    auto alg = quotient1("x^2 - 1");
    auto data = frobenius_structure(alg, rf({1, 0}));
    CHECK(data.omega == rf({2, 0}));
    auto twisted = twist(data, rf({0, 1}));
    // f'(1) = f(x) = 0, f'(x) = f(x^2) = 1
    CHECK(twisted.f == rf({0, 1}));
    // omega' = x^{-1} * omega = x * 2 = 2x
    CHECK(twisted.omega == rf({0, 2}));

    // General covariance: omega' = u^{-1} omega for several units.
    auto base = frobenius_structure(quotient1("x^3"), rf({0, 0, 1}));
    std::vector<std::vector<Rational>> units = {
        rf({1, 1, 0}), rf({2, 0, 1}), rf({1, -3, 5})};
    for (const auto& u : units) {
        auto unit = is_unit(*base.algebra, u);
        REQUIRE(unit.is_unit());
        auto tw = twist(base, u);
        CHECK(tw.omega == base.algebra->multiply(*unit.inverse, base.omega));
    }
}

TEST_CASE("twisting by a zero divisor degenerates") {
    auto base = frobenius_structure(quotient1("x^3"), rf({0, 0, 1}));
    CHECK_THROWS_AS(twist(base, rf({0, 1, 0})), ValidationError);
}

TEST_CASE("direct sum concatenates characteristic elements") {
    // Q (f(1) = 1)  (+)  Q[x]/(x^2) (f dual to x)
    auto qa = frobenius_structure(quotient1("x - 0"), rf({1}));
    CHECK(qa.algebra->dim() == 1);
    CHECK(qa.omega == rf({1}));
    auto qb = frobenius_structure(quotient1("x^2"), rf({0, 1}));
    auto sum = direct_sum(qa, qb);
    CHECK(sum.algebra->dim() == 3);
    CHECK(sum.algebra->basis_name(0) == "u1");
    CHECK(sum.algebra->basis_name(1) == "v1");
    CHECK(sum.algebra->basis_name(2) == "v2");
    // omega of the sum is (omega_1, omega_2) = (1, 2x)
    CHECK(sum.omega == rf({1, 0, 2}));
    CHECK(sum.algebra->identity() == rf({1, 1, 0}));
    CHECK(sum.f == rf({1, 0, 1}));
    CHECK(sum.f_of(sum.omega) == Rational(3));
    // cross products vanish
    CHECK(sum.algebra->product(0, 1) == rf({0, 0, 0}));
}

TEST_CASE("characteristic element decides semisimplicity (unit test vs trace oracle)") {
    struct Case {
        const char* gen;
        std::vector<long> f;
        bool semisimple;
    };
    const Case cases[] = {
        {"x^2", {0, 1}, false},
        {"x^3", {0, 0, 1}, false},
        {"x^4", {0, 0, 0, 1}, false},
        {"x^2 - 1", {1, 0}, true},
        {"x^3 - 1", {0, 0, 1}, true},
        {"x^3 - x", {0, 0, 1}, true},
        {"x^4 - 1", {0, 0, 0, 1}, true},
    };
    for (const auto& c : cases) {
        auto data = frobenius_structure(quotient1(c.gen), rf(c.f));
        auto verdict = is_semisimple_via_omega(data);
        CHECK(verdict.is_unit() == c.semisimple);
        CHECK(is_semisimple_trace_oracle(*data.algebra) == c.semisimple);
        if (!c.semisimple) {
            REQUIRE(verdict.witness.has_value());
            auto prod = data.algebra->multiply(data.omega, *verdict.witness);
            for (const auto& entry : prod) CHECK(entry.is_zero());
        }
    }
    // The canonical witness for Q[x]/(x^3) (omega = 3x^2) is x.
    auto data = frobenius_structure(quotient1("x^3"), rf({0, 0, 1}));
    auto verdict = is_semisimple_via_omega(data);
    CHECK(*verdict.witness == rf({0, 1, 0}));
}

TEST_CASE("Laurent ground: the three verdicts of the characteristic element") {
    // semisimple as an extension: x^2 - q, f dual to 1
    auto alg = laurent_quotient(x_sq_minus(RatFnQ(PolyQ::q())));
    auto data = frobenius_structure(alg, {RatFnQ(1), RatFnQ(0)});
    CHECK(data.omega == std::vector<RatFnQ>{RatFnQ(2), RatFnQ(0)});
    auto v = is_semisimple_via_omega(data);
    CHECK(v.is_unit());
    CHECK(v.det == RatFnQ(4));

    // nilpotent: x^2 over Lambda, omega = 2x is a zero divisor
    auto nilp = frobenius_structure(laurent_quotient(x_sq_minus(RatFnQ(0))),
                                    {RatFnQ(0), RatFnQ(1)});
    CHECK(is_semisimple_via_omega(nilp).verdict ==
          UnitResult<RatFnQ>::Verdict::zero_divisor);

    // boundary: x^2 - (q+1): det(rep omega) = -4(q+1), nonzero but the
    // specialization at q = -1 degenerates, so omega is not a Laurent unit.
    RatFnQ qp1 = RatFnQ(PolyQ::q()) + RatFnQ(1);
    auto edge = frobenius_structure(laurent_quotient(x_sq_minus(qp1)),
                                    {RatFnQ(0), RatFnQ(1)});
    auto ev = is_semisimple_via_omega(edge);
    CHECK(ev.verdict == UnitResult<RatFnQ>::Verdict::non_unit);
    CHECK(ev.det == RatFnQ(-4) * qp1);
}

TEST_CASE("omega is independent of the presenting basis") {
    // Rewrite Q[x]/(x^3) in the basis g1 = 1, g2 = 1 + x, g3 = x + x^2 and
    // check that omega transports back to 3x^2.
    auto alg = quotient1("x^3");
    auto data = frobenius_structure(alg, rf({0, 0, 1}));
    std::size_t n = 3;
    // change of basis: columns are the new basis vectors in old coordinates
    Matrix<Rational> P(n, n);
    P.at(0, 0) = Rational(1);
    P.at(0, 1) = Rational(1);
    P.at(1, 1) = Rational(1);
    P.at(1, 2) = Rational(1);
    P.at(2, 2) = Rational(1);
    auto Pinv = P.inverse();
    REQUIRE(Pinv.has_value());

    auto col = [&](const Matrix<Rational>& m, std::size_t j) {
        std::vector<Rational> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = m.at(i, j);
        return v;
    };
    std::vector<std::vector<std::vector<Rational>>> table(
        n, std::vector<std::vector<Rational>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            table[i][j] = Pinv->apply(alg->multiply(col(P, i), col(P, j)));
    auto alg2 = Algebra<Rational>::from_table({"g1", "g2", "g3"}, table);

    std::vector<Rational> f2(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) f2[i] = data.f_of(col(P, i));
    auto data2 = frobenius_structure(alg2, f2);
    // transport omega' back to the original coordinates
    CHECK(P.apply(data2.omega) == data.omega);
}
