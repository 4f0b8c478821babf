#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qeuler/linalg.hpp"
#include "qeuler/poly_q.hpp"

using namespace qeuler;
using M = Matrix<Rational>;

namespace {
M from_rows(std::vector<std::vector<long>> rows) {
    M m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = Rational(rows[i][j]);
    return m;
}
}  // namespace

TEST_CASE("shape and identity") {
    M m(2, 3);
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    CHECK(m.at(1, 2).is_zero());
    M id = M::identity(3);
    CHECK(id.at(0, 0).is_one());
    CHECK(id.at(0, 1).is_zero());
    CHECK(id * id == id);
}

TEST_CASE("multiplication apply transpose trace") {
    M a = from_rows({{1, 2}, {3, 4}});
    M b = from_rows({{0, 1}, {1, 0}});
    CHECK(a * b == from_rows({{2, 1}, {4, 3}}));
    CHECK(b * a == from_rows({{3, 4}, {1, 2}}));
    CHECK_THROWS_AS(a * M(3, 2), ValidationError);
    auto v = a.apply({Rational(1), Rational(-1)});
    CHECK(v == std::vector<Rational>{Rational(-1), Rational(-1)});
    CHECK_THROWS_AS(a.apply({Rational(1)}), ValidationError);
    CHECK(a.transpose() == from_rows({{1, 3}, {2, 4}}));
    CHECK(a.trace() == Rational(5));
    CHECK_THROWS_AS(M(2, 3).trace(), ValidationError);
}

TEST_CASE("rref rank determinant") {
    M a = from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
    CHECK(a.rank() == 2);
    CHECK(a.determinant().is_zero());

    M b = from_rows({{2, 1}, {1, 1}});
    CHECK(b.determinant() == Rational(1));
    M c = from_rows({{0, 1}, {1, 0}});
    CHECK(c.determinant() == Rational(-1));  // one row swap
    CHECK(from_rows({{3}}).determinant() == Rational(3));

    std::vector<std::size_t> pivots;
    M r = a.rref(&pivots);
    CHECK(pivots == std::vector<std::size_t>{0, 1});
    CHECK(r.at(0, 0).is_one());
    CHECK(r.at(0, 1).is_zero());
    CHECK(r.at(0, 2) == Rational(-1));
    CHECK(r.at(1, 2) == Rational(2));
    CHECK(r.at(2, 0).is_zero());
    CHECK(r.at(2, 2).is_zero());
}

TEST_CASE("inverse") {
    M b = from_rows({{2, 1}, {1, 1}});
    auto inv = b.inverse();
    REQUIRE(inv.has_value());
    CHECK(*inv == from_rows({{1, -1}, {-1, 2}}));
    CHECK(b * *inv == M::identity(2));
    CHECK(!from_rows({{1, 2}, {2, 4}}).inverse().has_value());
    CHECK_THROWS_AS(M(2, 3).inverse(), ValidationError);
}

TEST_CASE("solve: particular solution with zero free variables") {
    M a = from_rows({{1, 1, 0}, {0, 0, 1}});
    auto x = a.solve({Rational(3), Rational(5)});
    REQUIRE(x.has_value());
    // free column is x1 (index 1): solution (3, 0, 5)
    CHECK(*x == std::vector<Rational>{Rational(3), Rational(0), Rational(5)});
    CHECK(a.apply(*x) == std::vector<Rational>{Rational(3), Rational(5)});

    // inconsistent system
    M b = from_rows({{1, 1}, {1, 1}});
    CHECK(!b.solve({Rational(0), Rational(1)}).has_value());
    CHECK_THROWS_AS(b.solve({Rational(1)}), ValidationError);
}

TEST_CASE("kernel basis") {
    M a = from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
    auto kb = a.kernel_basis();
    REQUIRE(kb.size() == 1);
    CHECK(kb[0] == std::vector<Rational>{Rational(1), Rational(-2), Rational(1)});
    for (const auto& v : kb)
        for (const auto& c : a.apply(v)) CHECK(c.is_zero());
    CHECK(M::identity(3).kernel_basis().empty());
    // zero map: kernel is everything, basis = standard vectors
    auto kz = M(2, 2).kernel_basis();
    CHECK(kz.size() == 2);
    CHECK(kz[0] == std::vector<Rational>{Rational(1), Rational(0)});
}

TEST_CASE("row space canonical form decides span equality") {
    std::vector<std::vector<Rational>> r1 = {{Rational(1), Rational(2)},
                                             {Rational(2), Rational(4)}};
    std::vector<std::vector<Rational>> r2 = {{Rational(3), Rational(6)}};
    CHECK(row_space_canonical(r1, 2) == row_space_canonical(r2, 2));
    std::vector<std::vector<Rational>> r3 = {{Rational(1), Rational(0)}};
    CHECK(!(row_space_canonical(r1, 2) == row_space_canonical(r3, 2)));
    // order independence
    std::vector<std::vector<Rational>> r4 = {{Rational(0), Rational(1)},
                                             {Rational(1), Rational(0)}};
    std::vector<std::vector<Rational>> r5 = {{Rational(1), Rational(1)},
                                             {Rational(1), Rational(-1)}};
    CHECK(row_space_canonical(r4, 2) == row_space_canonical(r5, 2));
    std::vector<std::vector<Rational>> short_row = {{Rational(1)}};
    CHECK_THROWS_AS(row_space_canonical(short_row, 2), ValidationError);
}

TEST_CASE("works over the rational function field") {
    Matrix<RatFnQ> m(2, 2);
    m.at(0, 0) = RatFnQ(PolyQ::q());
    m.at(0, 1) = RatFnQ(1);
    m.at(1, 0) = RatFnQ(1);
    m.at(1, 1) = RatFnQ(PolyQ::q());
    // det = q^2 - 1
    CHECK(m.determinant() == RatFnQ(PolyQ::from_coeffs({Rational(-1), Rational(0), Rational(1)})));
    auto inv = m.inverse();
    REQUIRE(inv.has_value());
    CHECK(m * *inv == Matrix<RatFnQ>::identity(2));
    // singular at the matrix level: [[q, q], [1, 1]]
    Matrix<RatFnQ> s(2, 2);
    s.at(0, 0) = RatFnQ(PolyQ::q());
    s.at(0, 1) = RatFnQ(PolyQ::q());
    s.at(1, 0) = RatFnQ(1);
    s.at(1, 1) = RatFnQ(1);
    CHECK(s.determinant().is_zero());
    CHECK(s.rank() == 1);
}
