#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qeuler/frobenius.hpp"
#include "qeuler/partitions.hpp"

namespace qeuler {

long binomial(int n, int k);

// Cohomology of the Grassmannian of k-planes in C^n, classical or quantum.
struct GrassmannianSpec {
    int k = 1;
    int n = 2;
    bool quantum = true;

    // 1 <= k < n and C(n,k) within the build cap.
    void validate(long dim_cap = 35) const;
    int box_area() const { return k * (n - k); }
};

// Variables x_1..x_k of weight 2i, plus trailing q of weight 2n if with_q.
VarSetPtr grassmann_vars(int k, int n, bool with_q);

// p_m as a polynomial in the elementary symmetric classes x_i = e_i
// (Newton's identities, with e_i = 0 beyond k variables).
MPoly<Rational> power_sum_in_elementary(int m, int k);

// The potential p_{n+1}/(n+1), plus (-1)^k * q * x_1 in the quantum case.
MPoly<Rational> landau_ginzburg(const GrassmannianSpec& spec);

// The k partial derivatives of the potential with respect to x_1..x_k.
std::vector<MPoly<Rational>> potential_ideal(const GrassmannianSpec& spec);

// Schur polynomial via the dual Jacobi-Trudi determinant det(e_{lam'_i-i+j})
// in the elementary classes; requires at most k rows.
MPoly<Rational> schur_polynomial(const Partition& lam, int k);

// Top Chern class of the tangent bundle, prod_{i,j}(mu_j - lambda_i),
// rewritten as a polynomial in x_1..x_k by two-group symmetric reduction
// followed by elimination of the quotient classes y_m.
MPoly<Rational> euler_polynomial(int k, int n, int cap = 12);

struct ClassicalCohomology {
    GrassmannianSpec spec;
    FrobeniusData<Rational> data;
    std::vector<Partition> partitions;  // box partitions, fixed order
    Matrix<Rational> schur_matrix;      // column j = coords of schur(partitions[j])
    Rational functional_sign;           // s = (-1)^{k(n-k)}
};

struct QuantumCohomology {
    GrassmannianSpec spec;
    FrobeniusData<RatFnQ> data;
    std::vector<Partition> partitions;
    Rational functional_sign;
};

// Build H*(G_{k,n}) with the intersection functional read off through the
// Schur basis. With anchor_check (and box_area <= anchor cap 8) the
// characteristic element is validated against the Euler polynomial; a
// mismatch aborts the build.
ClassicalCohomology build_cohomology_classical(int k, int n, bool anchor_check = true);

// Build QH*(G_{k,n}) over Lambda. The functional comes from the Schur
// change of basis over Lambda; its defining row must be constant, and when
// the classical companion is available it must agree with the classical row.
QuantumCohomology build_cohomology_quantum(int k, int n);

// det of the matrix of second partials of the potential, as a raw
// polynomial over the x variables (the quantum term is linear, so the
// polynomial itself is q-free).
MPoly<Rational> hessian_polynomial(const GrassmannianSpec& spec);

template <typename K>
struct HessianReport {
    GrassmannianSpec spec;
    std::vector<K> omega;
    std::vector<K> hessian_nf;
    std::optional<Rational> epsilon;             // hessian_nf = epsilon * omega
    std::optional<std::vector<K>> unit_factor;   // hessian_nf = u * omega, u a unit
    int paper_sign = 1;                          // (-1)^{C(n,2)}

    bool scalar_ok() const { return epsilon.has_value(); }
    bool unit_ok() const { return unit_factor.has_value(); }
    bool ok() const { return scalar_ok() && unit_ok(); }
};

HessianReport<Rational> verify_hessian_theorem(const ClassicalCohomology& c);
HessianReport<RatFnQ> verify_hessian_theorem(const QuantumCohomology& c);

}  // namespace qeuler
