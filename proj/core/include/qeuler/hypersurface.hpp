#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qeuler/frobenius.hpp"
#include "qeuler/specialize.hpp"

namespace qeuler {

// Middle-dimensional data of a smooth complete intersection, driving the
// structure-constant presentation of its quantum cohomology.
struct HypersurfaceSpec {
    int n = 2;                                 // even middle dimension >= 2
    std::vector<int> degrees;                  // d_1..d_r, each >= 2
    int primitive_rank = 0;                    // R
    std::optional<Matrix<Rational>> pairing;   // R x R symmetric invertible; identity if absent

    int codim() const { return static_cast<int>(degrees.size()); }
    int d() const;              // sum(d_i - 1) + 1
    int q_weight() const;       // 2(n + r + 1 - sum d_i), the degree of q
    Rational degree_product() const;  // D = prod d_i^{d_i}
    Matrix<Rational> pairing_or_identity() const;
    void validate() const;
};

// Structure-constant Frobenius extension over Lambda on the basis
// {1, G, ..., G^n, e_1, ..., e_R} with f = (G^n)^*. Throws ValidationError
// when the relation table is not associative (inconsistent spec: happens
// exactly for d = 2 with R >= 2, for every invertible symmetric pairing).
FrobeniusData<RatFnQ> build_hypersurface_algebra(const HypersurfaceSpec& spec);

struct OmegaClosedForm {
    std::vector<RatFnQ> paper_value;     // (n+1)G^n + (R/d)(G^n - d^d G^{d-2} q)
    std::vector<RatFnQ> computed_value;  // characteristic element of the build
    bool match = false;
    AlgebraPtr<RatFnQ> algebra;
};

// Both sides of the closed-form display for a single degree (r = 1). The
// generic computation is pinned; the literal formula is reported beside it.
OmegaClosedForm omega_closed_form(const HypersurfaceSpec& spec);

struct SemisimpleClassification {
    bool semisimple_omega = false;
    bool semisimple_trace = false;
    // For a non-semisimple verdict: specialized annihilator of omega (e_1
    // when R >= 1 and d > 2, otherwise a kernel vector).
    std::optional<std::vector<Rational>> witness;
    // For d = 2: Laurent decomposition of det(regular_rep(omega)) over Lambda.
    std::optional<LaurentUnit> det_certificate;
    // d = 2 regular-representation shape: diagonal except the (G^n, 1)
    // entry, a constant middle block and a constant primitive block equal to
    // the corner. Scalars are reported, not asserted.
    bool structure_shape_ok = false;
    std::optional<RatFnQ> middle_scalar;      // computed: 4n q
    std::optional<RatFnQ> primitive_scalar;   // computed: -4(R+1) q
    RatFnQ paper_middle_scalar;               // displayed: 4(n+1) q
    RatFnQ paper_primitive_scalar;            // displayed: -2n q
    FrobeniusData<RatFnQ> extension;
    FrobeniusData<Rational> specialized;
};

SemisimpleClassification classify_semisimple(const HypersurfaceSpec& spec, const Rational& r);

}  // namespace qeuler
