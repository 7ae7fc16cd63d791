#pragma once

#include <optional>
#include <vector>

#include "wdvvkit/report.hpp"
#include "wdvvkit/wdvv.hpp"

namespace wdvvkit {

/// Flat-coordinate data of a candidate Frobenius structure: a constant metric
/// g, structure constants C[j].at(l,k) = C^l_jk of the product
/// ∂_j ∘ ∂_k = C^l_jk ∂_l, and the 1-based coordinate direction of the unity
/// field. Construction does not validate; check_axioms turns every defect
/// into a verdict.
struct FrobeniusData {
    VarCtxPtr ctx;
    std::vector<std::vector<Rat>> g;
    std::vector<PolyMatrix> C;
    int e_index = 1;
};

/// Builds FrobeniusData from a prepotential: g is the constant pivot slice,
/// C_j the normalized structure matrices, e the pivot direction. Requires the
/// quadratic constraints to hold with a constant pivot slice; refused with
/// PreconditionError otherwise (without constancy there is no flat metric in
/// these coordinates). Verifies g_ml C^l_jk = ∂³F exactly.
FrobeniusData from_prepotential(const Prepotential& P);

struct AxiomReport {
    bool flat = false;        // g symmetric with nonzero determinant
    bool compatible = false;  // c_jkm = g_ml C^l_jk totally symmetric
    bool unity = false;       // C_e is the identity
    bool cov_const_e = false; // constant metric + coordinate unity field
    bool potential = false;   // dc_jkl totally symmetric: c_jkl = third partials
    bool associative = false; // pairwise commutators of the C_j vanish
    std::optional<Poly> F_reconstructed;
    Report detail;
};

/// Checks the five axioms in their flat-coordinate reductions plus product
/// associativity; reconstructs the prepotential when the compatibility and
/// potential axioms hold, and cross-checks it against the quadratic
/// constraints when everything passes. Never throws on bad data.
AxiomReport check_axioms(const FrobeniusData& D);

/// F with third partials c_jkm = g_ml C^l_jk, normalized so F, its gradient
/// and its Hessian vanish at the origin. Requires the compatibility and
/// potential axioms; the result is verified to satisfy the quadratic
/// constraints with pivot e. PreconditionError on any violation.
Poly reconstruct_prepotential(const FrobeniusData& D);

} // namespace wdvvkit
