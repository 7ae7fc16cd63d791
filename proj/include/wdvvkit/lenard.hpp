#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wdvvkit/matrix.hpp"
#include "wdvvkit/ratfn.hpp"
#include "wdvvkit/report.hpp"

namespace wdvvkit {

/// Symmetric n×n array of polynomial functions A_jl with a distinguished row
/// (1-based pivot, default 1) whose differentials dA_{pivot,l} play the role
/// of a frame of 1-forms.
struct SquareOfFunctions {
    VarCtxPtr ctx;
    PolyMatrix A;
    int pivot = 1;

    explicit SquareOfFunctions(PolyMatrix a, int pivot_row = 1);
};

/// (1,1)-tensor K = num/den with a scalar polynomial denominator. Acts on
/// 1-forms by row contraction (Kθ)_m = Σ_p θ_p K^p_m and on vector fields by
/// column contraction (KX)^i = Σ_m K^i_m X^m; the two actions are dual.
struct RecursionOperator {
    PolyMatrix num;
    Poly den;
    int index; // which slice of the square produced this operator, 1-based

    RecursionOperator(PolyMatrix n, Poly d, int idx);
    bool is_identity() const; // num == den * I
};

struct VectorField {
    VarCtxPtr ctx;
    std::vector<RatFn> comp;

    explicit VectorField(VarCtxPtr c);
    static VectorField basis(VarCtxPtr c, int i); // d/dx_{i+1}, 0-based i
    bool is_zero() const;
};

struct OneForm {
    VarCtxPtr ctx;
    std::vector<RatFn> comp;

    explicit OneForm(VarCtxPtr c);
    bool is_zero() const;
};

/// Components T^i_{jk} of a (1,2)-tensor, antisymmetric in the lower pair.
struct Tensor12 {
    VarCtxPtr ctx;
    int n;
    std::vector<RatFn> comp; // flattened (i*n + j)*n + k

    Tensor12(VarCtxPtr c, int dim);
    const RatFn& at(int i, int j, int k) const;
    RatFn& at(int i, int j, int k);
    bool is_zero() const;
    /// First nonzero component as "(i,j,k)" 1-based, empty when zero.
    std::string nonzero_witness() const;
};

/// Operators K_j solving M_pivot · K_j = M_j exactly, where
/// M_j[l][m] = ∂A_jl/∂x_m, realized as (adj(M_pivot)·M_j) / det(M_pivot)
/// and gcd-reduced; K_pivot reduces to the identity. Throws
/// DegeneratePivotError when det(M_pivot) is identically zero.
std::vector<RecursionOperator> recursion_operators(const SquareOfFunctions& S);

VectorField apply_op(const RecursionOperator& K, const VectorField& X);
OneForm apply_op_form(const RecursionOperator& K, const OneForm& theta);

/// Differential of a scalar: (df)_m = ∂f/∂x_m.
OneForm differential(const Poly& f);

/// [X,Y]^i = Σ_m (X^m ∂_m Y^i - Y^m ∂_m X^i).
VectorField lie_bracket(const VectorField& X, const VectorField& Y);

/// (dθ)_{ij} = ∂_i θ_j - ∂_j θ_i, returned as the full antisymmetric matrix.
std::vector<std::vector<RatFn>> d_oneform(const OneForm& theta);
bool oneform_closed(const OneForm& theta);

/// Chain X_j = K_j X in operator order.
std::vector<VectorField> lenard_chain(const std::vector<RecursionOperator>& ops,
                                      const VectorField& X);

/// 3-point functions c_{jlm} = dA_jl(X_m), flattened (j*n + l)*n + m.
struct CorrelationTable {
    VarCtxPtr ctx;
    int n;
    std::vector<RatFn> c;

    CorrelationTable(VarCtxPtr ctx_in, int dim);
    const RatFn& at(int j, int l, int m) const;
    RatFn& at(int j, int l, int m);
};

CorrelationTable correlations(const SquareOfFunctions& S,
                              const std::vector<VectorField>& chain);

/// First pair of index triples (1-based, as "c(j,l,m) != c(j',l',m')") on
/// which total symmetry fails, or nullopt when symmetric.
std::optional<std::string> correlation_symmetry_witness(const CorrelationTable& t);

/// Clauses: chain_commutes, chain_independent, correlations_symmetric.
/// Throws DegeneratePivotError when the pivot-row Jacobian is singular.
Report check_lemma1(const SquareOfFunctions& S, const VectorField& X);

/// Potential of a closed polynomial 1-form with components grad[j], zero at
/// the origin together with the potential's value: every degree-d monomial of
/// Σ x_j·grad_j is divided by d. The gradient of the result equals grad
/// exactly when the form is closed.
Poly potential_of_closed_form(const VarCtxPtr& ctx, const std::vector<Poly>& grad);

/// Recovers F with Hessian(F) = A exactly, normalized so F and its first
/// derivatives vanish at the origin. Requires ∂_m A_jl totally symmetric in
/// (j,l,m); throws PreconditionError otherwise.
Poly integrate_hessian(const SquareOfFunctions& S);

/// True when ∂_m A_jl is totally symmetric, i.e. A is a Hessian.
bool hessian_integrable(const SquareOfFunctions& S);

/// Clauses: operators_commute, wdvv_cross_check (commutation verdict against
/// the quadratic-constraint verdict of the integrated potential, when A is a
/// Hessian), proposition_correspondence (full complex verdict against the
/// same, when the chain conditions also hold).
Report check_lemma2(const SquareOfFunctions& S, const VectorField& X);

/// Componentwise Nijenhuis torsion
/// N^i_{jk} = Σ_m (K^m_j ∂_m K^i_k - K^m_k ∂_m K^i_j)
///          - Σ_m K^i_m (∂_j K^m_k - ∂_k K^m_j).
Tensor12 nijenhuis(const RecursionOperator& K);

/// Componentwise Haantjes torsion
/// H(X,Y) = K²N(X,Y) + N(KX,KY) - K(N(KX,Y) + N(X,KY)).
Tensor12 haantjes(const RecursionOperator& K);

/// Bracket-form evaluations, used as independent oracles for the component
/// formulas: N(X,Y) = [KX,KY] - K[KX,Y] - K[X,KY] + K(K[X,Y]).
VectorField nijenhuis_apply(const RecursionOperator& K, const VectorField& X,
                            const VectorField& Y);
VectorField haantjes_apply(const RecursionOperator& K, const VectorField& X,
                           const VectorField& Y);

/// (T(X,Y))^i = Σ_{jk} T^i_{jk} X^j Y^k.
VectorField contract(const Tensor12& T, const VectorField& X, const VectorField& Y);

/// Clauses: operators_commute, chain_commutes, theta_chain_closed,
/// theta_square_closed, unity, haantjes_zero; every clause is evaluated even
/// when earlier ones fail. The 1-forms are θ_j = K_j dA and θ_jl = K_jK_l dA
/// with dA the differential of A_potential.
Report check_lenard_complex(const VectorField& X, const Poly& A_potential,
                            const std::vector<RecursionOperator>& ops);

} // namespace wdvvkit
