#pragma once

#include <string>
#include <vector>

#include "wdvvkit/matrix.hpp"

namespace wdvvkit {

/// A candidate solution F(x1..xn) together with the distinguished index used
/// to invert one Hessian-derivative slice. `pivot` is 1-based.
struct Prepotential {
    VarCtxPtr ctx;
    Poly F;
    int pivot = 1;

    Prepotential(VarCtxPtr c, Poly f, int p = 1);
};

/// Hessian h = (d^2 F / dx_j dx_l) and its coordinate derivatives
/// c[j] = dh/dx_{j+1}, with the pivot slice's determinant and adjugate.
struct HessianData {
    PolyMatrix h;
    std::vector<PolyMatrix> c;
    Poly det_pivot;
    PolyMatrix adj_pivot;
    int pivot;
    bool pivot_degenerate;
};

HessianData hessian_data(const Prepotential& p);

/// Location of a nonzero residual entry, 1-based, plus the leading monomial
/// of that entry as a witness string.
struct WdvvWitness {
    int j;
    int l;
    int row;
    int col;
    std::string monomial;
};

struct WdvvVerdict {
    bool satisfied = false;
    bool ordinary = false;
    std::vector<WdvvWitness> witnesses;
    bool pivot_degenerate = false;
};

/// Denominator-cleared residuals R_jl = c_j adj(c_p) c_l - c_l adj(c_p) c_j
/// for all pairs j < l. The system of quadratic constraints holds exactly
/// when every returned matrix is zero. Throws DegeneratePivotError when the
/// pivot slice's determinant is identically zero.
std::vector<PolyMatrix> wdvv_residuals(const Prepotential& p);

/// Full verdict: `satisfied` when all residuals vanish, `ordinary` when the
/// pivot slice is additionally constant. Collects one witness per failing
/// pair. Throws DegeneratePivotError when the pivot slice is singular.
WdvvVerdict check_wdvv(const Prepotential& p);

/// Structure matrices C_j = c_p^{-1} c_j as adj(c_p) c_j over det(c_p),
/// not reduced. Throws DegeneratePivotError when the pivot slice is singular.
std::vector<RatOperator> structure_matrices(const Prepotential& p);

} // namespace wdvvkit
