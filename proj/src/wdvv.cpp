#include "wdvvkit/wdvv.hpp"

#include "wdvvkit/errors.hpp"

namespace wdvvkit {

Prepotential::Prepotential(VarCtxPtr c, Poly f, int p) : ctx(std::move(c)), F(std::move(f)), pivot(p) {
    if (!same_ctx(ctx, F.ctx())) throw Error("prepotential context mismatch");
    if (pivot < 1 || pivot > ctx->size()) throw Error("pivot index out of range");
}

HessianData hessian_data(const Prepotential& p) {
    const int n = p.ctx->size();
    PolyMatrix h(p.ctx, n);
    for (int j = 0; j < n; ++j) {
        Poly fj = p.F.diff(j);
        for (int l = j; l < n; ++l) {
            h.at(j, l) = fj.diff(l);
            if (l != j) h.at(l, j) = h.at(j, l);
        }
    }
    std::vector<PolyMatrix> c;
    c.reserve(static_cast<std::size_t>(n));
    for (int m = 0; m < n; ++m) {
        PolyMatrix cm(p.ctx, n);
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l) cm.at(j, l) = h.at(j, l).diff(m);
        c.push_back(std::move(cm));
    }
    auto [det, adj] = det_adj(c[static_cast<std::size_t>(p.pivot - 1)]);
    const bool degenerate = det.is_zero();
    return HessianData{std::move(h), std::move(c), std::move(det), std::move(adj), p.pivot, degenerate};
}

namespace {

std::vector<PolyMatrix> residuals_from(const HessianData& hd) {
    const int n = hd.h.size();
    std::vector<PolyMatrix> out;
    std::vector<PolyMatrix> right; // adj_pivot * c_l, reused across pairs
    right.reserve(static_cast<std::size_t>(n));
    for (int l = 0; l < n; ++l) right.push_back(hd.adj_pivot * hd.c[static_cast<std::size_t>(l)]);
    for (int j = 0; j < n; ++j)
        for (int l = j + 1; l < n; ++l)
            out.push_back(hd.c[static_cast<std::size_t>(j)] * right[static_cast<std::size_t>(l)] -
                          hd.c[static_cast<std::size_t>(l)] * right[static_cast<std::size_t>(j)]);
    return out;
}

} // namespace

std::vector<PolyMatrix> wdvv_residuals(const Prepotential& p) {
    HessianData hd = hessian_data(p);
    if (hd.pivot_degenerate)
        throw DegeneratePivotError("pivot slice has identically zero determinant");
    return residuals_from(hd);
}

WdvvVerdict check_wdvv(const Prepotential& p) {
    HessianData hd = hessian_data(p);
    if (hd.pivot_degenerate)
        throw DegeneratePivotError("pivot slice has identically zero determinant");
    const int n = hd.h.size();
    WdvvVerdict v;
    v.satisfied = true;
    std::vector<PolyMatrix> res = residuals_from(hd);
    std::size_t idx = 0;
    for (int j = 0; j < n; ++j)
        for (int l = j + 1; l < n; ++l, ++idx) {
            const PolyMatrix& r = res[idx];
            for (int a = 0; a < n; ++a) {
                bool found = false;
                for (int b = 0; b < n; ++b) {
                    if (!r.at(a, b).is_zero()) {
                        v.witnesses.push_back(
                            WdvvWitness{j + 1, l + 1, a + 1, b + 1, r.at(a, b).leading_term_str()});
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
        }
    v.satisfied = v.witnesses.empty();
    const PolyMatrix& cp = hd.c[static_cast<std::size_t>(hd.pivot - 1)];
    v.ordinary = true;
    for (int a = 0; a < n && v.ordinary; ++a)
        for (int b = 0; b < n; ++b)
            if (!cp.at(a, b).is_constant()) {
                v.ordinary = false;
                break;
            }
    return v;
}

std::vector<RatOperator> structure_matrices(const Prepotential& p) {
    HessianData hd = hessian_data(p);
    if (hd.pivot_degenerate)
        throw DegeneratePivotError("pivot slice has identically zero determinant");
    const int n = hd.h.size();
    std::vector<RatOperator> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        out.emplace_back(hd.adj_pivot * hd.c[static_cast<std::size_t>(j)], hd.det_pivot);
    return out;
}

} // namespace wdvvkit
