#pragma once

#include <utility>
#include <vector>

#include "wdvvkit/poly.hpp"

namespace wdvvkit {

/// Dense square matrix of polynomials, row-major.
class PolyMatrix {
public:
    PolyMatrix(VarCtxPtr ctx, int n);
    static PolyMatrix identity(VarCtxPtr ctx, int n);

    const VarCtxPtr& ctx() const { return ctx_; }
    int size() const { return n_; }

    Poly& at(int i, int j) { return data_[static_cast<std::size_t>(i * n_ + j)]; }
    const Poly& at(int i, int j) const { return data_[static_cast<std::size_t>(i * n_ + j)]; }

    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator*(const Poly& s) const;
    PolyMatrix transpose() const;

    bool is_zero() const;
    bool is_symmetric() const;

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }

private:
    void check_compatible(const PolyMatrix& o) const;
    VarCtxPtr ctx_;
    int n_;
    std::vector<Poly> data_;
};

/// Exact determinant by fraction-free elimination.
Poly det_bareiss(const PolyMatrix& m);

/// Determinant together with the adjugate: m * adj = adj * m = det * I.
std::pair<Poly, PolyMatrix> det_adj(const PolyMatrix& m);

/// Matrix of rational functions with a single shared denominator, i.e. the
/// operator num/den entrywise. reduce() divides out the common polynomial
/// factor and normalizes the denominator's scale.
struct RatOperator {
    PolyMatrix num;
    Poly den;

    RatOperator(PolyMatrix num_in, Poly den_in);
    int size() const { return num.size(); }
    const VarCtxPtr& ctx() const { return num.ctx(); }
    void reduce();

    friend bool operator==(const RatOperator& a, const RatOperator& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const RatOperator& a, const RatOperator& b) { return !(a == b); }
};

} // namespace wdvvkit
