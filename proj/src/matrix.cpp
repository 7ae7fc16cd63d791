#include "wdvvkit/matrix.hpp"

#include <algorithm>

#include "wdvvkit/errors.hpp"

namespace wdvvkit {

PolyMatrix::PolyMatrix(VarCtxPtr ctx, int n) : ctx_(std::move(ctx)), n_(n) {
    if (!ctx_) throw Error("null variable context");
    if (n_ <= 0) throw Error("matrix size must be positive");
    data_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), Poly(ctx_));
}

PolyMatrix PolyMatrix::identity(VarCtxPtr ctx, int n) {
    PolyMatrix m(std::move(ctx), n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Poly::constant(m.ctx_, Rat(1));
    return m;
}

void PolyMatrix::check_compatible(const PolyMatrix& o) const {
    if (n_ != o.n_) throw Error("matrix size mismatch");
    if (!same_ctx(ctx_, o.ctx_)) throw Error("mixed variable contexts");
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    check_compatible(o);
    PolyMatrix r = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
    return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
    check_compatible(o);
    PolyMatrix r = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] -= o.data_[k];
    return r;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    check_compatible(o);
    PolyMatrix r(ctx_, n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const Poly& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < n_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

PolyMatrix PolyMatrix::operator*(const Poly& s) const {
    PolyMatrix r = *this;
    for (auto& p : r.data_) p = p * s;
    return r;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix r(ctx_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool PolyMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Poly& p) { return p.is_zero(); });
}

bool PolyMatrix::is_symmetric() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.n_ == b.n_ && same_ctx(a.ctx_, b.ctx_) && a.data_ == b.data_;
}

Poly det_bareiss(const PolyMatrix& m) {
    const int n = m.size();
    PolyMatrix a = m;
    Poly prev = Poly::constant(m.ctx(), Rat(1));
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a.at(k, k).is_zero()) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (!a.at(i, k).is_zero()) { pivot = i; break; }
            if (pivot < 0) return Poly(m.ctx()); // column of zeros below: singular
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Poly t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                auto q = divide_exact(t, prev);
                if (!q) throw Error("internal: fraction-free elimination division failed");
                a.at(i, j) = std::move(*q);
            }
            a.at(i, k) = Poly(m.ctx());
        }
        prev = a.at(k, k);
    }
    Poly d = a.at(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

std::pair<Poly, PolyMatrix> det_adj(const PolyMatrix& m) {
    const int n = m.size();
    if (n == 1) return {m.at(0, 0), PolyMatrix::identity(m.ctx(), 1)};
    PolyMatrix adj(m.ctx(), n);
    PolyMatrix minor(m.ctx(), n - 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            // adj[i][j] = (-1)^(i+j) det of m with row j, column i removed
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == j) continue;
                for (int c = 0, cc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor.at(rr, cc) = m.at(r, c);
                    ++cc;
                }
                ++rr;
            }
            Poly d = det_bareiss(minor);
            adj.at(i, j) = ((i + j) % 2 == 0) ? d : -d;
        }
    }
    // det via first-row cofactors of the already computed adjugate
    Poly det(m.ctx());
    for (int k = 0; k < n; ++k) det += m.at(0, k) * adj.at(k, 0);
    return {std::move(det), std::move(adj)};
}

RatOperator::RatOperator(PolyMatrix num_in, Poly den_in)
    : num(std::move(num_in)), den(std::move(den_in)) {
    if (!same_ctx(num.ctx(), den.ctx())) throw Error("mixed variable contexts");
    if (den.is_zero()) throw Error("operator with zero denominator");
}

void RatOperator::reduce() {
    const int n = num.size();
    Poly g = den;
    for (int i = 0; i < n && !(g.is_constant() && !g.is_zero()); ++i)
        for (int j = 0; j < n; ++j) {
            g = poly_gcd(g, num.at(i, j));
            if (g.is_constant()) break;
        }
    if (!g.is_constant()) {
        den = *divide_exact(den, g);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!num.at(i, j).is_zero()) num.at(i, j) = *divide_exact(num.at(i, j), g);
    }
    auto [dc, s] = primitive_scale(den);
    den = std::move(dc);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) num.at(i, j) = num.at(i, j) * s;
}

} // namespace wdvvkit
