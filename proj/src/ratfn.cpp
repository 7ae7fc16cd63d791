#include "wdvvkit/ratfn.hpp"

#include "wdvvkit/errors.hpp"

namespace wdvvkit {

RatFn::RatFn(VarCtxPtr ctx) : num_(ctx), den_(Poly::constant(ctx, Rat(1))) {}

RatFn::RatFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (!same_ctx(num_.ctx(), den_.ctx())) throw Error("mixed variable contexts");
    if (den_.is_zero()) throw Error("rational function with zero denominator");
    reduce();
}

RatFn::RatFn(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.ctx(), Rat(1))) {}

RatFn RatFn::zero(VarCtxPtr ctx) { return RatFn(std::move(ctx)); }

RatFn RatFn::one(VarCtxPtr ctx) { return RatFn(Poly::constant(std::move(ctx), Rat(1))); }

RatFn RatFn::constant(VarCtxPtr ctx, const Rat& c) {
    return RatFn(Poly::constant(std::move(ctx), c));
}

void RatFn::reduce() {
    if (num_.is_zero()) {
        den_ = Poly::constant(num_.ctx(), Rat(1));
        return;
    }
    if (!den_.is_constant()) {
        Poly g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = *divide_exact(num_, g);
            den_ = *divide_exact(den_, g);
        }
    }
    auto [dc, s] = primitive_scale(den_);
    den_ = std::move(dc);
    num_ = num_ * s;
}

RatFn RatFn::from_coprime(Poly n, Poly d) {
    RatFn r(n.ctx());
    if (n.is_zero()) return r;
    auto [dc, s] = primitive_scale(d);
    r.num_ = n * s;
    r.den_ = std::move(dc);
    return r;
}

RatFn RatFn::operator-() const {
    RatFn r = *this;
    r.num_ = -r.num_;
    return r;
}

// Sums and products stay reduced without a gcd on the cross-multiplied
// results: with coprime operands, gcd work only happens between the small
// parts (Knuth 4.5.1 addition, Henrici multiplication).

RatFn RatFn::operator+(const RatFn& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    Poly g = poly_gcd(den_, o.den_);
    if (g.is_constant()) return from_coprime(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    Poly d1 = *divide_exact(den_, g);
    Poly d2 = *divide_exact(o.den_, g);
    Poly t = num_ * d2 + o.num_ * d1;
    if (t.is_zero()) return zero(ctx());
    Poly h = poly_gcd(t, g);
    if (h.is_constant()) return from_coprime(std::move(t), den_ * d2);
    return from_coprime(*divide_exact(t, h), d1 * *divide_exact(o.den_, h));
}

RatFn RatFn::operator-(const RatFn& o) const { return *this + (-o); }

RatFn RatFn::operator*(const RatFn& o) const {
    if (is_zero() || o.is_zero()) return zero(ctx());
    Poly n1 = num_, d2 = o.den_;
    Poly g1 = poly_gcd(n1, d2);
    if (!g1.is_constant()) {
        n1 = *divide_exact(n1, g1);
        d2 = *divide_exact(d2, g1);
    }
    Poly n2 = o.num_, d1 = den_;
    Poly g2 = poly_gcd(n2, d1);
    if (!g2.is_constant()) {
        n2 = *divide_exact(n2, g2);
        d1 = *divide_exact(d1, g2);
    }
    return from_coprime(n1 * n2, d1 * d2);
}

RatFn RatFn::operator/(const RatFn& o) const {
    if (o.is_zero()) throw Error("division by zero rational function");
    if (is_zero()) return zero(ctx());
    Poly n1 = num_, n2 = o.num_;
    Poly g1 = poly_gcd(n1, n2);
    if (!g1.is_constant()) {
        n1 = *divide_exact(n1, g1);
        n2 = *divide_exact(n2, g1);
    }
    Poly d1 = den_, d2 = o.den_;
    Poly g2 = poly_gcd(d1, d2);
    if (!g2.is_constant()) {
        d1 = *divide_exact(d1, g2);
        d2 = *divide_exact(d2, g2);
    }
    return from_coprime(n1 * d2, d1 * n2);
}

RatFn& RatFn::operator+=(const RatFn& o) { return *this = *this + o; }
RatFn& RatFn::operator-=(const RatFn& o) { return *this = *this - o; }

RatFn RatFn::diff(int i) const {
    if (is_zero()) return zero(ctx());
    Poly nd = num_.diff(i);
    if (den_.is_constant()) return from_coprime(std::move(nd), den_);
    Poly dd = den_.diff(i);
    if (dd.is_zero()) return RatFn(std::move(nd), den_);
    Poly g = poly_gcd(den_, dd);
    // A prime of the denominator divides n'd - nd' only through gcd(d, d'),
    // so nothing cancels when that gcd is trivial.
    if (g.is_constant()) return from_coprime(nd * den_ - num_ * dd, den_ * den_);
    Poly e = *divide_exact(den_, g);
    return RatFn(nd * e - num_ * *divide_exact(dd, g), den_ * e);
}

Rat RatFn::eval(std::span<const Rat> point) const {
    Rat d = den_.eval(point);
    if (d.is_zero()) throw Error("denominator vanishes at evaluation point");
    return num_.eval(point) / d;
}

std::string RatFn::str() const {
    if (den_.is_constant()) {
        // canonical form makes a constant denominator exactly 1
        return num_.str();
    }
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

} // namespace wdvvkit
