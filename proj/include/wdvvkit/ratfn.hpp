#pragma once

#include <span>
#include <string>

#include "wdvvkit/poly.hpp"

namespace wdvvkit {

/// Quotient of two polynomials, kept in canonical form: numerator and
/// denominator are coprime, the denominator has integer coefficients with
/// content 1 and positive leading coefficient. Equal rational functions
/// therefore compare equal componentwise.
class RatFn {
public:
    explicit RatFn(VarCtxPtr ctx);
    RatFn(Poly num, Poly den);
    explicit RatFn(Poly num);

    static RatFn zero(VarCtxPtr ctx);
    static RatFn one(VarCtxPtr ctx);
    static RatFn constant(VarCtxPtr ctx, const Rat& c);

    const VarCtxPtr& ctx() const { return num_.ctx(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RatFn operator-() const;
    RatFn operator+(const RatFn& o) const;
    RatFn operator-(const RatFn& o) const;
    RatFn operator*(const RatFn& o) const;
    RatFn operator/(const RatFn& o) const; // throws Error when o == 0
    RatFn& operator+=(const RatFn& o);
    RatFn& operator-=(const RatFn& o);

    RatFn diff(int i) const;

    /// Exact evaluation; throws Error when the denominator vanishes at point.
    Rat eval(std::span<const Rat> point) const;

    friend bool operator==(const RatFn& a, const RatFn& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFn& a, const RatFn& b) { return !(a == b); }

    /// "num" when the denominator is 1, else "(num)/(den)".
    std::string str() const;

private:
    void reduce();
    /// Skips the coprimality gcd; callers guarantee gcd(n, d) is constant.
    static RatFn from_coprime(Poly n, Poly d);
    Poly num_;
    Poly den_;
};

} // namespace wdvvkit
