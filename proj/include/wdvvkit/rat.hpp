#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "wdvvkit/errors.hpp"

namespace wdvvkit {

using BigInt = mpz_class;

/// Exact rational number. Always canonical: gcd(|num|, den) = 1, den >= 1,
/// zero is 0/1. All arithmetic is exact; there is no floating point mode.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {} // NOLINT: implicit by design, lets 0/1/-2 literals flow
    Rat(const BigInt& n) : v_(n) {}
    Rat(long num, long den);
    Rat(const BigInt& num, const BigInt& den);

    /// Parses "p" or "p/q" with optional leading '-'. Throws Error on bad input.
    static Rat from_string(const std::string& s);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    BigInt num() const { return v_.get_num(); }
    BigInt den() const { return v_.get_den(); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }

    Rat abs() const { return Rat(mpq_class(::abs(v_))); }
    Rat inv() const;
    Rat pow(unsigned e) const;

    /// Canonical text form: "p" when den = 1, else "p/q".
    std::string str() const;

    const mpq_class& raw() const { return v_; }
    explicit Rat(mpq_class v) : v_(std::move(v)) {}

private:
    mpq_class v_;
};

inline Rat::Rat(long num, long den) {
    if (den == 0) throw Error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

inline Rat::Rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error("rational with zero denominator");
    v_ = mpq_class(num) / mpq_class(den);
}

inline Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw Error("division by zero");
    v_ /= o.v_;
    return *this;
}

inline Rat Rat::inv() const {
    if (is_zero()) throw Error("inverse of zero");
    return Rat(mpq_class(1) / v_);
}

inline Rat Rat::pow(unsigned e) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), e);
    mpq_class r(n);
    r /= mpq_class(d);
    return Rat(std::move(r));
}

inline Rat Rat::from_string(const std::string& s) {
    if (s.empty()) throw Error("empty rational literal");
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw Error("bad rational literal: '" + s + "'");
    if (v.get_den() == 0) throw Error("rational with zero denominator: '" + s + "'");
    v.canonicalize();
    return Rat(std::move(v));
}

inline std::string Rat::str() const {
    return v_.get_str();
}

} // namespace wdvvkit
