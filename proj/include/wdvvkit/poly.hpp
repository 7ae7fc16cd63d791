#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wdvvkit/rat.hpp"
#include "wdvvkit/varctx.hpp"

namespace wdvvkit {

/// Dense exponent vector; entry i is the power of the i-th context variable.
using Expo = std::vector<std::uint32_t>;

unsigned expo_degree(const Expo& e);

/// Orders exponent vectors by descending graded-lexicographic rank, so a
/// term map iterates leading term first and printing is canonical.
struct GrlexDesc {
    bool operator()(const Expo& a, const Expo& b) const;
};

/// Exact multivariate polynomial over Rat in a fixed variable context.
/// Canonical form: no stored zero coefficients, terms keyed by exponent
/// vector under the graded-lex order. Equality is structural equality.
/// Immutable in spirit: every operation returns a fresh value.
class Poly {
public:
    using TermMap = std::map<Expo, Rat, GrlexDesc>;

    explicit Poly(VarCtxPtr ctx);
    static Poly constant(VarCtxPtr ctx, const Rat& c);
    static Poly variable(VarCtxPtr ctx, int i);
    static Poly monomial(VarCtxPtr ctx, Expo e, const Rat& c);

    const VarCtxPtr& ctx() const { return ctx_; }
    int nvars() const { return ctx_->size(); }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Value of a constant polynomial (0 for the zero polynomial).
    Rat constant_value() const;
    unsigned total_degree() const;
    unsigned degree_in(int i) const;

    Rat leading_coeff() const;
    /// Leading (grlex-largest) term printed as an expression, e.g. "3/2*x1^2*x2".
    std::string leading_term_str() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);

    Poly operator*(const Rat& c) const;
    friend Poly operator*(const Rat& c, const Poly& p) { return p * c; }
    Poly pow(unsigned e) const;

    /// Exact partial derivative with respect to variable index i (0-based).
    Poly diff(int i) const;
    /// Exact value at a rational point; point length must equal nvars().
    Rat eval(std::span<const Rat> point) const;

    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Canonical text form; parsing it back yields the same polynomial.
    std::string str() const;

    void add_term(const Expo& e, const Rat& c);

private:
    void check_same_ctx(const Poly& o) const;
    VarCtxPtr ctx_;
    TermMap terms_;
};

/// Quotient a/b when b divides a exactly; nullopt otherwise.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

/// Polynomial gcd over the rationals, normalized to an integer-primitive
/// polynomial with positive leading grlex coefficient (1 for coprime input,
/// 0 only for gcd(0,0)).
Poly poly_gcd(const Poly& a, const Poly& b);

/// Scales p to integer-primitive form with positive leading grlex
/// coefficient; returns the canonical poly and the factor s with p*s = canon.
std::pair<Poly, Rat> primitive_scale(const Poly& p);

} // namespace wdvvkit
