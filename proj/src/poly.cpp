#include "wdvvkit/poly.hpp"

#include <algorithm>
#include <sstream>

namespace wdvvkit {

unsigned expo_degree(const Expo& e) {
    unsigned d = 0;
    for (auto k : e) d += k;
    return d;
}

bool GrlexDesc::operator()(const Expo& a, const Expo& b) const {
    unsigned da = expo_degree(a), db = expo_degree(b);
    if (da != db) return da > db;
    return a > b; // lexicographic tie-break, x1 heaviest
}

Poly::Poly(VarCtxPtr ctx) : ctx_(std::move(ctx)) {
    if (!ctx_) throw Error("null variable context");
}

Poly Poly::constant(VarCtxPtr ctx, const Rat& c) {
    Poly p(std::move(ctx));
    if (!c.is_zero()) p.terms_.emplace(Expo(static_cast<std::size_t>(p.nvars()), 0), c);
    return p;
}

Poly Poly::variable(VarCtxPtr ctx, int i) {
    Poly p(std::move(ctx));
    if (i < 0 || i >= p.nvars()) throw std::out_of_range("variable index out of range");
    Expo e(static_cast<std::size_t>(p.nvars()), 0);
    e[static_cast<std::size_t>(i)] = 1;
    p.terms_.emplace(std::move(e), Rat(1));
    return p;
}

Poly Poly::monomial(VarCtxPtr ctx, Expo e, const Rat& c) {
    Poly p(std::move(ctx));
    if (e.size() != static_cast<std::size_t>(p.nvars())) throw Error("exponent vector length mismatch");
    if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && expo_degree(terms_.begin()->first) == 0);
}

Rat Poly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw Error("constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

unsigned Poly::total_degree() const {
    return terms_.empty() ? 0u : expo_degree(terms_.begin()->first);
}

unsigned Poly::degree_in(int i) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(i)]);
    return d;
}

Rat Poly::leading_coeff() const {
    return terms_.empty() ? Rat(0) : terms_.begin()->second;
}

void Poly::check_same_ctx(const Poly& o) const {
    if (!same_ctx(ctx_, o.ctx_)) throw Error("mixed variable contexts");
}

void Poly::add_term(const Expo& e, const Rat& c) {
    if (e.size() != static_cast<std::size_t>(nvars())) throw Error("exponent vector length mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(ctx_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    check_same_ctx(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_same_ctx(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    return r += o;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    return r -= o;
}

Poly Poly::operator*(const Poly& o) const {
    check_same_ctx(o);
    Poly r(ctx_);
    const std::size_t n = static_cast<std::size_t>(nvars());
    Expo e(n, 0);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Poly Poly::operator*(const Rat& c) const {
    Poly r(ctx_);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly acc = Poly::constant(ctx_, Rat(1));
    Poly base = *this;
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return acc;
}

Poly Poly::diff(int i) const {
    if (i < 0 || i >= nvars()) throw std::out_of_range("derivative index out of range");
    Poly r(ctx_);
    const auto ix = static_cast<std::size_t>(i);
    for (const auto& [e, c] : terms_) {
        if (e[ix] == 0) continue;
        Expo d = e;
        d[ix] -= 1;
        r.terms_.emplace(std::move(d), c * Rat(static_cast<long>(e[ix])));
    }
    return r;
}

Rat Poly::eval(std::span<const Rat> point) const {
    if (point.size() != static_cast<std::size_t>(nvars())) throw Error("evaluation point length mismatch");
    Rat acc(0);
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (std::size_t i = 0; i < point.size(); ++i)
            if (e[i] > 0) t *= point[i].pow(e[i]);
        acc += t;
    }
    return acc;
}

bool operator==(const Poly& a, const Poly& b) {
    return same_ctx(a.ctx_, b.ctx_) && a.terms_ == b.terms_;
}

namespace {

void print_term(std::ostream& os, const VarCtx& ctx, const Expo& e, const Rat& coeff_abs) {
    bool have_vars = expo_degree(e) > 0;
    bool printed = false;
    if (!have_vars || !coeff_abs.is_one()) {
        os << coeff_abs.str();
        printed = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (printed) os << "*";
        os << ctx.name(static_cast<int>(i));
        if (e[i] > 1) os << "^" << e[i];
        printed = true;
    }
}

} // namespace

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            if (c.sign() < 0) os << "-";
            print_term(os, *ctx_, e, c.abs());
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            print_term(os, *ctx_, e, c.abs());
        }
    }
    return os.str();
}

std::string Poly::leading_term_str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    const auto& [e, c] = *terms_.begin();
    if (c.sign() < 0) os << "-";
    print_term(os, *ctx_, e, c.abs());
    return os.str();
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error("exact division by zero polynomial");
    Poly q(a.ctx());
    Poly r = a;
    const auto& eb = b.terms().begin()->first;
    const Rat cb = b.leading_coeff();
    const std::size_t n = eb.size();
    while (!r.is_zero()) {
        const auto& [er, cr] = *r.terms().begin();
        Expo t(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (er[i] < eb[i]) return std::nullopt;
            t[i] = er[i] - eb[i];
        }
        Poly mono = Poly::monomial(a.ctx(), std::move(t), cr / cb);
        q += mono;
        r -= mono * b;
    }
    return q;
}

std::pair<Poly, Rat> primitive_scale(const Poly& p) {
    if (p.is_zero()) return {p, Rat(1)};
    // lcm of denominators, then gcd of the resulting integer coefficients
    BigInt den_lcm = 1;
    for (const auto& [e, c] : p.terms()) {
        BigInt d = c.den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    BigInt num_gcd = 0;
    for (const auto& [e, c] : p.terms()) {
        BigInt scaled = c.num() * (den_lcm / c.den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    Rat s(den_lcm, num_gcd);
    if (p.leading_coeff().sign() < 0) s = -s;
    return {p * s, s};
}

namespace {

int pick_main_var(const Poly& a, const Poly& b) {
    for (int i = 0; i < a.nvars(); ++i)
        if (a.degree_in(i) > 0 || b.degree_in(i) > 0) return i;
    return -1;
}

// Coefficients of p viewed as univariate in variable v (index -> coefficient
// polynomial with the v-exponent zeroed out).
std::map<unsigned, Poly> univariate_view(const Poly& p, int v) {
    std::map<unsigned, Poly> out;
    const auto vi = static_cast<std::size_t>(v);
    for (const auto& [e, c] : p.terms()) {
        unsigned k = e[vi];
        Expo rest = e;
        rest[vi] = 0;
        auto it = out.find(k);
        if (it == out.end()) it = out.emplace(k, Poly(p.ctx())).first;
        it->second.add_term(rest, c);
    }
    return out;
}

Poly content_in(const Poly& p, int v) {
    Poly g(p.ctx());
    for (const auto& [k, coeff] : univariate_view(p, v)) {
        g = poly_gcd(g, coeff);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

Poly primitive_part_in(const Poly& p, int v) {
    Poly c = content_in(p, v);
    auto q = divide_exact(p, c);
    if (!q) throw Error("internal: content does not divide polynomial");
    return *q;
}

Poly leading_coeff_in(const Poly& p, int v) {
    const unsigned d = p.degree_in(v);
    Poly lc(p.ctx());
    const auto vi = static_cast<std::size_t>(v);
    for (const auto& [e, c] : p.terms())
        if (e[vi] == d) {
            Expo rest = e;
            rest[vi] = 0;
            lc.add_term(rest, c);
        }
    return lc;
}

// Full pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + rem, deg_v rem < deg_v b.
Poly pseudo_rem(Poly r, const Poly& b, int v) {
    const unsigned db = b.degree_in(v);
    const unsigned da = r.degree_in(v);
    const Poly lc_b = leading_coeff_in(b, v);
    Expo xpow(static_cast<std::size_t>(b.nvars()), 0);
    unsigned steps = 0;
    while (!r.is_zero()) {
        const unsigned dr = r.degree_in(v);
        if (dr < db) break;
        const Poly lc_r = leading_coeff_in(r, v);
        xpow[static_cast<std::size_t>(v)] = dr - db;
        r = r * lc_b - b * (lc_r * Poly::monomial(b.ctx(), xpow, Rat(1)));
        ++steps;
    }
    // normalize to the multiplier the subresultant divisions assume
    for (unsigned s = steps; s < da - db + 1; ++s) r = r * lc_b;
    return r;
}

} // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return primitive_scale(b).first;
    if (b.is_zero()) return primitive_scale(a).first;
    if (a.is_constant() || b.is_constant()) return Poly::constant(a.ctx(), Rat(1));
    if (a == b) return primitive_scale(a).first;

    int v = pick_main_var(a, b);
    if (a.degree_in(v) == 0) return poly_gcd(a, content_in(b, v));
    if (b.degree_in(v) == 0) return poly_gcd(content_in(a, v), b);

    const Poly cg = poly_gcd(content_in(a, v), content_in(b, v));
    Poly A = primitive_part_in(a, v);
    Poly B = primitive_part_in(b, v);
    if (A.degree_in(v) < B.degree_in(v)) std::swap(A, B);

    // subresultant remainder sequence: divides each pseudo-remainder by the
    // predicted factor g*h^delta, bounding coefficient growth without
    // per-step content extraction
    const Poly one = Poly::constant(a.ctx(), Rat(1));
    Poly g = one, h = one;
    Poly result(a.ctx());
    while (true) {
        const unsigned delta = A.degree_in(v) - B.degree_in(v);
        Poly R = pseudo_rem(A, B, v);
        if (R.is_zero()) {
            result = primitive_part_in(B, v);
            break;
        }
        if (R.degree_in(v) == 0) {
            result = one;
            break;
        }
        Poly divisor = g;
        for (unsigned s = 0; s < delta; ++s) divisor = divisor * h;
        A = std::move(B);
        auto q = divide_exact(R, divisor);
        if (!q) throw Error("internal: subresultant division failed");
        B = std::move(*q);
        g = leading_coeff_in(A, v);
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            Poly gd = g;
            for (unsigned s = 1; s < delta; ++s) gd = gd * g;
            Poly hd = one;
            for (unsigned s = 1; s < delta; ++s) hd = hd * h;
            auto hq = divide_exact(gd, hd);
            if (!hq) throw Error("internal: subresultant h-update failed");
            h = std::move(*hq);
        }
        if (A.degree_in(v) == 0) {
            // cannot happen: loop exits earlier on constant remainders
            result = one;
            break;
        }
    }
    return primitive_scale(cg * result).first;
}

} // namespace wdvvkit
