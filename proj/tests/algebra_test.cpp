#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "testutil.hpp"
#include "wdvvkit/matrix.hpp"
#include "wdvvkit/parser.hpp"
#include "wdvvkit/poly.hpp"
#include "wdvvkit/ratfn.hpp"

using namespace wdvvkit;
using testutil::p;

static VarCtxPtr ctx3() { return VarCtx::make({"x1", "x2", "x3"}); }

TEST_CASE("parser accepts the grammar and prints canonically") {
    auto ctx = ctx3();
    CHECK(p(ctx, "x1 + x2*x3").str() == "x2*x3 + x1");
    CHECK(p(ctx, "(x1+x2)^2").str() == "x1^2 + 2*x1*x2 + x2^2");
    CHECK(p(ctx, "1/2*(x1^2*x3 + x1*x2^2)").str() == "1/2*x1^2*x3 + 1/2*x1*x2^2");
    CHECK(p(ctx, "-x1 - -x2").str() == "-x1 + x2");
    CHECK(p(ctx, "x1^0").str() == "1");
    CHECK(p(ctx, "7/14").str() == "1/2");
    CHECK(p(ctx, "x1 - x1").is_zero());
    CHECK(p(ctx, "2^3").constant_value() == Rat(8));
}

TEST_CASE("parsing the printed form is the identity") {
    auto ctx = ctx3();
    auto rng = testutil::fixed_rng();
    for (int i = 0; i < 30; ++i) {
        Poly f = testutil::random_poly(ctx, 0, 4, rng);
        CHECK(p(ctx, f.str()) == f);
    }
}

TEST_CASE("parse errors carry byte offsets") {
    auto ctx = ctx3();
    auto offset_of = [&](const std::string& text) {
        try {
            p(ctx, text);
        } catch (const ParseError& e) {
            return static_cast<long>(e.offset());
        }
        return -1L;
    };
    CHECK(offset_of("x4") == 0);
    CHECK(offset_of("x1/x2") == 2);
    CHECK(offset_of("x1^(2)") == 3);
    CHECK(offset_of("x1 x2") == 3);
    CHECK(offset_of("x1/0") == 2);
    CHECK(offset_of("x1 +") == 4);
    CHECK(offset_of("(x1") == 3);
    CHECK(offset_of("x1^-2") == 3);
    CHECK(offset_of("$") == 0);
}

TEST_CASE("implicit multiplication is rejected, explicit '*' is required") {
    auto ctx = ctx3();
    CHECK_THROWS_AS(p(ctx, "2x1"), ParseError);
    CHECK_THROWS_AS(p(ctx, "x1(x2)"), ParseError);
}

TEST_CASE("polynomial arithmetic identities hold on random input") {
    auto ctx = ctx3();
    auto rng = testutil::fixed_rng();
    for (int i = 0; i < 25; ++i) {
        Poly a = testutil::random_poly(ctx, 0, 3, rng);
        Poly b = testutil::random_poly(ctx, 0, 3, rng);
        CHECK((a + b) * (a - b) == a * a - b * b);
        CHECK((a + b).pow(2) == a * a + Rat(2) * (a * b) + b * b);
        CHECK((a * b).diff(0) == a.diff(0) * b + a * b.diff(0));
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    auto ctx = ctx3();
    auto rng = testutil::fixed_rng();
    std::vector<Rat> pt{Rat(1, 2), Rat(-3), Rat(2, 5)};
    for (int i = 0; i < 20; ++i) {
        Poly a = testutil::random_poly(ctx, 0, 3, rng);
        Poly b = testutil::random_poly(ctx, 0, 3, rng);
        CHECK((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
        CHECK((a + b).eval(pt) == a.eval(pt) + b.eval(pt));
    }
}

TEST_CASE("exact division inverts multiplication and rejects non-divisors") {
    auto ctx = ctx3();
    auto rng = testutil::fixed_rng();
    for (int i = 0; i < 20; ++i) {
        Poly a = testutil::random_poly(ctx, 0, 3, rng);
        Poly b = testutil::random_poly(ctx, 1, 2, rng);
        if (b.is_zero()) continue;
        auto q = divide_exact(a * b, b);
        REQUIRE(q.has_value());
        CHECK(*q == a);
    }
    CHECK_FALSE(divide_exact(p(ctx, "x1^2 + x2"), p(ctx, "x1 + 1")).has_value());
}

TEST_CASE("gcd divides both inputs and sees planted common factors") {
    auto ctx = ctx3();
    auto rng = testutil::fixed_rng();
    for (int i = 0; i < 12; ++i) {
        Poly g = testutil::random_poly(ctx, 1, 2, rng);
        if (g.is_zero()) continue;
        Poly a = testutil::random_poly(ctx, 0, 2, rng);
        Poly b = testutil::random_poly(ctx, 0, 2, rng);
        Poly d = poly_gcd(a * g, b * g);
        CHECK(divide_exact(d, poly_gcd(g, d)).has_value()); // d contains g up to the cofactor gcd
        CHECK(divide_exact(a * g, d).has_value());
        CHECK(divide_exact(b * g, d).has_value());
    }
    CHECK(poly_gcd(p(ctx, "0"), p(ctx, "0")).is_zero());
    CHECK(poly_gcd(p(ctx, "6*x1"), p(ctx, "0")).str() == "x1");
    CHECK(poly_gcd(p(ctx, "x1^2 - x2^2"), p(ctx, "x1^2 + 2*x1*x2 + x2^2")).str() == "x1 + x2");
}

TEST_CASE("primitive scaling is canonical") {
    auto ctx = ctx3();
    auto [canon, s] = primitive_scale(p(ctx, "-4/6*x1 - 2*x2"));
    CHECK(canon.str() == "x1 + 3*x2");
    CHECK(p(ctx, "-4/6*x1 - 2*x2") * s == canon);
}

TEST_CASE("rational functions canonicalize: equality is structural") {
    auto ctx = ctx3();
    RatFn a(p(ctx, "x1^2 - x2^2"), p(ctx, "x1 + x2"));
    CHECK(a.num() == p(ctx, "x1 - x2"));
    CHECK(a.den() == p(ctx, "1"));
    RatFn b(p(ctx, "x1"), p(ctx, "2*x2"));
    RatFn c(p(ctx, "3*x1"), p(ctx, "6*x2"));
    CHECK(b == c);
    CHECK((b - c).is_zero());
    CHECK_THROWS_AS(RatFn(p(ctx, "x1"), p(ctx, "0")), Error);
}

TEST_CASE("rational function field identities on random input") {
    auto ctx = ctx3();
    auto rng = testutil::fixed_rng();
    for (int i = 0; i < 10; ++i) {
        Poly na = testutil::random_poly(ctx, 0, 2, rng);
        Poly nb = testutil::random_poly(ctx, 0, 2, rng);
        Poly d1 = testutil::random_poly(ctx, 1, 2, rng);
        Poly d2 = testutil::random_poly(ctx, 1, 2, rng);
        if (d1.is_zero() || d2.is_zero()) continue;
        RatFn a(na, d1), b(nb, d2);
        CHECK(a + b - b == a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        CHECK((a * b).diff(1) == a.diff(1) * b + a * b.diff(1));
    }
}

TEST_CASE("determinant and adjugate agree with the cofactor identity") {
    auto ctx = ctx3();
    auto rng = testutil::fixed_rng();
    for (int n : {2, 3, 4}) {
        for (int i = 0; i < 6; ++i) {
            PolyMatrix m(ctx, n);
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) m.at(r, c) = testutil::random_poly(ctx, 0, 1, rng, 0.6);
            auto [det, adj] = det_adj(m);
            CHECK(det == det_bareiss(m));
            PolyMatrix want(ctx, n);
            for (int r = 0; r < n; ++r) want.at(r, r) = det;
            CHECK(m * adj == want);
            CHECK(adj * m == want);
            CHECK(det_bareiss(m.transpose()) == det);
        }
    }
}

TEST_CASE("singular matrices have zero determinant") {
    auto ctx = ctx3();
    PolyMatrix m(ctx, 3);
    m.at(0, 0) = p(ctx, "x1");
    m.at(0, 1) = p(ctx, "x2");
    m.at(1, 0) = p(ctx, "2*x1"); // row 2 = 2 * row 1
    m.at(1, 1) = p(ctx, "2*x2");
    m.at(2, 2) = p(ctx, "1");
    CHECK(det_bareiss(m).is_zero());
}

TEST_CASE("operator reduction divides out the common factor") {
    auto ctx = ctx3();
    PolyMatrix m = PolyMatrix::identity(ctx, 2);
    Poly f = p(ctx, "x1 + x2");
    RatOperator op(m * f, f * Rat(3));
    op.reduce();
    // canonical form: integer-primitive denominator, so the 3 moves into num
    CHECK(op.den == p(ctx, "1"));
    CHECK(op.num == m * Poly::constant(ctx, Rat(1, 3)));

    RatOperator op2(m * f, f * p(ctx, "2*x2"));
    op2.reduce();
    CHECK(op2.den == p(ctx, "x2"));
    CHECK(op2.num == m * Poly::constant(ctx, Rat(1, 2)));
}
