#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wdvvkit/kontsevich.hpp"

using namespace wdvvkit;

TEST_CASE("recursion reproduces the known counts") {
    GwTable t = nk_recursion(6);
    REQUIRE(t.order() == 6);
    CHECK(t.N(1) == 1);
    CHECK(t.N(2) == 1);
    CHECK(t.N(3) == 12);
    CHECK(t.N(4) == 620);
    CHECK(t.N(5) == 87304);
    CHECK(t.N(6) == 26312976);
}

TEST_CASE("counts beyond machine range stay exact") {
    GwTable t = nk_recursion(10);
    CHECK(t.N(9).get_str() == "19385778269260800");
    CHECK(t.N(10).get_str() == "40739017561997799680");
}

TEST_CASE("the two derivations agree entrywise") {
    GwTable a = nk_recursion(10);
    GwTable b = solve_from_pde(10);
    REQUIRE(a.order() == b.order());
    for (int k = 1; k <= a.order(); ++k) CHECK(a.N(k) == b.N(k));
}

TEST_CASE("series of a complete table annuls the constraint") {
    QSeries f = build_series(nk_recursion(8));
    CHECK(pde_residual(f).is_zero());
}

TEST_CASE("certification passes a correct table and rejects a tampered one") {
    GwTable good = nk_recursion(5);
    CHECK(certify_table(good).pass());

    GwTable bad = good;
    bad.values[2] = 13; // true N_3 is 12
    Report r = certify_table(bad);
    CHECK_FALSE(r.pass());
    const Clause* c = r.find("pde_residual_zero");
    REQUIRE(c != nullptr);
    CHECK_FALSE(c->ok);
    CHECK(c->witness.find("slice") != std::string::npos);
}

TEST_CASE("truncation order must be positive") {
    CHECK_THROWS_AS(nk_recursion(0), Error);
    CHECK_THROWS_AS(nk_recursion(-3), Error);
    CHECK_THROWS_AS(solve_from_pde(0), Error);
}

TEST_CASE("series arithmetic: derivatives and truncating products") {
    QSeries f(3);
    f.add_coeff(1, 5, Rat(1, 2)); // (1/2) x3^5 e^{x2}
    f.add_coeff(2, 0, Rat(3));    // 3 e^{2 x2}

    QSeries d2 = f.d2();
    CHECK(d2.coeff(1, 5) == Rat(1, 2));
    CHECK(d2.coeff(2, 0) == Rat(6));

    QSeries d3 = f.d3();
    CHECK(d3.coeff(1, 4) == Rat(5, 2));
    CHECK(d3.coeff(2, 0) == Rat(0));

    QSeries prod = f * f;
    CHECK(prod.coeff(2, 10) == Rat(1, 4)); // k = 1+1 survives
    CHECK(prod.coeff(3, 5) == Rat(3));     // k = 1+2 survives, doubled product
    CHECK(prod.coeff(4, 0) == Rat(0));     // k = 2+2 exceeds the truncation

    CHECK((f - f).is_zero());
    CHECK(f.first_nonzero_slice() == 1);
}

TEST_CASE("no zero coefficients are stored") {
    QSeries f(2);
    f.add_coeff(1, 0, Rat(1));
    f.add_coeff(1, 0, Rat(-1));
    CHECK(f.is_zero());
    CHECK(f.coeffs().empty());
    f.add_coeff(3, 0, Rat(5)); // beyond truncation, dropped
    CHECK(f.is_zero());
}
