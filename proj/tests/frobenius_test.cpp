#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "testutil.hpp"
#include "wdvvkit/frobenius.hpp"

using namespace wdvvkit;
using testutil::p;

static VarCtxPtr ctx3() { return VarCtx::make({"x1", "x2", "x3"}); }
static VarCtxPtr ctx2() { return VarCtx::make({"x1", "x2"}); }

static Prepotential quad(const VarCtxPtr& ctx) {
    return Prepotential(ctx, p(ctx, "1/2*(x1^2*x3 + x1*x2^2)"));
}

TEST_CASE("the metric of the quadratic solution is the antidiagonal") {
    auto ctx = ctx3();
    FrobeniusData D = from_prepotential(quad(ctx));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(D.g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
                  (i + j == 2 ? Rat(1) : Rat(0)));
    CHECK(D.e_index == 1);
    // unity column: C^l_1k = delta_lk
    CHECK(D.C[0] == PolyMatrix::identity(ctx, 3));
}

TEST_CASE("all axioms pass and the potential is recovered exactly") {
    auto ctx = ctx3();
    AxiomReport r = check_axioms(from_prepotential(quad(ctx)));
    CHECK(r.flat);
    CHECK(r.compatible);
    CHECK(r.unity);
    CHECK(r.cov_const_e);
    CHECK(r.potential);
    CHECK(r.associative);
    CHECK(r.detail.pass());
    REQUIRE(r.F_reconstructed.has_value());
    CHECK(*r.F_reconstructed == quad(ctx).F);
    CHECK(r.detail.find("reconstructed_wdvv") != nullptr);

    CHECK(reconstruct_prepotential(from_prepotential(quad(ctx))) == quad(ctx).F);
}

TEST_CASE("non-constant pivot slices cannot produce a flat metric") {
    auto ctx = ctx2();
    // satisfied (two variables) but the pivot slice depends on x1
    Prepotential P(ctx, p(ctx, "x1^3*x2"));
    CHECK_THROWS_AS(from_prepotential(P), PreconditionError);
    CHECK_THROWS_WITH_AS(from_prepotential(P),
                         "pivot slice is not constant: a generalized solution has no constant "
                         "metric in these coordinates",
                         PreconditionError);
}

TEST_CASE("unsatisfied prepotentials are refused") {
    auto ctx = ctx3();
    Prepotential P(ctx, quad(ctx).F + p(ctx, "x2^4 + x3^4"));
    CHECK_THROWS_AS(from_prepotential(P), PreconditionError);
}

TEST_CASE("perturbed structure constants fail compatibility with a witness, not an error") {
    auto ctx = ctx3();
    FrobeniusData D = from_prepotential(quad(ctx));
    D.C[1].at(0, 2) = p(ctx, "1"); // break the symmetry of g_ml C^l_jk
    AxiomReport r = check_axioms(D);
    CHECK_FALSE(r.compatible);
    CHECK_FALSE(r.detail.pass());
    const Clause* c = r.detail.find("compatible");
    REQUIRE(c != nullptr);
    CHECK(c->witness.find("c(") != std::string::npos);
}

TEST_CASE("raw constant data passes all axioms including the trivial potential one") {
    auto ctx = ctx3();
    // antidiagonal metric with the quadratic solution's constant C tensors
    std::vector<std::vector<Rat>> g{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
    std::vector<PolyMatrix> C(3, PolyMatrix(ctx, 3));
    C[0] = PolyMatrix::identity(ctx, 3);
    C[1].at(1, 0) = p(ctx, "1");
    C[1].at(2, 1) = p(ctx, "1");
    C[2].at(2, 0) = p(ctx, "1");
    FrobeniusData D{ctx, g, C, 1};
    AxiomReport r = check_axioms(D);
    CHECK(r.detail.pass());
    REQUIRE(r.F_reconstructed.has_value());
    CHECK(*r.F_reconstructed == p(ctx, "1/2*(x1^2*x3 + x1*x2^2)"));
}

TEST_CASE("a singular metric fails flatness as a verdict") {
    auto ctx = ctx2();
    std::vector<std::vector<Rat>> g{{1, 1}, {1, 1}};
    std::vector<PolyMatrix> C(2, PolyMatrix::identity(ctx, 2));
    AxiomReport r = check_axioms(FrobeniusData{ctx, g, C, 1});
    CHECK_FALSE(r.flat);
    const Clause* c = r.detail.find("flat");
    REQUIRE(c != nullptr);
    CHECK_FALSE(c->ok);
}

TEST_CASE("a wrong unity column fails the unity axiom") {
    auto ctx = ctx2();
    std::vector<std::vector<Rat>> g{{1, 0}, {0, 1}};
    std::vector<PolyMatrix> C(2, PolyMatrix(ctx, 2));
    C[0].at(0, 0) = p(ctx, "2"); // C_e != Id
    C[0].at(1, 1) = p(ctx, "1");
    AxiomReport r = check_axioms(FrobeniusData{ctx, g, C, 1});
    CHECK_FALSE(r.unity);
}

TEST_CASE("reconstruction requires the compatibility and potential axioms") {
    auto ctx = ctx3();
    FrobeniusData D = from_prepotential(quad(ctx));
    D.C[1].at(0, 2) = p(ctx, "1");
    CHECK_THROWS_AS(reconstruct_prepotential(D), PreconditionError);
}

TEST_CASE("ordinary corpus round trips through frobenius data") {
    auto ctx = ctx2();
    for (const char* src : {"1/2*x1^2*x2", "1/2*x1^2*x2 + x2^3", "1/6*x1^3 + 1/2*x1^2*x2"}) {
        Prepotential P(ctx, p(ctx, src));
        WdvvVerdict v = check_wdvv(P);
        REQUIRE(v.satisfied);
        if (!v.ordinary) continue;
        CHECK(reconstruct_prepotential(from_prepotential(P)) ==
              p(ctx, src) - testutil::truncate_below(p(ctx, src), 2));
    }
}
