#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <string>
#include <vector>

#include "wdvvkit/cli.hpp"
#include "wdvvkit/errors.hpp"
#include "wdvvkit/frobenius.hpp"
#include "wdvvkit/kontsevich.hpp"
#include "wdvvkit/lenard.hpp"
#include "wdvvkit/parser.hpp"
#include "wdvvkit/wdvv.hpp"

namespace py = pybind11;
using namespace wdvvkit;

namespace {

py::object big(const BigInt& z) {
    const std::string s = z.get_str();
    return py::reinterpret_steal<py::object>(PyLong_FromString(s.c_str(), nullptr, 10));
}

py::list table_list(const GwTable& t) {
    py::list out;
    for (int k = 1; k <= t.order(); ++k) out.append(big(t.N(k)));
    return out;
}

/// Clause list in the same shape as the command-line reports, sorted by name.
py::list report_list(Report rep) {
    std::vector<Clause> uniq;
    for (Clause& c : rep.clauses) {
        bool seen = false;
        for (const Clause& u : uniq)
            if (u.name == c.name) { seen = true; break; }
        if (!seen) uniq.push_back(std::move(c));
    }
    std::sort(uniq.begin(), uniq.end(),
              [](const Clause& a, const Clause& b) { return a.name < b.name; });
    py::list out;
    for (const Clause& c : uniq) {
        py::dict d;
        d["name"] = c.name;
        d["ok"] = c.ok;
        if (!c.witness.empty()) d["witness"] = c.witness;
        out.append(std::move(d));
    }
    return out;
}

PolyMatrix matrix_of(const VarCtxPtr& ctx, const std::vector<std::vector<std::string>>& rows) {
    int n = ctx->size();
    if (static_cast<int>(rows.size()) != n)
        throw PreconditionError("matrix must have one row per variable");
    PolyMatrix m(ctx, n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n)
            throw PreconditionError("matrix rows must have one entry per variable");
        for (int j = 0; j < n; ++j)
            m.at(i, j) = parse_expr(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], ctx);
    }
    return m;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact WDVV / Lenard / Frobenius checks (C++ core)";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def(
        "parse",
        [](const std::vector<std::string>& vars, const std::string& text) {
            return parse_expr(text, VarCtx::make(vars)).str();
        },
        py::arg("vars"), py::arg("text"),
        "Parse an expression and return its canonical printed form.");

    m.def(
        "diff",
        [](const std::vector<std::string>& vars, const std::string& text, const std::string& var) {
            VarCtxPtr ctx = VarCtx::make(vars);
            auto idx = ctx->index_of(var);
            if (!idx) throw PreconditionError("unknown variable '" + var + "'");
            return parse_expr(text, ctx).diff(*idx).str();
        },
        py::arg("vars"), py::arg("text"), py::arg("var"),
        "Exact partial derivative, returned in canonical form.");

    m.def(
        "eval_at",
        [](const std::vector<std::string>& vars, const std::string& text,
           const std::vector<std::string>& point) {
            VarCtxPtr ctx = VarCtx::make(vars);
            std::vector<Rat> pt;
            pt.reserve(point.size());
            for (const std::string& s : point) pt.push_back(Rat::from_string(s));
            if (static_cast<int>(pt.size()) != ctx->size())
                throw PreconditionError("point length must match the variable count");
            return parse_expr(text, ctx).eval(pt).str();
        },
        py::arg("vars"), py::arg("text"), py::arg("point"),
        "Exact value at a rational point; entries and result are strings like \"-3/2\".");

    m.def(
        "kontsevich", [](int k) { return table_list(nk_recursion(k)); }, py::arg("k"),
        "Counts N_1..N_k by the quadratic recursion, as exact integers.");

    m.def(
        "kontsevich_from_pde", [](int k) { return table_list(solve_from_pde(k)); }, py::arg("k"),
        "Counts N_1..N_k recovered order by order from the scalar constraint.");

    m.def(
        "pde_certified",
        [](int k) { return certify_table(nk_recursion(k)).pass(); }, py::arg("k"),
        "True when the recursion table's series annuls the constraint residual.");

    m.def(
        "check_wdvv",
        [](const std::vector<std::string>& vars, const std::string& F, int pivot) {
            VarCtxPtr ctx = VarCtx::make(vars);
            Prepotential Q(ctx, parse_expr(F, ctx), pivot);
            WdvvVerdict v = check_wdvv(Q);
            py::dict d;
            d["satisfied"] = v.satisfied;
            d["ordinary"] = v.ordinary;
            py::list ws;
            for (const WdvvWitness& w : v.witnesses) {
                py::dict e;
                e["pair"] = py::make_tuple(w.j, w.l);
                e["entry"] = py::make_tuple(w.row, w.col);
                e["monomial"] = w.monomial;
                ws.append(std::move(e));
            }
            d["witnesses"] = std::move(ws);
            return d;
        },
        py::arg("vars"), py::arg("F"), py::arg("pivot") = 1,
        "Quadratic-constraint verdict for a prepotential expression.");

    m.def(
        "check_lenard",
        [](const std::vector<std::string>& vars, const std::vector<std::vector<std::string>>& A,
           int pivot) {
            VarCtxPtr ctx = VarCtx::make(vars);
            SquareOfFunctions S(matrix_of(ctx, A), pivot);
            VectorField X = VectorField::basis(ctx, pivot - 1);
            Report rep = check_lemma1(S, X);
            Report complex =
                check_lenard_complex(X, S.A.at(pivot - 1, pivot - 1), recursion_operators(S));
            for (Clause& c : complex.clauses) rep.clauses.push_back(std::move(c));
            return report_list(std::move(rep));
        },
        py::arg("vars"), py::arg("A"), py::arg("pivot") = 1,
        "Chain and complex clauses for a symmetric square of functions.");

    m.def(
        "check_frobenius",
        [](const std::vector<std::string>& vars, const std::string& F, int pivot) {
            VarCtxPtr ctx = VarCtx::make(vars);
            Prepotential P(ctx, parse_expr(F, ctx), pivot);
            return report_list(check_axioms(from_prepotential(P)).detail);
        },
        py::arg("vars"), py::arg("F"), py::arg("pivot") = 1,
        "Axiom clauses for the Frobenius data built from a prepotential.");

    m.def(
        "haantjes_zero",
        [](const std::vector<std::string>& vars, const std::vector<std::vector<std::string>>& K,
           const std::string& den) {
            VarCtxPtr ctx = VarCtx::make(vars);
            RatOperator op(matrix_of(ctx, K), parse_expr(den, ctx));
            op.reduce();
            return haantjes(RecursionOperator(op.num, op.den, 1)).is_zero();
        },
        py::arg("vars"), py::arg("K"), py::arg("den") = std::string("1"),
        "True when the Haantjes torsion of K/den vanishes identically.");

    m.def(
        "run",
        [](const std::vector<std::string>& args) {
            cli::RunResult r = cli::run(args);
            return py::make_tuple(r.exit_code, r.out, r.err);
        },
        py::arg("args"),
        "Run a command line in-process; returns (exit_code, stdout_text, stderr_text).");
}
