#include "wdvvkit/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "wdvvkit/errors.hpp"
#include "wdvvkit/frobenius.hpp"
#include "wdvvkit/kontsevich.hpp"
#include "wdvvkit/lenard.hpp"
#include "wdvvkit/parser.hpp"
#include "wdvvkit/report.hpp"
#include "wdvvkit/wdvv.hpp"

namespace wdvvkit::cli {

namespace {

using nlohmann::json;

json load_doc(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error("cannot open input file: " + path);
    try {
        return json::parse(f);
    } catch (const json::exception& e) {
        throw Error("input file is not valid JSON: " + std::string(e.what()));
    }
}

const json& field(const json& doc, const char* name) {
    if (!doc.is_object()) throw Error("input document must be a JSON object");
    auto it = doc.find(name);
    if (it == doc.end()) throw Error(std::string("input document missing field \"") + name + "\"");
    return *it;
}

std::string str_field(const json& doc, const char* name) {
    const json& v = field(doc, name);
    if (!v.is_string()) throw Error(std::string("field \"") + name + "\" must be a string");
    return v.get<std::string>();
}

int int_field_or(const json& doc, const char* name, int dflt) {
    if (!doc.is_object() || !doc.contains(name)) return dflt;
    const json& v = doc.at(name);
    if (!v.is_number_integer()) throw Error(std::string("field \"") + name + "\" must be an integer");
    return v.get<int>();
}

VarCtxPtr vars_of(const json& doc) {
    const json& v = field(doc, "vars");
    if (!v.is_array() || v.empty())
        throw Error("field \"vars\" must be a non-empty array of variable names");
    std::vector<std::string> names;
    for (const json& e : v) {
        if (!e.is_string()) throw Error("field \"vars\" must contain only strings");
        names.push_back(e.get<std::string>());
    }
    return VarCtx::make(std::move(names));
}

/// Square matrix of expressions, one string per entry.
PolyMatrix matrix_field(const json& doc, const char* name, const VarCtxPtr& ctx) {
    const json& v = field(doc, name);
    int n = ctx->size();
    if (!v.is_array() || static_cast<int>(v.size()) != n)
        throw Error(std::string("field \"") + name + "\" must be a " + std::to_string(n) + "x" +
                    std::to_string(n) + " array of expressions");
    PolyMatrix m(ctx, n);
    for (int i = 0; i < n; ++i) {
        const json& row = v.at(static_cast<std::size_t>(i));
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw Error(std::string("field \"") + name + "\" row " + std::to_string(i + 1) +
                        " must have " + std::to_string(n) + " entries");
        for (int j = 0; j < n; ++j) {
            const json& cell = row.at(static_cast<std::size_t>(j));
            if (!cell.is_string())
                throw Error(std::string("field \"") + name + "\" entries must be expression strings");
            m.at(i, j) = parse_expr(cell.get<std::string>(), ctx);
        }
    }
    return m;
}

Rat rat_of(const json& v, const char* where) {
    if (v.is_number_integer()) return Rat(static_cast<long>(v.get<long long>()));
    if (v.is_string()) return Rat::from_string(v.get<std::string>());
    throw Error(std::string(where) + " entries must be integers or rational strings like \"1/2\"");
}

json echo_matrix(const PolyMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.size(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

/// N_k encoded as a JSON number when it fits 53 bits exactly, otherwise as a
/// decimal string, so consumers reading doubles never see a rounded count.
json encode_count(const BigInt& v) {
    if (mpz_sizeinbase(v.get_mpz_t(), 2) <= 53 && v >= 0)
        return json(static_cast<std::uint64_t>(v.get_ui()));
    return json(v.get_str());
}

/// Clauses deduplicated by name (first occurrence wins; duplicates arise when
/// two checkers share a clause) and sorted for byte-stable output.
json clauses_json(const Report& rep) {
    std::vector<Clause> uniq;
    for (const Clause& c : rep.clauses) {
        bool seen = false;
        for (const Clause& u : uniq)
            if (u.name == c.name) { seen = true; break; }
        if (!seen) uniq.push_back(c);
    }
    std::sort(uniq.begin(), uniq.end(),
              [](const Clause& a, const Clause& b) { return a.name < b.name; });
    json arr = json::array();
    for (const Clause& c : uniq) {
        json o{{"name", c.name}, {"ok", c.ok}};
        if (!c.witness.empty()) o["witness"] = c.witness;
        arr.push_back(std::move(o));
    }
    return arr;
}

struct CommandOutput {
    Report rep;
    json inputs_echo;
    json extra = json::object();
};

std::string wdvv_witness_str(const WdvvVerdict& v) {
    if (v.witnesses.empty()) return {};
    const WdvvWitness& w = v.witnesses.front();
    return "pair (" + std::to_string(w.j) + "," + std::to_string(w.l) + ") entry (" +
           std::to_string(w.row) + "," + std::to_string(w.col) + "): " + w.monomial;
}

CommandOutput run_check_wdvv(const json& doc, const int* pivot_flag, const std::string& mode) {
    VarCtxPtr ctx = vars_of(doc);
    Poly F = parse_expr(str_field(doc, "F"), ctx);
    int pivot = pivot_flag ? *pivot_flag : int_field_or(doc, "pivot", 1);
    Prepotential P(ctx, F, pivot);
    WdvvVerdict v = check_wdvv(P);

    CommandOutput out;
    out.rep.add("residuals_zero", v.satisfied, wdvv_witness_str(v));
    if (mode == "ordinary")
        out.rep.add("ordinary", v.ordinary, v.ordinary ? "" : "pivot slice is not constant");
    out.extra["ordinary"] = v.ordinary;
    out.inputs_echo = {{"vars", ctx->names()}, {"F", F.str()}, {"pivot", pivot}, {"mode", mode}};
    return out;
}

CommandOutput run_kontsevich(int k, bool check_pde) {
    GwTable table = nk_recursion(k);

    CommandOutput out;
    out.rep = certify_table(table);
    if (check_pde) {
        GwTable solved = solve_from_pde(k);
        std::string witness;
        bool agree = true;
        for (int i = 1; i <= k; ++i) {
            if (table.N(i) != solved.N(i)) {
                agree = false;
                witness = "N_" + std::to_string(i) + ": recursion gives " + table.N(i).get_str() +
                          ", series solve gives " + solved.N(i).get_str();
                break;
            }
        }
        out.rep.add("oracle_agreement", agree, witness);
    }

    json nlist = json::array();
    for (int i = 1; i <= table.order(); ++i)
        nlist.push_back(json::array({i, encode_count(table.N(i))}));
    out.extra["N"] = std::move(nlist);
    const Clause* res = out.rep.find("pde_residual_zero");
    out.extra["pde_residual_zero"] = res && res->ok;
    out.inputs_echo = {{"k", k}, {"check_pde", check_pde}};
    return out;
}

CommandOutput run_check_lenard(const json& doc, const int* pivot_flag) {
    VarCtxPtr ctx = vars_of(doc);
    PolyMatrix A = matrix_field(doc, "A", ctx);
    int pivot = pivot_flag ? *pivot_flag : int_field_or(doc, "pivot", 1);
    SquareOfFunctions S(A, pivot);

    int n = ctx->size();
    VectorField X(ctx);
    if (doc.contains("X")) {
        const json& xj = doc.at("X");
        if (!xj.is_array() || static_cast<int>(xj.size()) != n)
            throw Error("field \"X\" must be an array of " + std::to_string(n) + " expressions");
        for (int i = 0; i < n; ++i) {
            const json& cell = xj.at(static_cast<std::size_t>(i));
            if (!cell.is_string()) throw Error("field \"X\" entries must be expression strings");
            X.comp[static_cast<std::size_t>(i)] = RatFn(parse_expr(cell.get<std::string>(), ctx));
        }
    } else {
        X = VectorField::basis(ctx, pivot - 1);
    }

    std::vector<RecursionOperator> ops = recursion_operators(S);

    CommandOutput out;
    out.rep = check_lemma1(S, X);
    Report complex = check_lenard_complex(X, S.A.at(pivot - 1, pivot - 1), ops);
    for (Clause& c : complex.clauses) out.rep.clauses.push_back(std::move(c));

    json xecho = json::array();
    for (const RatFn& c : X.comp) xecho.push_back(c.str());
    out.inputs_echo = {
        {"vars", ctx->names()}, {"A", echo_matrix(A)}, {"pivot", pivot}, {"X", std::move(xecho)}};
    return out;
}

CommandOutput run_check_frobenius(const json& doc) {
    CommandOutput out;
    if (doc.is_object() && doc.contains("from_F")) {
        const json& sub = doc.at("from_F");
        VarCtxPtr ctx = vars_of(sub);
        Poly F = parse_expr(str_field(sub, "F"), ctx);
        int pivot = int_field_or(sub, "pivot", 1);
        Prepotential P(ctx, F, pivot);
        FrobeniusData D = from_prepotential(P);
        out.rep = check_axioms(D).detail;
        out.inputs_echo = {
            {"from_F", {{"vars", ctx->names()}, {"F", F.str()}, {"pivot", pivot}}}};
        return out;
    }

    VarCtxPtr ctx = vars_of(doc);
    int n = ctx->size();

    const json& gj = field(doc, "g");
    if (!gj.is_array() || static_cast<int>(gj.size()) != n)
        throw Error("field \"g\" must be a " + std::to_string(n) + "x" + std::to_string(n) +
                    " array of rationals");
    std::vector<std::vector<Rat>> g(static_cast<std::size_t>(n),
                                    std::vector<Rat>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) {
        const json& row = gj.at(static_cast<std::size_t>(i));
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw Error("field \"g\" row " + std::to_string(i + 1) + " must have " +
                        std::to_string(n) + " entries");
        for (int j = 0; j < n; ++j)
            g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                rat_of(row.at(static_cast<std::size_t>(j)), "\"g\"");
    }

    const json& cj = field(doc, "C");
    if (!cj.is_object()) throw Error("field \"C\" must be an object keyed \"j,k\"");
    std::vector<PolyMatrix> C(static_cast<std::size_t>(n), PolyMatrix(ctx, n));
    for (int j = 1; j <= n; ++j) {
        for (int k = 1; k <= n; ++k) {
            std::string key = std::to_string(j) + "," + std::to_string(k);
            if (!cj.contains(key)) throw Error("field \"C\" missing entry \"" + key + "\"");
            const json& col = cj.at(key);
            if (!col.is_array() || static_cast<int>(col.size()) != n)
                throw Error("entry \"" + key + "\" of \"C\" must list " + std::to_string(n) +
                            " expressions, one per upper index");
            for (int l = 1; l <= n; ++l) {
                const json& cell = col.at(static_cast<std::size_t>(l - 1));
                if (!cell.is_string())
                    throw Error("entry \"" + key + "\" of \"C\" must contain expression strings");
                C[static_cast<std::size_t>(j - 1)].at(l - 1, k - 1) =
                    parse_expr(cell.get<std::string>(), ctx);
            }
        }
    }

    int e = int_field_or(doc, "e", 1);
    if (e < 1 || e > n) throw Error("field \"e\" out of range");

    FrobeniusData D{ctx, std::move(g), std::move(C), e};
    out.rep = check_axioms(D).detail;

    json gecho = json::array();
    for (const auto& row : D.g) {
        json r = json::array();
        for (const Rat& x : row) r.push_back(x.str());
        gecho.push_back(std::move(r));
    }
    json cecho = json::object();
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
            json col = json::array();
            for (int l = 1; l <= n; ++l)
                col.push_back(D.C[static_cast<std::size_t>(j - 1)].at(l - 1, k - 1).str());
            cecho[std::to_string(j) + "," + std::to_string(k)] = std::move(col);
        }
    out.inputs_echo = {{"vars", ctx->names()},
                       {"g", std::move(gecho)},
                       {"C", std::move(cecho)},
                       {"e", e}};
    return out;
}

CommandOutput run_haantjes(const json& doc) {
    CommandOutput out;
    if (doc.is_object() && doc.contains("K")) {
        VarCtxPtr ctx = vars_of(doc);
        PolyMatrix num = matrix_field(doc, "K", ctx);
        Poly den = Poly::constant(ctx, 1);
        std::string den_src = "1";
        if (doc.contains("den")) {
            den_src = str_field(doc, "den");
            den = parse_expr(den_src, ctx);
        }
        RatOperator reduced(num, den); // validates den != 0
        reduced.reduce();
        RecursionOperator K(reduced.num, reduced.den, 1);

        Tensor12 H = haantjes(K);
        std::string witness;
        if (!H.is_zero()) witness = "nonzero component at " + H.nonzero_witness();
        out.rep.add("haantjes_zero", H.is_zero(), witness);
        out.inputs_echo = {{"vars", ctx->names()}, {"K", echo_matrix(num)}, {"den", den.str()}};
        return out;
    }

    VarCtxPtr ctx = vars_of(doc);
    PolyMatrix A = matrix_field(doc, "A", ctx);
    int pivot = int_field_or(doc, "pivot", 1);
    SquareOfFunctions S(A, pivot);
    std::vector<RecursionOperator> ops = recursion_operators(S);

    bool all_zero = true;
    std::string witness;
    for (const RecursionOperator& K : ops) {
        Tensor12 H = haantjes(K);
        if (!H.is_zero()) {
            all_zero = false;
            witness = "K_" + std::to_string(K.index) + ": nonzero component at " +
                      H.nonzero_witness();
            break;
        }
    }
    out.rep.add("haantjes_zero", all_zero, witness);
    out.inputs_echo = {{"vars", ctx->names()}, {"A", echo_matrix(A)}, {"pivot", pivot}};
    return out;
}

} // namespace

RunResult run(const std::vector<std::string>& args) {
    CLI::App app{"exact checks for WDVV prepotentials, recursion operators, and Frobenius data"};
    app.name("wdvvkit");
    app.require_subcommand(1);

    std::string input_path;
    int pivot_flag = 1;
    std::string mode = "generalized";
    int k = 8;
    bool check_pde = false;

    CLI::App* wdvv = app.add_subcommand(
        "check-wdvv", "verify the quadratic constraints on a prepotential document");
    wdvv->add_option("--input", input_path, "JSON document with vars, F, pivot")->required();
    CLI::Option* wdvv_pivot =
        wdvv->add_option("--pivot", pivot_flag, "pivot index, overrides the document");
    wdvv->add_option("--mode", mode, "generalized (default) or ordinary")
        ->check(CLI::IsMember({"generalized", "ordinary"}));

    CLI::App* kon = app.add_subcommand(
        "kontsevich", "rational plane curve counts with a built-in certification");
    kon->add_option("-k", k, "truncation order (default 8)");
    kon->add_flag("--check-pde", check_pde,
                  "re-derive the table from the scalar constraint and compare");

    CLI::App* lenard = app.add_subcommand(
        "check-lenard", "verify the chain and complex conditions for a square of functions");
    lenard->add_option("--input", input_path, "JSON document with vars, A, pivot, X")->required();
    CLI::Option* lenard_pivot =
        lenard->add_option("--pivot", pivot_flag, "pivot row, overrides the document");

    CLI::App* frob = app.add_subcommand(
        "check-frobenius", "check the flat-coordinate axioms for metric and structure data");
    frob->add_option("--input", input_path, "JSON document with vars, g, C, e or from_F")
        ->required();

    CLI::App* haan = app.add_subcommand(
        "haantjes", "evaluate the Haantjes torsion of an operator or of a square's operators");
    haan->add_option("--input", input_path, "JSON document with vars and K (or A, pivot)")
        ->required();

    RunResult r;
    {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        try {
            app.parse(std::move(rev));
        } catch (const CLI::CallForHelp&) {
            const auto subs = app.get_subcommands();
            r.out = subs.empty() ? app.help() : subs.front()->help();
            r.exit_code = 0;
            return r;
        } catch (const CLI::ParseError& e) {
            r.err = std::string(e.what()) + "\n\n" + app.help();
            r.exit_code = 2;
            return r;
        }
    }

    std::string command = app.get_subcommands().front()->get_name();
    auto t0 = std::chrono::steady_clock::now();
    json report;
    try {
        CommandOutput out;
        if (wdvv->parsed()) {
            const int* pf = wdvv_pivot->count() > 0 ? &pivot_flag : nullptr;
            out = run_check_wdvv(load_doc(input_path), pf, mode);
        } else if (kon->parsed()) {
            out = run_kontsevich(k, check_pde);
        } else if (lenard->parsed()) {
            const int* pf = lenard_pivot->count() > 0 ? &pivot_flag : nullptr;
            out = run_check_lenard(load_doc(input_path), pf);
        } else if (frob->parsed()) {
            out = run_check_frobenius(load_doc(input_path));
        } else {
            out = run_haantjes(load_doc(input_path));
        }
        report = {{"command", command},
                  {"status", out.rep.pass() ? "pass" : "fail"},
                  {"clauses", clauses_json(out.rep)},
                  {"inputs_echo", std::move(out.inputs_echo)}};
        for (auto& [key, value] : out.extra.items()) report[key] = std::move(value);
        r.exit_code = out.rep.pass() ? 0 : 1;
    } catch (const std::exception& e) {
        report = {{"command", command},
                  {"status", "error"},
                  {"error", e.what()},
                  {"clauses", json::array()}};
        r.exit_code = 2;
    }
    auto dt = std::chrono::steady_clock::now() - t0;
    report["timing_ms"] =
        static_cast<std::int64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(dt).count());

    r.report = report;
    r.out = report.dump(2) + "\n";
    return r;
}

} // namespace wdvvkit::cli
