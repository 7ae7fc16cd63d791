#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace wdvvkit::cli {

/// Outcome of one command-line invocation. `report` is the JSON document the
/// command produced (null for help output and flag errors, which carry plain
/// text instead). `out`/`err` hold exactly what belongs on stdout/stderr, so
/// callers other than main() can run commands in-process.
struct RunResult {
    int exit_code = 0;
    nlohmann::json report;
    std::string out;
    std::string err;
};

/// Dispatches one subcommand. `args` excludes the program name. Exit codes:
/// 0 all clauses pass, 1 some clause fails, 2 unusable input (bad flags,
/// unreadable or malformed documents, violated preconditions).
RunResult run(const std::vector<std::string>& args);

} // namespace wdvvkit::cli
