#pragma once

#include <string>
#include <vector>

namespace wdvvkit {

/// One named verification clause. `witness` is empty for passing clauses and
/// holds a short human-readable counterexample otherwise.
struct Clause {
    std::string name;
    bool ok = false;
    std::string witness;
};

/// Verdict shared by all checkers: a flat list of clauses, passing when all do.
struct Report {
    std::vector<Clause> clauses;

    void add(std::string name, bool ok, std::string witness = {}) {
        clauses.push_back(Clause{std::move(name), ok, std::move(witness)});
    }

    bool pass() const {
        for (const auto& c : clauses)
            if (!c.ok) return false;
        return true;
    }

    const Clause* find(const std::string& name) const {
        for (const auto& c : clauses)
            if (c.name == name) return &c;
        return nullptr;
    }
};

} // namespace wdvvkit
