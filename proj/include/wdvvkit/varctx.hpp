#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wdvvkit/errors.hpp"

namespace wdvvkit {

class VarCtx;
using VarCtxPtr = std::shared_ptr<const VarCtx>;

/// Fixed ordered list of variable names. Every polynomial in one computation
/// shares one context; mixing contexts is an error, not a coercion.
class VarCtx {
public:
    static VarCtxPtr make(std::vector<std::string> names);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<int> index_of(std::string_view name) const {
        for (int i = 0; i < size(); ++i)
            if (names_[static_cast<std::size_t>(i)] == name) return i;
        return std::nullopt;
    }

    friend bool operator==(const VarCtx& a, const VarCtx& b) { return a.names_ == b.names_; }

private:
    explicit VarCtx(std::vector<std::string> names) : names_(std::move(names)) {}
    std::vector<std::string> names_;
};

inline bool same_ctx(const VarCtxPtr& a, const VarCtxPtr& b) {
    return a == b || (a && b && *a == *b);
}

inline bool is_identifier(std::string_view s) {
    if (s.empty()) return false;
    auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
    auto alnum = [&](char c) { return alpha(c) || (c >= '0' && c <= '9'); };
    if (!alpha(s[0])) return false;
    for (char c : s.substr(1))
        if (!alnum(c)) return false;
    return true;
}

inline VarCtxPtr VarCtx::make(std::vector<std::string> names) {
    if (names.empty()) throw Error("variable context must have at least one variable");
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!is_identifier(names[i])) throw Error("bad variable name: '" + names[i] + "'");
        for (std::size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j]) throw Error("duplicate variable name: '" + names[i] + "'");
    }
    return VarCtxPtr(new VarCtx(std::move(names)));
}

} // namespace wdvvkit
