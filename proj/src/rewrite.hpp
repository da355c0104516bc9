#pragma once

// Positional rewriting over expression trees, shared by the rule engines.

#include "pinplus/expr.hpp"

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace pinplus::detail {

using Path = std::vector<std::size_t>;

// A rule inspects a subterm (with its position under `root`) and returns
// its replacement if it applies there.
using RuleFn = std::function<std::optional<Expr>(const Expr& sub, std::span<const std::size_t> path,
                                                 const Expr& root)>;

const Expr& subterm(const Expr& e, std::span<const std::size_t> path);
Expr replace_at(const Expr& e, std::span<const std::size_t> path, const Expr& replacement);

struct Match {
    Path path;
    Expr replacement;
};

// First match in pre-order (outermost, then left to right).
std::optional<Match> find_first(const Expr& root, const RuleFn& rule);

// Applies the rule at exactly `path`, if it matches there.
std::optional<Expr> apply_at(const Expr& root, std::span<const std::size_t> path, const RuleFn& rule);

} // namespace pinplus::detail
