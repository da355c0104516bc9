#include "rewrite.hpp"

#include <stdexcept>

namespace pinplus::detail {

const Expr& subterm(const Expr& e, std::span<const std::size_t> path) {
    const Expr* cur = &e;
    for (auto i : path) {
        if (i >= cur->children().size()) throw std::out_of_range("rewrite path out of range");
        cur = &cur->child(i);
    }
    return *cur;
}

Expr replace_at(const Expr& e, std::span<const std::size_t> path, const Expr& replacement) {
    if (path.empty()) return replacement;
    const std::size_t i = path.front();
    Expr sub = replace_at(e.child(i), path.subspan(1), replacement);
    switch (e.kind()) {
    case Expr::Kind::Bar:
        return Expr::make_bar(std::move(sub));
    case Expr::Kind::CircleSum:
        if (e.is_twist()) return Expr::make_twist(std::move(sub));
        return i == 0 ? Expr::make_circle_sum(std::move(sub), e.child(1))
                      : Expr::make_circle_sum(e.child(0), std::move(sub));
    case Expr::Kind::ConnSum: {
        std::vector<Expr> children(e.children().begin(), e.children().end());
        children[i] = std::move(sub);
        return Expr::make_conn_sum(std::move(children));
    }
    default:
        throw std::logic_error("replace_at below a leaf");
    }
}

namespace {

std::optional<Match> search(const Expr& root, const Expr& e, Path& path, const RuleFn& rule) {
    if (e.kind() == Expr::Kind::TwistToken) return std::nullopt;
    if (auto r = rule(e, path, root)) return Match{path, std::move(*r)};
    for (std::size_t i = 0; i < e.children().size(); ++i) {
        path.push_back(i);
        auto m = search(root, e.child(i), path, rule);
        path.pop_back();
        if (m) return m;
    }
    return std::nullopt;
}

} // namespace

std::optional<Match> find_first(const Expr& root, const RuleFn& rule) {
    Path path;
    return search(root, root, path, rule);
}

std::optional<Expr> apply_at(const Expr& root, std::span<const std::size_t> path, const RuleFn& rule) {
    const Expr& sub = subterm(root, path);
    if (sub.kind() == Expr::Kind::TwistToken) return std::nullopt;
    auto r = rule(sub, path, root);
    if (!r) return std::nullopt;
    return replace_at(root, path, *r);
}

} // namespace pinplus::detail
