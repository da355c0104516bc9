#include "pinplus/expr.hpp"

#include "pinplus/errors.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace pinplus {

struct Expr::Node {
    Kind kind = Kind::Atom;
    AtomId atom = AtomId::S4;
    std::vector<Expr> children;
    Topology topo;
    std::string text;
};

namespace {

Topology atom_topology(AtomId id) {
    const auto& r = atom_record(id);
    return Topology{r.orientable, GroupTag(r.pi1), r.chi, r.sigma, r.h1dim, r.w2zero};
}

std::string parenthesize_summand(const Expr& e) {
    if (e.is_circle_sum() && !e.is_twist()) return "(" + e.str() + ")";
    return e.str();
}

std::string render_conn_sum(std::span<const Expr> summands) {
    std::string out;
    std::size_t i = 0;
    while (i < summands.size()) {
        std::size_t j = i + 1;
        while (j < summands.size() && summands[j] == summands[i]) ++j;
        if (!out.empty()) out += " # ";
        const std::size_t run = j - i;
        if (run == 1)
            out += parenthesize_summand(summands[i]);
        else
            out += std::to_string(run) + "*(" + summands[i].str() + ")";
        i = j;
    }
    return out;
}

std::string render_circle_sum(const Expr& left, const Expr& right) {
    std::string l = left.is_conn_sum() ? "(" + left.str() + ")" : left.str();
    bool wrap_right = right.is_conn_sum() || (right.is_circle_sum() && !right.is_twist());
    std::string r = wrap_right ? "(" + right.str() + ")" : right.str();
    return l + " #s1 " + r;
}

} // namespace

Expr::Kind Expr::kind() const { return node_->kind; }

AtomId Expr::atom_id() const {
    if (node_->kind != Kind::Atom) throw std::logic_error("atom_id() on a non-atom expression");
    return node_->atom;
}

std::span<const Expr> Expr::children() const { return node_->children; }

bool Expr::is_twist() const {
    return node_->kind == Kind::CircleSum && node_->children[1].kind() == Kind::TwistToken;
}

const Topology& Expr::topology() const { return node_->topo; }

const std::string& Expr::str() const { return node_->text; }

Expr Expr::make_atom(AtomId id) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Atom;
    n->atom = id;
    n->topo = atom_topology(id);
    n->text = std::string(atom_name(id));
    return Expr(std::move(n));
}

Expr Expr::make_conn_sum(std::vector<Expr> summands) {
    std::vector<Expr> flat;
    for (auto& s : summands) {
        if (s.kind() == Kind::TwistToken)
            throw std::invalid_argument("twist token outside a circle sum");
        if (s.is_conn_sum())
            flat.insert(flat.end(), s.children().begin(), s.children().end());
        else
            flat.push_back(std::move(s));
    }
    if (flat.size() < 2) throw std::invalid_argument("connected sum needs at least two summands");

    auto n = std::make_shared<Node>();
    n->kind = Kind::ConnSum;
    Topology t;
    t.orientable = true;
    t.w2zero = true;
    std::vector<GroupTag> groups;
    for (const auto& s : flat) {
        const auto& st = s.topology();
        t.orientable = t.orientable && st.orientable;
        t.w2zero = t.w2zero && st.w2zero;
        t.chi += st.chi;
        t.sigma += st.sigma;
        t.h1dim += st.h1dim;
        groups.push_back(st.pi1);
    }
    t.chi -= 2 * static_cast<int>(flat.size() - 1);
    t.pi1 = GroupTag::free_product(groups);
    n->topo = std::move(t);
    n->text = render_conn_sum(flat);
    n->children = std::move(flat);
    return Expr(std::move(n));
}

Expr Expr::make_circle_sum(Expr left, Expr right) {
    if (left.kind() == Kind::TwistToken || right.kind() == Kind::TwistToken)
        throw std::invalid_argument("twist token outside the right slot of a twist");
    auto n = std::make_shared<Node>();
    n->kind = Kind::CircleSum;
    const auto& lt = left.topology();
    const auto& rt = right.topology();
    Topology t;
    t.orientable = false;
    t.pi1 = circle_sum_group(lt.pi1, rt.pi1);
    t.chi = lt.chi + rt.chi;
    t.sigma = lt.sigma + rt.sigma;
    t.h1dim = lt.h1dim + rt.h1dim - 1;
    t.w2zero = lt.w2zero && rt.w2zero;
    n->topo = std::move(t);
    n->text = render_circle_sum(left, right);
    n->children = {std::move(left), std::move(right)};
    return Expr(std::move(n));
}

Expr Expr::make_bar(Expr inner) {
    if (inner.kind() == Kind::TwistToken) throw std::invalid_argument("bar of the twist token");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Bar;
    n->topo = inner.topology();
    n->text = "bar(" + inner.str() + ")";
    n->children = {std::move(inner)};
    return Expr(std::move(n));
}

Expr Expr::make_twist(Expr inner) {
    if (inner.kind() == Kind::TwistToken) throw std::invalid_argument("twist of the twist token");
    auto token = std::make_shared<Node>();
    token->kind = Kind::TwistToken;
    token->text = "<MA>";

    auto n = std::make_shared<Node>();
    n->kind = Kind::CircleSum;
    // The mapping torus changes neither the homeomorphism type nor H^1.
    n->topo = inner.topology();
    n->text = "twist(" + inner.str() + ")";
    n->children = {std::move(inner), Expr(std::move(token))};
    return Expr(std::move(n));
}

Expr atom(std::string_view name) { return Expr::make_atom(atom_id_from_name(name)); }

Expr atom(AtomId id) { return Expr::make_atom(id); }

Expr conn_sum(const Expr& x, const Expr& y) { return Expr::make_conn_sum({x, y}); }

Expr conn_sum(std::vector<Expr> summands) {
    if (summands.size() == 1) return summands.front();
    if (summands.empty()) throw PreconditionError("empty connected sum");
    return Expr::make_conn_sum(std::move(summands));
}

Expr circle_sum(const Expr& x, const Expr& y) {
    for (const Expr* e : {&x, &y}) {
        if (e->topology().orientable)
            throw PreconditionError("circle sum needs non-orientable operands; '" + e->str() +
                                    "' is orientable");
    }
    return Expr::make_circle_sum(x, y);
}

Expr bar(const Expr& x) {
    if (!pin_plus(x))
        throw PreconditionError("bar needs a Pin+ operand; '" + x.str() + "' has w2 != 0");
    return Expr::make_bar(x);
}

Expr twist(const Expr& x) {
    if (x.topology().orientable)
        throw PreconditionError("twist needs a non-orientable operand; '" + x.str() +
                                "' is orientable");
    if (!pin_plus(x))
        throw PreconditionError("twist needs a Pin+ operand; '" + x.str() + "' has w2 != 0");
    return Expr::make_twist(x);
}

Expr gluck_twist(const Expr& x) {
    const Expr n = normalize(x);
    const std::string what = "'" + x.str() + "' is not a Gluck-twistable form (X # S2xS2)";
    if (!n.is_conn_sum()) throw PreconditionError(what);

    std::vector<Expr> rest(n.children().begin(), n.children().end());
    auto it = std::find_if(rest.rbegin(), rest.rend(),
                           [](const Expr& e) { return e.is_atom(AtomId::S2xS2); });
    if (it == rest.rend()) throw PreconditionError(what);
    rest.erase(std::next(it).base());

    const Expr base = conn_sum(std::move(rest));
    if (base.topology().orientable || !pin_plus(base))
        throw PreconditionError(what + ": the remaining summand must be non-orientable Pin+");
    return normalize(circle_sum(base, atom(AtomId::A)));
}

Expr circle_power(const Expr& x, int n) {
    if (n < 1) throw PreconditionError("circle power needs n >= 1");
    Expr out = x;
    for (int i = 1; i < n; ++i) out = circle_sum(out, x);
    return out;
}

Expr stabilize(const Expr& x, int n) {
    if (n < 0) throw PreconditionError("stabilization count must be non-negative");
    if (n == 0) return x;
    std::vector<Expr> summands{x};
    for (int i = 0; i < n; ++i) summands.push_back(atom(AtomId::S2xS2));
    return conn_sum(std::move(summands));
}

std::optional<std::size_t> designated_summand(std::span<const Expr> summands) {
    for (std::size_t i = 0; i < summands.size(); ++i)
        if (!summands[i].topology().orientable) return i;
    return std::nullopt;
}

namespace {

// in_loop: the expression sits under a circle sum, so the left-most
// non-orientable summand of a connected sum must stay left-most.
Expr normalize_in(const Expr& x, bool in_loop) {
    switch (x.kind()) {
    case Expr::Kind::Atom:
    case Expr::Kind::TwistToken:
        return x;
    case Expr::Kind::Bar: {
        Expr inner = normalize_in(x.child(0), in_loop);
        if (inner.is_bar()) return inner.child(0);
        return Expr::make_bar(std::move(inner));
    }
    case Expr::Kind::CircleSum: {
        if (x.is_twist()) return Expr::make_twist(normalize_in(x.child(0), true));
        Expr l = normalize_in(x.child(0), true);
        Expr r = normalize_in(x.child(1), true);
        if (l.is_atom(AtomId::RP4) && r.is_bar() && r.child(0).is_atom(AtomId::RP4))
            return Expr::make_atom(AtomId::S2gR);
        return Expr::make_circle_sum(std::move(l), std::move(r));
    }
    case Expr::Kind::ConnSum: {
        std::vector<Expr> summands;
        for (const auto& c : x.children()) {
            Expr n = normalize_in(c, in_loop);
            if (n.is_conn_sum())
                summands.insert(summands.end(), n.children().begin(), n.children().end());
            else
                summands.push_back(std::move(n));
        }
        std::erase_if(summands, [](const Expr& e) { return e.is_atom(AtomId::S4); });
        if (summands.empty()) return Expr::make_atom(AtomId::S4);
        if (summands.size() == 1) return summands.front();

        auto first_sorted = summands.begin();
        if (in_loop) {
            if (auto d = designated_summand(summands)) {
                std::rotate(summands.begin(), summands.begin() + static_cast<long>(*d),
                            summands.begin() + static_cast<long>(*d) + 1);
                ++first_sorted;
            }
        }
        std::stable_sort(first_sorted, summands.end());
        return Expr::make_conn_sum(std::move(summands));
    }
    }
    return x;
}

} // namespace

Expr normalize(const Expr& x) { return normalize_in(x, false); }

bool pin_plus(const Expr& x) { return x.topology().w2zero; }

int h1_dim(const Expr& x) { return x.topology().h1dim; }

long long structure_count(const Expr& x) {
    if (!pin_plus(x)) return 0;
    return 1LL << h1_dim(x);
}

int depth(const Expr& x) {
    if (x.is_atom()) return 1;
    if (x.is_twist()) return 1 + depth(x.child(0));
    int d = 0;
    for (const auto& c : x.children()) d = std::max(d, depth(c));
    return 1 + d;
}

int count_s2xs2(const Expr& x) {
    if (x.is_atom(AtomId::S2xS2)) return 1;
    if (!x.is_conn_sum()) return 0;
    return static_cast<int>(std::count_if(x.children().begin(), x.children().end(),
                                          [](const Expr& e) { return e.is_atom(AtomId::S2xS2); }));
}

} // namespace pinplus
