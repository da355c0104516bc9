#pragma once

// Manifold expressions over the generator table.
//
// An Expr is an immutable, shared tree.  Leaves are atoms; interior nodes
// are connected sums (n-ary, always flat), circle sums, Bar (Pin+ structure
// reversal) and the mapping-torus twist, which is stored as a circle sum
// whose right child is the internal twist token.  The topological
// invariants of every node are computed once, at construction.

#include "pinplus/atoms.hpp"
#include "pinplus/group_tag.hpp"

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pinplus {

struct Topology {
    bool orientable = true;
    GroupTag pi1;
    int chi = 0;
    int sigma = 0;
    int h1dim = 0;
    bool w2zero = true;

    bool operator==(const Topology&) const = default;
};

class Expr {
public:
    enum class Kind { Atom, ConnSum, CircleSum, Bar, TwistToken };

    Kind kind() const;
    AtomId atom_id() const;
    std::span<const Expr> children() const;
    const Expr& child(std::size_t i) const { return children()[i]; }

    bool is_atom() const { return kind() == Kind::Atom; }
    bool is_atom(AtomId id) const { return is_atom() && atom_id() == id; }
    bool is_conn_sum() const { return kind() == Kind::ConnSum; }
    bool is_circle_sum() const { return kind() == Kind::CircleSum; }
    bool is_bar() const { return kind() == Kind::Bar; }
    // CircleSum whose right slot is the mapping-torus token.
    bool is_twist() const;

    const Topology& topology() const;
    // Canonical text in the DSL grammar; injective on trees.
    const std::string& str() const;

    bool operator==(const Expr& rhs) const { return str() == rhs.str(); }
    bool operator<(const Expr& rhs) const { return str() < rhs.str(); }

    // Raw node builders; these check structural validity only.  Use the
    // free functions below for the checked algebra.
    static Expr make_atom(AtomId id);
    static Expr make_conn_sum(std::vector<Expr> summands);
    static Expr make_circle_sum(Expr left, Expr right);
    static Expr make_bar(Expr inner);
    static Expr make_twist(Expr inner);

private:
    struct Node;
    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

// Checked operations.  All throw PreconditionError (or LookupError for
// atom()) when an operand is outside the operation's domain.
Expr atom(std::string_view name);
Expr atom(AtomId id);
Expr conn_sum(const Expr& x, const Expr& y);
Expr conn_sum(std::vector<Expr> summands);
Expr circle_sum(const Expr& x, const Expr& y);
Expr bar(const Expr& x);
Expr twist(const Expr& x);
// X # S2xS2  ->  X #_{S1} A.
Expr gluck_twist(const Expr& x);

// n-fold circle sum of x with itself, left-associated; n >= 1.
Expr circle_power(const Expr& x, int n);
// x # n*(S2xS2); n >= 0.
Expr stabilize(const Expr& x, int n);

Expr normalize(const Expr& x);

bool pin_plus(const Expr& x);
int h1_dim(const Expr& x);
// 2^h1dim when the expression is Pin+, 0 otherwise.
long long structure_count(const Expr& x);

// Index of the summand whose orientation-reversing loop is used when a
// connected sum is circle-summed: the left-most non-orientable summand.
std::optional<std::size_t> designated_summand(std::span<const Expr> summands);

// Depth of the tree with atoms at depth 1; twist counts as one level.
int depth(const Expr& x);

// Number of top-level S2xS2 summands.
int count_s2xs2(const Expr& x);

} // namespace pinplus
