#include "pinplus/classify.hpp"

#include "pinplus/errors.hpp"
#include "rewrite.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace pinplus {

using detail::Path;
using detail::RuleFn;

namespace {

constexpr std::array<RuleInfo, 7> kHomeoRules{{
    {"R0", "bar(X) ~ X outside circle sums: reversing the Pin+ structure keeps the manifold"},
    {"R1", "twist(X) ~ X when pi1(X) = Z2: the mapping-torus circle sum keeps the homeomorphism type"},
    {"R2", "X #s1 A ~ X # S2xS2"},
    {"R3", "A ~ S3tS1 # S2xS2"},
    {"R4", "Q ~ RP4"},
    {"R5", "congruence: rules apply to summands of # and operands of #s1"},
    {"R6", "stable classification: non-orientable, pi1 = Z, w2 = 0, equal chi >= 6, "
           "at least three S2xS2 summands"},
}};

constexpr std::array<RuleInfo, 4> kDiffeoRules{{
    {"D0", "identical canonical forms"},
    {"D1", "twist(W) # CP2 = W # CP2 for pi1(W) = Z2"},
    {"D2", "(W #s1 A) # CP2 = W # S2xS2 # CP2"},
    {"D3", "Q # CP2 = RP4 # CP2"},
}};

bool pi1_is(const Expr& e, GroupTag::Kind k) { return e.topology().pi1.kind() == k; }

// ---- homeomorphism rules -------------------------------------------------

std::optional<Expr> rule_r0(const Expr& sub, std::span<const std::size_t> path, const Expr& root) {
    if (!sub.is_bar()) return std::nullopt;
    const bool top = path.empty() || (path.size() == 1 && root.is_conn_sum());
    if (!top) return std::nullopt;
    return sub.child(0);
}

std::optional<Expr> rule_r1(const Expr& sub, std::span<const std::size_t>, const Expr&) {
    if (sub.is_twist() && pi1_is(sub.child(0), GroupTag::Kind::Z2)) return sub.child(0);
    return std::nullopt;
}

std::optional<Expr> rule_r2(const Expr& sub, std::span<const std::size_t>, const Expr&) {
    if (sub.is_circle_sum() && !sub.is_twist() && sub.child(1).is_atom(AtomId::A))
        return Expr::make_conn_sum({sub.child(0), atom(AtomId::S2xS2)});
    return std::nullopt;
}

std::optional<Expr> rule_r3(const Expr& sub, std::span<const std::size_t>, const Expr&) {
    if (sub.is_atom(AtomId::A)) return Expr::make_conn_sum({atom(AtomId::S3tS1), atom(AtomId::S2xS2)});
    return std::nullopt;
}

std::optional<Expr> rule_r4(const Expr& sub, std::span<const std::size_t>, const Expr&) {
    if (sub.is_atom(AtomId::Q)) return atom(AtomId::RP4);
    return std::nullopt;
}

struct NamedRule {
    std::string_view id;
    RuleFn fn;
};

// Priority order: R2 must see X #s1 A before R3 expands the A.
const std::vector<NamedRule>& homeo_rule_order() {
    static const std::vector<NamedRule> rules{
        {"R0", rule_r0}, {"R1", rule_r1}, {"R2", rule_r2}, {"R4", rule_r4}, {"R3", rule_r3}};
    return rules;
}

// ---- diffeomorphism rules after # CP2 -----------------------------------

std::optional<Expr> rule_d1(const Expr& sub, std::span<const std::size_t> path, const Expr&) {
    if (path.empty()) return std::nullopt;
    if (sub.is_twist() && pi1_is(sub.child(0), GroupTag::Kind::Z2)) return sub.child(0);
    return std::nullopt;
}

std::optional<Expr> rule_d2(const Expr& sub, std::span<const std::size_t> path, const Expr&) {
    if (path.size() != 1) return std::nullopt;
    if (sub.is_circle_sum() && !sub.is_twist() && sub.child(1).is_atom(AtomId::A))
        return Expr::make_conn_sum({sub.child(0), atom(AtomId::S2xS2)});
    return std::nullopt;
}

std::optional<Expr> rule_d3(const Expr& sub, std::span<const std::size_t> path, const Expr&) {
    if (!path.empty() && sub.is_atom(AtomId::Q)) return atom(AtomId::RP4);
    return std::nullopt;
}

const std::vector<NamedRule>& diffeo_rule_order() {
    static const std::vector<NamedRule> rules{{"D2", rule_d2}, {"D1", rule_d1}, {"D3", rule_d3}};
    return rules;
}

const RuleFn& rule_by_id(std::string_view id) {
    for (const auto* table : {&homeo_rule_order(), &diffeo_rule_order()})
        for (const auto& r : *table)
            if (r.id == id) return r.fn;
    throw std::invalid_argument("unknown rule id " + std::string(id));
}

// Rewrites to a fixpoint, always taking the highest-priority applicable rule.
Expr rewrite_fixpoint(const Expr& start, const std::vector<NamedRule>& rules, int side,
                      std::vector<RewriteStep>& steps) {
    Expr cur = normalize(start);
    for (;;) {
        bool changed = false;
        for (const auto& rule : rules) {
            auto m = detail::find_first(cur, rule.fn);
            if (!m) continue;
            Expr next = normalize(detail::replace_at(cur, m->path, m->replacement));
            steps.push_back({side, std::string(rule.id), m->path, cur.str(), next.str()});
            cur = std::move(next);
            changed = true;
            break;
        }
        if (!changed) return cur;
    }
}

bool stable_rule_applies(const Expr& a, const Expr& b) {
    for (const Expr* e : {&a, &b}) {
        const auto& t = e->topology();
        if (t.orientable || !t.w2zero || t.pi1.kind() != GroupTag::Kind::Z || t.chi < 6) return false;
        if (count_s2xs2(*e) < 3) return false;
    }
    return a.topology().chi == b.topology().chi;
}

std::string mismatch_note(const Expr& x, const Expr& y) {
    const auto& a = x.topology();
    const auto& b = y.topology();
    std::string note;
    auto add = [&](const std::string& s) { note += (note.empty() ? "" : "; ") + s; };
    if (a.chi != b.chi) add("chi " + std::to_string(a.chi) + " vs " + std::to_string(b.chi));
    if (a.orientable != b.orientable) add("orientability differs");
    if (a.pi1 != b.pi1) add("pi1 " + a.pi1.name() + " vs " + b.pi1.name());
    if (a.h1dim != b.h1dim) add("h1dim " + std::to_string(a.h1dim) + " vs " + std::to_string(b.h1dim));
    if (a.w2zero != b.w2zero) add("w2zero differs");
    if (note.empty()) return "no rule chain connects the canonical forms";
    return "invariant mismatch: " + note;
}

void check_yes_invariants(const Expr& x, const Expr& y) {
    const auto& a = x.topology();
    const auto& b = y.topology();
    if (a.chi != b.chi || a.orientable != b.orientable || a.pi1 != b.pi1 || a.h1dim != b.h1dim ||
        a.w2zero != b.w2zero)
        throw std::logic_error("homeomorphism verdict with mismatched invariants: " + x.str() +
                               " vs " + y.str());
}

bool has_top_level_cp2(const Expr& n) {
    if (!n.is_conn_sum()) return false;
    return std::any_of(n.children().begin(), n.children().end(),
                       [](const Expr& e) { return e.is_atom(AtomId::CP2); });
}

std::vector<std::string> chain_of(const std::vector<RewriteStep>& steps) {
    std::vector<std::string> out;
    for (const auto& s : steps) {
        if (!s.path.empty()) out.emplace_back("R5");
        out.push_back(s.rule);
    }
    return out;
}

} // namespace

std::span<const RuleInfo> homeo_rules() { return kHomeoRules; }
std::span<const RuleInfo> diffeo_rules() { return kDiffeoRules; }

std::vector<std::string> HomeoVerdict::chain() const {
    auto out = chain_of(steps);
    if (stable_rule) out.emplace_back("R6");
    return out;
}

std::vector<std::string> SmoothVerdict::chain() const {
    std::vector<std::string> out;
    if (outcome != Outcome::Diffeomorphic) return out;
    if (steps.empty()) return {"D0"};
    for (const auto& s : steps) out.push_back(s.rule);
    return out;
}

std::string outcome_name(HomeoVerdict::Outcome o) {
    return o == HomeoVerdict::Outcome::Yes ? "Yes" : "Unknown";
}

std::string outcome_name(SmoothVerdict::Outcome o) {
    switch (o) {
    case SmoothVerdict::Outcome::Exotic: return "Exotic";
    case SmoothVerdict::Outcome::Diffeomorphic: return "Diffeomorphic";
    case SmoothVerdict::Outcome::Unknown: return "Unknown";
    }
    return "Unknown";
}

HomeoVerdict homeo(const Expr& x, const Expr& y) {
    HomeoVerdict v;
    const Expr a = rewrite_fixpoint(x, homeo_rule_order(), 0, v.steps);
    const Expr b = rewrite_fixpoint(y, homeo_rule_order(), 1, v.steps);
    v.canonical[0] = a.str();
    v.canonical[1] = b.str();
    if (a == b) {
        v.outcome = HomeoVerdict::Outcome::Yes;
    } else if (stable_rule_applies(a, b)) {
        v.outcome = HomeoVerdict::Outcome::Yes;
        v.stable_rule = true;
    } else {
        v.note = mismatch_note(x, y);
        return v;
    }
    check_yes_invariants(x, y);
    return v;
}

bool replay(const HomeoVerdict& verdict, const Expr& x, const Expr& y) {
    Expr cur[2] = {normalize(x), normalize(y)};
    for (const auto& step : verdict.steps) {
        if (step.side != 0 && step.side != 1) return false;
        Expr& e = cur[step.side];
        if (e.str() != step.before) return false;
        auto next = detail::apply_at(e, step.path, rule_by_id(step.rule));
        if (!next) return false;
        e = normalize(*next);
        if (e.str() != step.after) return false;
    }
    if (cur[0].str() != verdict.canonical[0] || cur[1].str() != verdict.canonical[1]) return false;
    switch (verdict.outcome) {
    case HomeoVerdict::Outcome::Yes:
        return verdict.stable_rule ? stable_rule_applies(cur[0], cur[1]) : cur[0] == cur[1];
    case HomeoVerdict::Outcome::Unknown:
        return cur[0] != cur[1] && !stable_rule_applies(cur[0], cur[1]);
    }
    return false;
}

StabilizedForm cp2_stabilize(const Expr& x) {
    const Expr n = normalize(x);
    if (!has_top_level_cp2(n))
        throw PreconditionError("'" + x.str() + "' has no top-level CP2 summand");
    StabilizedForm out{n, {}};
    out.result = rewrite_fixpoint(n, diffeo_rule_order(), 0, out.steps);
    return out;
}

SmoothVerdict smooth_compare(const Expr& x, const Expr& y) {
    SmoothVerdict v;
    v.homeo = homeo(x, y);
    if (pin_plus(x)) v.eta[0] = eta_set(x);
    if (pin_plus(y)) v.eta[1] = eta_set(y);

    if (v.homeo.yes() && v.eta[0] && v.eta[1] && v.eta[0]->disjoint_from(*v.eta[1])) {
        v.outcome = SmoothVerdict::Outcome::Exotic;
        return v;
    }
    if (normalize(x) == normalize(y)) {
        v.outcome = SmoothVerdict::Outcome::Diffeomorphic;
        return v;
    }
    if (has_top_level_cp2(normalize(x)) && has_top_level_cp2(normalize(y))) {
        std::vector<RewriteStep> steps;
        const Expr a = rewrite_fixpoint(x, diffeo_rule_order(), 0, steps);
        const Expr b = rewrite_fixpoint(y, diffeo_rule_order(), 1, steps);
        if (a == b) {
            v.outcome = SmoothVerdict::Outcome::Diffeomorphic;
            v.steps = std::move(steps);
            return v;
        }
    }
    if (!v.homeo.yes())
        v.note = "homeomorphism not established (" + v.homeo.note + ")";
    else if (!v.eta[0] || !v.eta[1])
        v.note = "no Pin+ structure, eta does not apply";
    else
        v.note = "eta sets overlap";
    return v;
}

LimitsReport limits_report(std::span<const Expr> family) {
    if (family.empty()) throw PreconditionError("empty family");
    for (const auto& e : family) {
        if (!pi1_is(e, GroupTag::Kind::Z2))
            throw PreconditionError("'" + e.str() + "' does not have pi1 = Z2");
        if (!pin_plus(e)) throw PreconditionError("'" + e.str() + "' is not Pin+");
        if (!homeo(family.front(), e).yes())
            throw PreconditionError("'" + e.str() + "' is not certified homeomorphic to '" +
                                    family.front().str() + "'");
    }

    LimitsReport r;
    for (std::size_t i = 0; i < family.size(); ++i) {
        const EtaSet s = eta_set(family[i]);
        auto it = std::find_if(r.classes.begin(), r.classes.end(),
                               [&](const LimitsReport::Class& c) { return c.set == s; });
        if (it == r.classes.end())
            r.classes.push_back({s, {i}});
        else
            it->members.push_back(i);
    }
    if (r.classes.size() > 2)
        throw std::logic_error("more than two eta classes in a pi1 = Z2 homeomorphism class");
    if (r.classes.size() == 2) {
        if (r.classes[1].set != r.classes[0].set.shifted(kUnitShift))
            throw std::logic_error("eta classes are not related by the +1 shift");
        r.shift = kUnitShift;
    }
    return r;
}

} // namespace pinplus
