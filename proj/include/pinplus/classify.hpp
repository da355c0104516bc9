#pragma once

// Homeomorphism and smooth-comparison verdicts.
//
// Homeomorphism is certified, never refuted: both expressions are rewritten
// towards standard pieces by a fixed, prioritized rule base and the
// resulting canonical forms are compared.  Every rewrite is recorded so a
// verdict can be replayed step by step.

#include "pinplus/expr.hpp"
#include "pinplus/invariants.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pinplus {

struct RuleInfo {
    std::string_view id;
    std::string_view statement;
};

// R0-R6 (homeomorphism) and D0-D3 (diffeomorphism).
std::span<const RuleInfo> homeo_rules();
std::span<const RuleInfo> diffeo_rules();

struct RewriteStep {
    int side = 0;                   // 0: first operand, 1: second operand
    std::string rule;               // rule id
    std::vector<std::size_t> path;  // child indices from the root of `before`
    std::string before;
    std::string after;
};

struct HomeoVerdict {
    enum class Outcome { Yes, Unknown };

    Outcome outcome = Outcome::Unknown;
    std::vector<RewriteStep> steps;
    bool stable_rule = false; // closed by R6 rather than by equal canonical forms
    std::string canonical[2];
    std::string note;

    bool yes() const { return outcome == Outcome::Yes; }
    // Rule ids in application order; R5 marks a rewrite below the root.
    std::vector<std::string> chain() const;
};

HomeoVerdict homeo(const Expr& x, const Expr& y);

// Re-executes every recorded step from the normal forms of x and y and
// checks that each intermediate form and the conclusion are reproduced.
bool replay(const HomeoVerdict& verdict, const Expr& x, const Expr& y);

struct SmoothVerdict {
    enum class Outcome { Exotic, Diffeomorphic, Unknown };

    Outcome outcome = Outcome::Unknown;
    HomeoVerdict homeo;
    std::optional<EtaSet> eta[2];
    std::vector<RewriteStep> steps; // D-rule chain of a Diffeomorphic verdict
    std::string note;

    std::vector<std::string> chain() const;
};

std::string outcome_name(HomeoVerdict::Outcome o);
std::string outcome_name(SmoothVerdict::Outcome o);

SmoothVerdict smooth_compare(const Expr& x, const Expr& y);

struct StabilizedForm {
    Expr result;
    std::vector<RewriteStep> steps;
};

// Collapses the exotic pieces of x # CP2.  Throws PreconditionError when
// the normal form of x has no top-level CP2 summand.
StabilizedForm cp2_stabilize(const Expr& x);

struct LimitsReport {
    struct Class {
        EtaSet set;
        std::vector<std::size_t> members;
    };
    std::vector<Class> classes;
    std::optional<Mod32> shift; // second class minus first, when there are two
};

// Partitions a family of mutually homeomorphic pi1 = Z2 expressions by eta
// set.  Throws PreconditionError if the family is not of that kind and
// std::logic_error if more than two classes appear or the two classes are
// not related by the +1 shift.
LimitsReport limits_report(std::span<const Expr> family);

} // namespace pinplus
