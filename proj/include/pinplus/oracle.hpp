#pragma once

// Brute-force eta sets, recomputed from the atom rows alone.
//
// Every atom occurrence gets its own label; a circle sum contributes the
// constraint that the loop coordinates of its two operands agree.  The
// oracle enumerates all occurrence labels, keeps the consistent ones and
// sums the atom values.  It shares no code with the fused profile
// computation in invariants.

#include "pinplus/expr.hpp"
#include "pinplus/invariants.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pinplus {

inline constexpr std::uint64_t kDefaultEnumerationBound = std::uint64_t{1} << 20;

struct OracleResult {
    EtaSet set;
    std::uint64_t enumerated = 0; // all occurrence labellings
    std::uint64_t accepted = 0;   // labellings satisfying the circle-sum constraints
};

// Throws NoPinStructureError for non-Pin+ input and EnumerationBoundError
// when the number of labellings exceeds `bound`.
OracleResult brute_eta(const Expr& x, std::uint64_t bound = kDefaultEnumerationBound);
EtaSet brute_eta_set(const Expr& x, std::uint64_t bound = kDefaultEnumerationBound);

struct LawCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct LawReport {
    std::vector<LawCheck> checks;
    bool all_passed() const;
};

// Every expression of tree height <= max_depth over the generator atoms
// built with #, #s1, bar and twist, skipping constructions whose
// preconditions fail.  Atoms have height 1.  Deduplicated by rendered form,
// in increasing height.
std::vector<Expr> enumerate_expressions(int max_depth);

// Z/32 group axioms, the order-16 relation for RP4, and the
// connected-sum and Bar laws over the atom table.
LawReport check_laws();

} // namespace pinplus
