#pragma once

// Orientation double covers by table lookup.  Each rule maps a shape of
// non-orientable expression to the canonical expression of its cover; the
// table is fixed at compile time and every application is checked against
// chi(cover) = 2 chi(base), orientability and vanishing signature.

#include "pinplus/expr.hpp"
#include "pinplus/group_tag.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pinplus {

struct CoverRule {
    std::string_view id;
    std::string_view pattern;
    std::string_view result;
    std::string_view source;
};

std::span<const CoverRule> cover_rules();

struct CoverStep {
    std::string rule;
    std::string input;
    std::string output;
};

struct CoverResult {
    Expr cover;
    std::vector<CoverStep> steps;
};

// Throws UnknownCoverError for orientable input or when no rule matches.
CoverResult orientation_cover(const Expr& x);

struct InvolutionReport {
    CoverResult exotic_cover;
    CoverResult standard_cover;
    Expr cover;        // common canonical cover
    GroupTag group;    // deck group = pi1 of the orbit spaces
    std::vector<std::string> notes;
};

// Requires smooth_compare(exotic, standard) = Exotic and identical
// canonical covers; throws NoVerdictError otherwise.
InvolutionReport involution_report(const Expr& exotic, const Expr& standard);

} // namespace pinplus
