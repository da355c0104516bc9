#pragma once

// Byte-stable text and JSON documents for the command-line front end.

#include "pinplus/expr.hpp"
#include "pinplus/oracle.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace pinplus {

enum class Format { Text, Json };

std::optional<Format> format_from_name(std::string_view name);

struct ReportOptions {
    bool oracle = false; // recompute eta sets by enumeration and require agreement
    std::uint64_t max_enum = kDefaultEnumerationBound;
};

// Profiles longer than this are summarized in reports.
inline constexpr std::size_t kMaxReportedEntries = 64;

// Invariant card of the normal form of x.  With opts.oracle set, throws
// Error if the enumerated eta set disagrees with the profile.
std::string report(const Expr& x, Format format, const ReportOptions& opts = {});

// Homeomorphism and smooth verdicts with their rewrite chains.
std::string compare_report(const Expr& x, const Expr& y, Format format, const ReportOptions& opts = {});

// Orientation cover with the rule trace.
std::string cover_report(const Expr& x, Format format);

} // namespace pinplus
