#pragma once

// Self-checking reproduction tables.  Every row carries its expected value
// as embedded golden data, labelled "published" when it is stated in the
// literature and "derived" when it was computed independently (by the
// enumeration oracle) and frozen here.

#include "pinplus/report.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pinplus {

struct TableRow {
    std::vector<std::string> cells; // one per Table::columns entry
    std::string expected;
    std::string basis; // "published" or "derived"
    bool ok = true;
    std::string note;
};

struct Table {
    std::string target;
    std::string title;
    std::vector<std::string> columns;
    std::vector<TableRow> rows;

    std::size_t mismatches() const;
};

// thm0, thmPr, thmM, thmInv, propValues, lemValues, propComp.
std::span<const std::string_view> table_targets();

// Throws LookupError for an unknown target.
Table reproduce(std::string_view target);

std::string render_table(const Table& table, Format format);

} // namespace pinplus
