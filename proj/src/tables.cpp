#include "pinplus/tables.hpp"

#include "json_out.hpp"
#include "pinplus/classify.hpp"
#include "pinplus/cover.hpp"
#include "pinplus/errors.hpp"
#include "pinplus/invariants.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace pinplus {

using detail::Json;

namespace {

constexpr std::string_view kPublished = "published";
constexpr std::string_view kDerived = "derived";

constexpr std::array<std::string_view, 7> kTargets = {"thm0",       "thmPr",     "thmM",    "thmInv",
                                                       "propValues", "lemValues", "propComp"};

EtaSet nums(const std::vector<int>& v) {
    std::vector<Mod32> out;
    for (int k : v) out.emplace_back(k);
    return EtaSet(std::move(out));
}

std::string eta_cell(const EtaSet& s) { return s.str() + " = " + s.fraction_str(); }

std::string expected_sets(const EtaSet& a, const EtaSet& b) { return a.str() + " vs " + b.str(); }

Expr piece(std::string_view name, int r = 0) {
    if (name == "S2gR") return atom(AtomId::S2gR);
    return circle_power(atom(AtomId::RP4), r);
}

// The non-orientable pieces whose exotic partners are produced by the
// mapping-torus twist.
struct Piece {
    std::string label;
    Expr expr;
};

std::vector<Piece> twist_pieces() {
    return {{"S2gR", piece("S2gR")},
            {"csum(1, RP4)", piece("RP4", 1)},
            {"csum(2, RP4)", piece("RP4", 2)},
            {"csum(3, RP4)", piece("RP4", 3)}};
}

Table prop_values() {
    Table t{"propValues", "eta sets of the four stabilized families", {"item", "k", "expr", "eta"}, {}};
    auto add = [&](const std::string& item, int k, const Expr& x, const EtaSet& want) {
        const Expr e = normalize(stabilize(x, k - 1));
        const EtaSet got = eta_set(e);
        t.rows.push_back({{item, std::to_string(k), e.str(), eta_cell(got)},
                          want.str(),
                          std::string(kPublished),
                          got == want,
                          {}});
    };
    // Item 2 for r = 1, 2, 3 is {r/8, -r/8}.
    const std::array<EtaSet, 3> item2 = {nums({2, 30}), nums({4, 28}), nums({6, 26})};
    for (int k = 1; k <= 4; ++k) add("1", k, atom(AtomId::S2gR), nums({0}));
    for (int r = 1; r <= 3; ++r)
        for (int k = 1; k <= 4; ++k)
            add("2 (r=" + std::to_string(r) + ")", k, circle_power(atom(AtomId::RP4), r), item2[r - 1]);
    for (int k = 1; k <= 4; ++k) add("3", k, atom(AtomId::S3tS1), nums({0}));
    for (int k = 1; k <= 4; ++k) add("4", k, atom(AtomId::A), nums({16}));
    return t;
}

Table lem_values() {
    Table t{"lemValues", "structure counts and eta sets of the Z-family atoms", {"item", "atom", "structures", "eta"}, {}};
    struct Golden {
        const char* item;
        AtomId atom;
        long long count;
    };
    const std::array<Golden, 4> golden = {{{"L1", AtomId::S3tS1, 2},
                                           {"L2", AtomId::KbxS2, 4},
                                           {"L3", AtomId::Xi3, 4},
                                           {"L4", AtomId::KbxT2, 16}}};
    for (const auto& g : golden) {
        const Expr x = atom(g.atom);
        const long long count = structure_count(x);
        const EtaSet got = eta_set(x);
        const EtaSet want = nums({0});
        t.rows.push_back({{g.item, x.str(), std::to_string(count), eta_cell(got)},
                          std::to_string(g.count) + " structures, " + want.str(),
                          std::string(kPublished),
                          count == g.count && got == want,
                          {}});
    }
    return t;
}

Table prop_comp() {
    Table t{"propComp", "connected sums of two Z2 pieces: all sign combinations", {"X1", "X2", "eta(X1 # X2)"}, {}};
    struct Golden {
        Expr expr;
        int value; // eta = +-value/16
    };
    const std::vector<Golden> golden = {{atom(AtomId::RP4), 2},
                                        {atom(AtomId::Q), 14},
                                        {atom(AtomId::S2gR), 0},
                                        {circle_power(atom(AtomId::RP4), 2), 4},
                                        {circle_power(atom(AtomId::RP4), 3), 6}};
    for (std::size_t i = 0; i < golden.size(); ++i)
        for (std::size_t j = i; j < golden.size(); ++j) {
            const int a = golden[i].value;
            const int b = golden[j].value;
            const EtaSet want = nums({a + b, a - b, -a + b, -a - b});
            const EtaSet got = eta_set(conn_sum(golden[i].expr, golden[j].expr));
            t.rows.push_back({{golden[i].expr.str(), golden[j].expr.str(), eta_cell(got)},
                              want.str(),
                              std::string(kPublished),
                              got == want,
                              {}});
        }
    return t;
}

Table thm0() {
    Table t{"thm0",
            "twisted pieces: exotic pairs detected by eta, collapsed by CP2",
            {"X", "j", "eta(twist)", "eta(standard)", "verdict", "after # CP2"},
            {}};
    const Expr cp2 = atom(AtomId::CP2);
    for (const auto& p : twist_pieces())
        for (int j = 0; j <= 3; ++j) {
            const Expr standard = normalize(stabilize(p.expr, j));
            const Expr exotic = normalize(stabilize(twist(p.expr), j));
            const SmoothVerdict v = smooth_compare(exotic, standard);
            const Expr a = cp2_stabilize(conn_sum(exotic, cp2)).result;
            const Expr b = cp2_stabilize(conn_sum(standard, cp2)).result;
            const bool collapsed = a == b;
            t.rows.push_back({{p.label, std::to_string(j), v.eta[0] ? v.eta[0]->str() : "-",
                               v.eta[1] ? v.eta[1]->str() : "-", outcome_name(v.outcome),
                               collapsed ? "diffeomorphic: " + a.str() : "distinct"},
                              "Exotic; diffeomorphic after # CP2",
                              std::string(kPublished),
                              v.outcome == SmoothVerdict::Outcome::Exotic && collapsed,
                              {}});
        }
    return t;
}

Table thm_pr() {
    Table t{"thmPr", "Gluck twist of X # S2xS2 shifts every eta value by 1", {"X", "Y", "eta(X)", "eta(Y)", "Y ~ X # S2xS2"}, {}};
    struct Golden {
        AtomId atom;
        std::vector<int> shifted;
    };
    const std::vector<Golden> golden = {{AtomId::RP4, {14, 18}},   {AtomId::Q, {2, 30}},
                                        {AtomId::S3tS1, {16}},     {AtomId::A, {0}},
                                        {AtomId::KbxS2, {16}},     {AtomId::Xi3, {16}},
                                        {AtomId::KbxT2, {16}},     {AtomId::S2gR, {16}}};
    for (const auto& g : golden) {
        const Expr x = atom(g.atom);
        const Expr stable = conn_sum(x, atom(AtomId::S2xS2));
        const Expr y = gluck_twist(stable);
        const EtaSet ex = eta_set(x);
        const EtaSet ey = eta_set(y);
        const EtaSet want = nums(g.shifted);
        const HomeoVerdict h = homeo(y, stable);
        t.rows.push_back({{x.str(), y.str(), eta_cell(ex), eta_cell(ey), outcome_name(h.outcome)},
                          want.str(),
                          std::string(kPublished),
                          ey == want && ey == ex.shifted(kUnitShift) && h.yes(),
                          {}});
    }
    return t;
}

Table thm_m() {
    Table t{"thmM",
            "exotic structures detected by eta",
            {"item", "k", "standard", "exotic", "eta(standard)", "eta(exotic)", "verdict"},
            {}};
    const std::array<std::pair<const char*, AtomId>, 4> items = {{{"1", AtomId::S3tS1},
                                                                   {"2", AtomId::KbxS2},
                                                                   {"3", AtomId::Xi3},
                                                                   {"4", AtomId::KbxT2}}};
    auto add = [&](const std::string& item, const std::string& k, const Expr& standard, const Expr& exotic,
                   SmoothVerdict::Outcome want, std::optional<std::pair<EtaSet, EtaSet>> want_sets,
                   std::string_view basis) {
        const SmoothVerdict v = smooth_compare(exotic, standard);
        const EtaSet es = v.eta[1].value_or(EtaSet{});
        const EtaSet ee = v.eta[0].value_or(EtaSet{});
        bool ok = v.outcome == want;
        std::string expected = outcome_name(want);
        if (want_sets) {
            ok = ok && es == want_sets->first && ee == want_sets->second;
            expected += ", " + expected_sets(want_sets->first, want_sets->second);
        }
        t.rows.push_back({{item, k, standard.str(), exotic.str(), es.str(), ee.str(), outcome_name(v.outcome)},
                          expected,
                          std::string(basis),
                          ok,
                          v.outcome == SmoothVerdict::Outcome::Exotic ? std::string{} : v.note});
    };
    for (const auto& [item, a] : items)
        for (int k = 1; k <= 3; ++k) {
            const Expr standard = normalize(stabilize(atom(a), k));
            add(item, std::to_string(k), standard, normalize(gluck_twist(standard)),
                SmoothVerdict::Outcome::Exotic, std::pair{nums({0}), nums({16})}, kPublished);
        }

    // Item 5: X1 # X2 for pieces of the twisted family, the exotic partner
    // twisting X1.  Pairings whose two eta sets overlap stay undecided.
    const auto pieces = twist_pieces();
    for (std::size_t i = 0; i < pieces.size(); ++i)
        for (std::size_t j = i; j < pieces.size(); ++j) {
            const Expr standard = normalize(conn_sum(pieces[i].expr, pieces[j].expr));
            const Expr exotic = normalize(conn_sum(twist(pieces[i].expr), pieces[j].expr));
            const bool published = i == 0 && j == 0;
            const bool overlap = (i == 1 && j == 3) || (i == 2 && j == 2);
            const auto want = overlap ? SmoothVerdict::Outcome::Unknown : SmoothVerdict::Outcome::Exotic;
            std::optional<std::pair<EtaSet, EtaSet>> sets;
            if (published) sets = std::pair{nums({0}), nums({16})};
            add("5", "-", standard, exotic, want, sets, published ? kPublished : kDerived);
        }
    return t;
}

Table thm_inv() {
    Table t{"thmInv",
            "free orientation-reversing exotic involutions on common covers",
            {"item", "k", "exotic", "standard", "cover", "group"},
            {}};
    auto add = [&](const std::string& item, const std::string& k, const Expr& exotic, const Expr& standard,
                   const Expr& want_cover, const std::string& published_form, GroupTag want_group,
                   std::string_view basis) {
        const InvolutionReport r = involution_report(exotic, standard);
        std::string note;
        for (const auto& n : r.notes) note += (note.empty() ? "" : "; ") + n;
        t.rows.push_back({{item, k, normalize(exotic).str(), normalize(standard).str(), r.cover.str(),
                           r.group.name()},
                          published_form + ", " + want_group.name(),
                          std::string(basis),
                          r.cover == normalize(want_cover) && r.group == want_group,
                          note});
    };
    const Expr s2xs2 = atom(AtomId::S2xS2);
    for (int k = 1; k <= 3; ++k) {
        const Expr x = circle_power(atom(AtomId::RP4), k);
        add("1", std::to_string(k), twist(x), x, stabilize(atom(AtomId::S4), k - 1),
            std::to_string(k - 1) + "(S2xS2)#S4", GroupTag::Kind::Z2, kPublished);
    }
    struct Family {
        const char* item;
        AtomId base;
        AtomId cover;
        GroupTag::Kind group;
    };
    const std::array<Family, 4> families = {{{"2", AtomId::S3tS1, AtomId::S3xS1, GroupTag::Kind::Z},
                                             {"3", AtomId::KbxS2, AtomId::T2xS2, GroupTag::Kind::ZsemiZ},
                                             {"3", AtomId::Xi3, AtomId::T2xS2, GroupTag::Kind::ZsemiZ},
                                             {"4", AtomId::KbxT2, AtomId::T2xT2, GroupTag::Kind::Z3semiZ}}};
    for (const auto& f : families)
        for (int k = 1; k <= 3; ++k) {
            const Expr standard = stabilize(atom(f.base), k);
            add(f.item, std::to_string(k), gluck_twist(standard), standard, stabilize(atom(f.cover), 2 * k),
                std::string(atom_name(f.cover)) + " # " + std::to_string(2 * k) + "(S2xS2)", f.group,
                kPublished);
        }

    // Item 5: the index k is recovered from the S2xS2 count of the cover.
    const Expr rp4 = atom(AtomId::RP4);
    const Expr s2gr = atom(AtomId::S2gR);
    struct Pair {
        Expr exotic;
        Expr standard;
        int count;
    };
    const std::vector<Pair> pairs = {
        {conn_sum(twist(rp4), rp4), conn_sum(rp4, rp4), 0},
        {conn_sum(twist(s2gr), s2gr), conn_sum(s2gr, s2gr), 2},
        {conn_sum({twist(s2gr), s2gr, s2xs2}), conn_sum({s2gr, s2gr, s2xs2}), 4},
        {conn_sum(twist(circle_power(rp4, 2)), rp4), conn_sum(circle_power(rp4, 2), rp4), 1},
    };
    for (const auto& p : pairs) {
        const bool indexed = p.count % 2 == 0;
        const std::string k = indexed ? std::to_string(p.count / 2 + 1) : "-";
        add("5", k, p.exotic, p.standard, stabilize(atom(AtomId::S3xS1), p.count),
            "S3xS1 # " + std::to_string(p.count) + "(S2xS2)", GroupTag::Kind::Z2FreeZ2,
            indexed ? kPublished : kDerived);
    }
    return t;
}

} // namespace

std::size_t Table::mismatches() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const TableRow& r) { return !r.ok; }));
}

std::span<const std::string_view> table_targets() { return kTargets; }

Table reproduce(std::string_view target) {
    if (target == "thm0") return thm0();
    if (target == "thmPr") return thm_pr();
    if (target == "thmM") return thm_m();
    if (target == "thmInv") return thm_inv();
    if (target == "propValues") return prop_values();
    if (target == "lemValues") return lem_values();
    if (target == "propComp") return prop_comp();
    std::string known;
    for (auto t : kTargets) known += (known.empty() ? "" : ", ") + std::string(t);
    throw LookupError("unknown table target '" + std::string(target) + "' (known: " + known + ")");
}

std::string render_table(const Table& table, Format format) {
    if (format == Format::Json) {
        Json rows = Json::array();
        for (const auto& r : table.rows) {
            Json row = Json::object();
            for (std::size_t i = 0; i < table.columns.size(); ++i) row[table.columns[i]] = r.cells.at(i);
            row["expected"] = r.expected;
            row["basis"] = r.basis;
            row["status"] = r.ok ? "ok" : "MISMATCH";
            row["note"] = r.note;
            rows.push_back(std::move(row));
        }
        Json j{{"target", table.target},
               {"title", table.title},
               {"columns", table.columns},
               {"rows", rows},
               {"mismatches", table.mismatches()}};
        return detail::dump_json(j);
    }

    std::vector<std::string> header = table.columns;
    header.insert(header.end(), {"expected", "basis", "status"});
    std::vector<std::vector<std::string>> lines;
    for (const auto& r : table.rows) {
        std::vector<std::string> line = r.cells;
        line.insert(line.end(), {r.expected, r.basis, r.ok ? "ok" : "MISMATCH"});
        lines.push_back(std::move(line));
    }
    std::vector<std::size_t> width(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) {
        width[i] = header[i].size();
        for (const auto& l : lines) width[i] = std::max(width[i], l[i].size());
    }
    std::ostringstream os;
    auto emit = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            s += cells[i];
            if (i + 1 < cells.size()) s += std::string(width[i] - cells[i].size() + 2, ' ');
        }
        os << s << "\n";
    };
    os << table.target << ": " << table.title << "\n";
    emit(header);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        emit(lines[i]);
        if (!table.rows[i].note.empty()) os << "    note: " << table.rows[i].note << "\n";
    }
    os << table.rows.size() << " rows, " << table.mismatches() << " mismatches\n";
    return os.str();
}

} // namespace pinplus
