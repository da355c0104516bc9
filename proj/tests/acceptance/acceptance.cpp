// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include "pinplus/classify.hpp"
#include "pinplus/cover.hpp"
#include "pinplus/errors.hpp"
#include "pinplus/invariants.hpp"
#include "pinplus/oracle.hpp"
#include "pinplus/parser.hpp"
#include "pinplus/tables.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace pinplus;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && pass) {
            pass = false;
            detail = what;
        }
    }
};

EtaSet nums(const std::vector<int>& v) {
    std::vector<Mod32> out;
    for (int k : v) out.emplace_back(k);
    return EtaSet(std::move(out));
}

// Every pi1 = Z2 expression met by criteria 1-7, for the limits guard.
std::vector<Expr> g_z2;

const EtaSet& seen(const Expr& x, const EtaSet& set) {
    if (x.topology().pi1 == GroupTag(GroupTag::Kind::Z2)) g_z2.push_back(x);
    return set;
}

EtaSet eta(const Expr& x) { return seen(x, eta_set(x)); }

const Expr& piece(int i) {
    static const std::vector<Expr> pieces = {atom(AtomId::S2gR), circle_power(atom(AtomId::RP4), 1),
                                             circle_power(atom(AtomId::RP4), 2),
                                             circle_power(atom(AtomId::RP4), 3)};
    return pieces.at(static_cast<std::size_t>(i));
}

Outcome generator_values() {
    Outcome o;
    o.require(eta(atom(AtomId::RP4)) == nums({2, 30}), "eta_set(RP4) != {2, 30}");
    o.require(eta(atom(AtomId::Q)) == nums({14, 18}), "eta_set(Q) != {14, 18}");
    o.detail = o.pass ? "RP4 {2, 30} = {1/8, -1/8}; Q {14, 18} = {7/8, -7/8}" : o.detail;
    return o;
}

Outcome stabilized_values() {
    Outcome o;
    int rows = 0;
    for (int k = 1; k <= 4; ++k) {
        auto check = [&](const Expr& base, const EtaSet& want, const std::string& item) {
            const Expr x = stabilize(base, k - 1);
            ++rows;
            o.require(eta(x) == want, "item " + item + ", k=" + std::to_string(k) + ": " + eta_set(x).str());
        };
        check(atom(AtomId::S2gR), nums({0}), "1");
        for (int r = 1; r <= 3; ++r)
            check(circle_power(atom(AtomId::RP4), r), nums({2 * r, 32 - 2 * r}), "2 r=" + std::to_string(r));
        check(atom(AtomId::S3tS1), nums({0}), "3");
        check(atom(AtomId::A), nums({16}), "4");
    }
    if (o.pass) o.detail = std::to_string(rows) + " sets exact";
    return o;
}

Outcome z_family_values() {
    Outcome o;
    const std::vector<std::pair<AtomId, long long>> rows = {
        {AtomId::S3tS1, 2}, {AtomId::KbxS2, 4}, {AtomId::Xi3, 4}, {AtomId::KbxT2, 16}};
    for (const auto& [id, count] : rows) {
        const Expr x = atom(id);
        o.require(structure_count(x) == count, std::string(atom_name(id)) + " structure count");
        o.require(eta_profile(x).size() == static_cast<std::size_t>(count), std::string(atom_name(id)) + " profile size");
        o.require(eta(x) == nums({0}), std::string(atom_name(id)) + " eta set not {0}");
    }
    if (o.pass) o.detail = "counts 2, 4, 4, 16; all sets {0}";
    return o;
}

Outcome twisted_pairs() {
    Outcome o;
    const Expr cp2 = atom(AtomId::CP2);
    int pairs = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j <= 3; ++j) {
            const Expr standard = stabilize(piece(i), j);
            const Expr exotic = stabilize(twist(piece(i)), j);
            eta(standard);
            eta(exotic);
            const SmoothVerdict v = smooth_compare(exotic, standard);
            const std::string tag = standard.str();
            o.require(v.outcome == SmoothVerdict::Outcome::Exotic, tag + ": " + outcome_name(v.outcome));
            o.require(replay(v.homeo, exotic, standard), tag + ": homeomorphism trace does not replay");
            const Expr a = cp2_stabilize(conn_sum(exotic, cp2)).result;
            const Expr b = cp2_stabilize(conn_sum(standard, cp2)).result;
            o.require(a == b, tag + ": # CP2 forms differ (" + a.str() + " vs " + b.str() + ")");
            o.require(smooth_compare(conn_sum(exotic, cp2), conn_sum(standard, cp2)).outcome ==
                          SmoothVerdict::Outcome::Diffeomorphic,
                      tag + ": # CP2 not Diffeomorphic");
            ++pairs;
        }
    if (o.pass) o.detail = std::to_string(pairs) + " pairs Exotic, all collapse after # CP2";
    return o;
}

Outcome gluck_shift() {
    Outcome o;
    int atoms = 0;
    for (const auto& rec : atom_table()) {
        const Expr x = atom(rec.id);
        if (x.topology().orientable || !pin_plus(x)) continue;
        const Expr y = gluck_twist(conn_sum(x, atom(AtomId::S2xS2)));
        o.require(eta(y) == eta(x).shifted(kUnitShift), std::string(rec.name) + ": " + eta_set(y).str());
        ++atoms;
    }
    o.require(atoms == 8, "expected 8 non-orientable Pin+ atoms, found " + std::to_string(atoms));
    if (o.pass) o.detail = std::to_string(atoms) + " atoms shifted by 1";
    return o;
}

Outcome gluck_exotics() {
    Outcome o;
    int verdicts = 0;
    for (AtomId id : {AtomId::S3tS1, AtomId::KbxS2, AtomId::Xi3, AtomId::KbxT2})
        for (int k = 1; k <= 3; ++k) {
            const Expr standard = stabilize(atom(id), k);
            const Expr exotic = gluck_twist(standard);
            eta(standard);
            eta(exotic);
            const SmoothVerdict v = smooth_compare(exotic, standard);
            o.require(v.outcome == SmoothVerdict::Outcome::Exotic, standard.str() + ": " + outcome_name(v.outcome));
            ++verdicts;
        }
    const Expr s2gr = atom(AtomId::S2gR);
    const Expr exotic = conn_sum(twist(s2gr), s2gr);
    const Expr standard = conn_sum(s2gr, s2gr);
    const SmoothVerdict v = smooth_compare(exotic, standard);
    o.require(v.outcome == SmoothVerdict::Outcome::Exotic, "item 5 pairing not Exotic");
    o.require(v.eta[0] && *v.eta[0] == nums({16}) && eta(exotic) == nums({16}), "item 5 exotic set");
    o.require(v.eta[1] && *v.eta[1] == nums({0}) && eta(standard) == nums({0}), "item 5 standard set");
    if (o.pass) o.detail = std::to_string(verdicts) + " Gluck pairs Exotic; item 5 {16} vs {0}";
    return o;
}

Outcome oracle_equivalence(const std::vector<Expr>& all) {
    Outcome o;
    std::size_t checked = 0;
    std::size_t refused = 0;
    for (const Expr& x : all) {
        if (!pin_plus(x)) {
            bool fast = false;
            bool slow = false;
            try {
                eta_set(x);
            } catch (const NoPinStructureError&) {
                fast = true;
            }
            try {
                brute_eta_set(x);
            } catch (const NoPinStructureError&) {
                slow = true;
            }
            o.require(fast && slow, x.str() + ": non-Pin+ input not refused by both");
            ++refused;
            continue;
        }
        const OracleResult r = brute_eta(x);
        o.require(seen(x, eta_set(x)) == r.set, x.str() + ": profile " + eta_set(x).str() + ", oracle " + r.set.str());
        o.require(r.accepted == static_cast<std::uint64_t>(structure_count(x)), x.str() + ": structure count");
        ++checked;
    }
    if (o.pass)
        o.detail = std::to_string(checked) + " expressions agree, " + std::to_string(refused) + " non-Pin+ refused";
    return o;
}

Outcome cover_suite(const std::vector<Expr>& all) {
    Outcome o;
    std::set<std::string> rules;
    std::size_t steps = 0;
    auto check_steps = [&](const CoverResult& c) {
        for (const auto& s : c.steps) {
            const Expr in = parse(s.input);
            const Expr out = parse(s.output);
            o.require(out.topology().chi == 2 * in.topology().chi, s.rule + ": chi not doubled on " + s.input);
            o.require(out.topology().orientable, s.rule + ": non-orientable cover of " + s.input);
            rules.insert(s.rule);
            ++steps;
        }
    };
    for (const Expr& x : all) {
        if (x.topology().orientable) continue;
        try {
            check_steps(orientation_cover(x));
        } catch (const UnknownCoverError&) {
        }
    }
    o.require(rules.size() == cover_rules().size(),
              "only " + std::to_string(rules.size()) + " of " + std::to_string(cover_rules().size()) +
                  " cover rules exercised");

    const Table t = reproduce("thmInv");
    o.require(t.mismatches() == 0, "thmInv table has mismatches");
    bool odd_note = false;
    for (const auto& r : t.rows) {
        if (r.cells[0] != "5") continue;
        o.require(!r.note.empty(), "item 5 row without a count note");
        odd_note = odd_note || r.note.find("odd") != std::string::npos;
    }
    o.require(odd_note, "no discrepancy note for an odd item 5 count");
    if (o.pass)
        o.detail = std::to_string(steps) + " rule applications over " + std::to_string(rules.size()) + " rules; " +
                   std::to_string(t.rows.size()) + " involution rows match";
    return o;
}

Outcome limits_guard() {
    Outcome o;
    std::map<std::string, std::vector<Expr>> families;
    std::set<std::string> distinct;
    for (const Expr& x : g_z2) {
        if (!pin_plus(x) || !distinct.insert(x.str()).second) continue;
        const EtaSet s = eta_set(x);
        bool shape = s.closed_under_negation() && s.size() <= 2;
        o.require(shape, x.str() + ": eta set " + s.str() + " is not {v, 32-v}");
        families[homeo(x, x).canonical[0]].push_back(x);
    }
    std::size_t max_classes = 0;
    for (const auto& [key, members] : families) {
        try {
            const LimitsReport r = limits_report(members);
            max_classes = std::max(max_classes, r.classes.size());
        } catch (const std::exception& e) {
            o.require(false, "family " + key + ": " + e.what());
        }
    }
    o.require(max_classes <= 2, "a family has " + std::to_string(max_classes) + " classes");
    if (o.pass)
        o.detail = std::to_string(distinct.size()) + " Z2 expressions in " + std::to_string(families.size()) +
                   " families, at most " + std::to_string(max_classes) + " classes";
    return o;
}

std::vector<int> label_bits(std::uint64_t label, int width) {
    std::vector<int> bits;
    for (int i = 0; i < width; ++i) bits.push_back(static_cast<int>((label >> i) & 1U));
    return bits;
}

Outcome bordism_arithmetic(const std::vector<Expr>& all) {
    Outcome o;
    o.require(eta_set(circle_power(atom(AtomId::RP4), 16)) == nums({0}), "16-fold circle sum of RP4 is not {0}");
    std::size_t sums = 0;
    std::size_t labels = 0;
    for (const Expr& x : all) {
        if (!pin_plus(x)) continue;
        const PinProfile px = eta_profile(x);
        // bordism_class agrees with the profile on the extreme labels.
        for (std::uint64_t l : {std::uint64_t{0}, std::uint64_t{px.size() - 1}}) {
            const auto bits = label_bits(l, px.width());
            o.require(bordism_class(x, bits) == px.value(l).bordism_class(), x.str() + ": bordism_class");
        }
        if (x.is_conn_sum()) {
            std::vector<PinProfile> parts;
            for (const Expr& s : x.children()) parts.push_back(eta_profile(s));
            for (std::uint64_t l = 0; l < px.size(); ++l) {
                std::uint64_t rest = l;
                int sum = 0;
                for (const auto& p : parts) {
                    sum += p.value(rest & ((std::uint64_t{1} << p.width()) - 1)).bordism_class();
                    rest >>= p.width();
                }
                o.require(px.value(l).bordism_class() == sum % 16, x.str() + ": class not additive");
                ++labels;
            }
            ++sums;
        } else if (x.is_circle_sum() && !x.is_twist()) {
            // Classes of a circle sum are the sums over compatible pairs.
            const PinProfile a = eta_profile(x.child(0));
            const PinProfile b = eta_profile(x.child(1));
            std::set<int> want;
            for (const auto& ea : a.entries())
                for (const auto& eb : b.entries())
                    if (ea.restr == eb.restr) want.insert((ea.value.bordism_class() + eb.value.bordism_class()) % 16);
            std::set<int> got;
            for (auto v : px.values()) got.insert(v.bordism_class());
            o.require(got == want, x.str() + ": circle-sum classes not additive");
            ++sums;
        }
    }
    if (o.pass)
        o.detail = "16*[RP4] = 0; " + std::to_string(sums) + " sums additive (" + std::to_string(labels) +
                   " conn-sum labels)";
    return o;
}

} // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<Expr> all = enumerate_expressions(3);

    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "generator values", generator_values},
        {2, "stabilized family values", stabilized_values},
        {3, "Z-family structure counts", z_family_values},
        {4, "twisted pieces exotic, CP2 collapse", twisted_pairs},
        {5, "Gluck twist shifts eta by 1", gluck_shift},
        {6, "Gluck and connected-sum exotics", gluck_exotics},
        {7, "oracle equivalence, height <= 3", [&] { return oracle_equivalence(all); }},
        {8, "cover suite", [&] { return cover_suite(all); }},
        {9, "two-class limit on Z2 families", limits_guard},
        {10, "bordism arithmetic", [&] { return bordism_arithmetic(all); }},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        if (!o.pass) ++failures;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << " (" << c.name << "): " << o.detail
                  << std::endl;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << secs;
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << " in "
              << t.str() << " s" << std::endl;
    return failures == 0 ? 0 : 1;
}
