#include "pinplus/oracle.hpp"

#include "pinplus/errors.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <utility>

namespace pinplus {

namespace {

struct Occurrence {
    const AtomRecord* atom;
    int sign;
    int offset;
};

struct Labelling {
    std::vector<Occurrence> occurrences;
    std::vector<std::pair<int, int>> equal_bits;
    int bits = 0;
    int shift = 0;
};

// Returns the global coordinate of the expression's designated loop.
std::optional<int> collect(const Expr& e, int sign, Labelling& out) {
    switch (e.kind()) {
    case Expr::Kind::Atom: {
        const auto& rec = atom_record(e.atom_id());
        const int offset = out.bits;
        out.occurrences.push_back({&rec, sign, offset});
        out.bits += rec.h1dim;
        if (rec.loop_bit) return offset + *rec.loop_bit;
        return std::nullopt;
    }
    case Expr::Kind::Bar:
        return collect(e.child(0), -sign, out);
    case Expr::Kind::CircleSum: {
        if (e.is_twist()) {
            out.shift += sign * kUnitShift.num();
            return collect(e.child(0), sign, out);
        }
        auto left = collect(e.child(0), sign, out);
        auto right = collect(e.child(1), sign, out);
        if (!left || !right) throw std::logic_error("circle sum operand without a loop");
        out.equal_bits.emplace_back(*left, *right);
        return left;
    }
    case Expr::Kind::ConnSum: {
        std::optional<int> loop;
        for (const auto& c : e.children()) {
            auto l = collect(c, sign, out);
            if (!loop) loop = l;
        }
        return loop;
    }
    case Expr::Kind::TwistToken:
        break;
    }
    throw std::logic_error("bare twist token");
}

LawCheck make_check(std::string name, bool passed, std::string detail = {}) {
    return LawCheck{std::move(name), passed, std::move(detail)};
}

} // namespace

OracleResult brute_eta(const Expr& x, std::uint64_t bound) {
    if (!pin_plus(x)) throw NoPinStructureError("no Pin+ structure on '" + x.str() + "'");
    Labelling lab;
    collect(x, 1, lab);
    if (lab.bits >= 63 || (std::uint64_t{1} << lab.bits) > bound)
        throw EnumerationBoundError("enumerating 2^" + std::to_string(lab.bits) +
                                    " labellings exceeds the bound " + std::to_string(bound));

    OracleResult res;
    res.enumerated = std::uint64_t{1} << lab.bits;
    std::set<int> seen;
    for (std::uint64_t mask = 0; mask < res.enumerated; ++mask) {
        bool ok = std::all_of(lab.equal_bits.begin(), lab.equal_bits.end(), [&](auto pr) {
            return ((mask >> pr.first) & 1U) == ((mask >> pr.second) & 1U);
        });
        if (!ok) continue;
        ++res.accepted;
        long long total = lab.shift;
        for (const auto& occ : lab.occurrences) {
            const std::uint64_t width_mask = (std::uint64_t{1} << occ.atom->h1dim) - 1;
            const auto label = (mask >> occ.offset) & width_mask;
            total += occ.sign * occ.atom->profile.at(label).num();
        }
        seen.insert(Mod32(total).num());
    }
    std::vector<Mod32> values;
    for (int v : seen) values.emplace_back(v);
    res.set = EtaSet(std::move(values));
    return res;
}

EtaSet brute_eta_set(const Expr& x, std::uint64_t bound) { return brute_eta(x, bound).set; }

bool LawReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const LawCheck& c) { return c.passed; });
}

LawReport check_laws() {
    LawReport report;

    bool assoc = true, comm = true, ident = true, inverse = true;
    for (int a = 0; a < 32; ++a) {
        const Mod32 x(a);
        ident = ident && (x + Mod32(0) == x);
        inverse = inverse && (x + (-x) == Mod32(0)) && (-x == Mod32(32 - a));
        for (int b = 0; b < 32; ++b) {
            const Mod32 y(b);
            comm = comm && (x + y == y + x) && ((x + y).num() == (a + b) % 32);
            for (int c = 0; c < 32; ++c) assoc = assoc && ((x + y) + Mod32(c) == x + (y + Mod32(c)));
        }
    }
    report.checks.push_back(make_check("mod32 associativity", assoc));
    report.checks.push_back(make_check("mod32 commutativity and addition table", comm));
    report.checks.push_back(make_check("mod32 identity", ident));
    report.checks.push_back(make_check("mod32 negation table", inverse));

    const Expr rp4 = atom(AtomId::RP4);
    const Expr sixteen = circle_power(rp4, 16);
    const EtaSet s16 = eta_set(sixteen);
    report.checks.push_back(make_check("16-fold circle sum of RP4 has eta set {0}",
                                       s16 == EtaSet({Mod32(0)}), s16.str()));
    Mod32 acc;
    for (int i = 0; i < 16; ++i) acc += eta_profile(rp4).value(0);
    report.checks.push_back(make_check("16 * [RP4] = 0 in Z/16", acc.bordism_class() == 0 &&
                                                                    eta_profile(rp4).value(0).bordism_class() == 1));

    std::vector<Expr> pin_atoms;
    for (const auto& r : atom_table())
        if (r.w2zero) pin_atoms.push_back(atom(r.id));

    for (const auto& a : pin_atoms) {
        const EtaSet s = eta_set(a);
        const EtaSet sb = eta_set(bar(a));
        const bool oracle_ok = brute_eta_set(a) == s;
        report.checks.push_back(make_check("bar law on " + a.str(), sb == s.negated() && oracle_ok,
                                           s.str() + " -> " + sb.str()));
    }

    bool sum_ok = true, anti_ok = true;
    std::string first_failure;
    for (const auto& a : pin_atoms) {
        for (const auto& b : pin_atoms) {
            const Expr ab = conn_sum(a, b);
            const EtaSet expect = sumset(brute_eta_set(a), brute_eta_set(b));
            if (eta_set(ab) != expect) {
                sum_ok = false;
                if (first_failure.empty()) first_failure = ab.str();
            }
            const EtaSet anti = sumset(brute_eta_set(a).negated(), brute_eta_set(b).negated());
            if (eta_set(bar(ab)) != anti || eta_set(bar(ab)) != eta_set(ab).negated()) {
                anti_ok = false;
                if (first_failure.empty()) first_failure = "bar(" + ab.str() + ")";
            }
        }
    }
    report.checks.push_back(make_check("connected-sum sumset law on all atom pairs", sum_ok, first_failure));
    report.checks.push_back(make_check("bar antihomomorphism on all atom pairs", anti_ok, first_failure));
    return report;
}

std::vector<Expr> enumerate_expressions(int max_depth) {
    std::vector<Expr> all;
    std::set<std::string> seen;
    auto keep = [&](const Expr& e, std::vector<Expr>& level) {
        if (seen.insert(e.str()).second) level.push_back(e);
    };
    std::vector<Expr> level;
    if (max_depth >= 1)
        for (AtomId id : generator_atoms()) keep(atom(id), level);
    std::size_t prev_begin = 0;
    all = level;
    for (int d = 2; d <= max_depth; ++d) {
        const std::size_t prev_end = all.size();
        std::vector<Expr> next;
        auto attempt = [&](auto&& build) {
            try {
                keep(build(), next);
            } catch (const PreconditionError&) {
            }
        };
        for (std::size_t i = prev_begin; i < prev_end; ++i) {
            attempt([&] { return bar(all[i]); });
            attempt([&] { return twist(all[i]); });
        }
        // Binary nodes need at least one operand from the previous level.
        for (std::size_t i = 0; i < prev_end; ++i)
            for (std::size_t j = 0; j < prev_end; ++j) {
                if (i < prev_begin && j < prev_begin) continue;
                attempt([&] { return conn_sum(all[i], all[j]); });
                attempt([&] { return circle_sum(all[i], all[j]); });
            }
        prev_begin = prev_end;
        all.insert(all.end(), next.begin(), next.end());
    }
    return all;
}

} // namespace pinplus
