#include "pinplus/cover.hpp"

#include "pinplus/classify.hpp"
#include "pinplus/errors.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace pinplus {

namespace {

constexpr std::array<CoverRule, 9> kRules{{
    {"C1", "RP4 | Q", "S4", "universal covers of RP4 and of the exotic RP4 are standard"},
    {"C2", "Z2 circle sum of n copies of RP4 / Q", "(n-1)*(S2xS2) # S4",
     "covers of circle sums of RP4 and Q are standard connected sums of S2xS2"},
    {"C3", "A", "S3xS1 # 2*(S2xS2)", "double of the twisted D3-bundle after blowing down RP2"},
    {"C4", "X # S2xS2", "cover(X) # 2*(S2xS2)", "each S2xS2 summand lifts to two copies"},
    {"C5", "KbxS2 | Xi3 | KbxT2", "T2xS2 | T2xS2 | T2xT2", "orientation covers of the Klein-bottle bundles"},
    {"C6", "X #s1 A", "cover(X) # 2*(S2xS2)", "cut-and-paste on the covers has the standard structure"},
    {"C7", "twist(X)", "cover(X)", "the mapping-torus circle sum lifts to a standard cover"},
    {"C8", "X # Y, pi1 = Z2 each, simply connected covers", "S3xS1 # n*(S2xS2), n = chi(X)+chi(Y)-2",
     "kernel of Z2*Z2 -> Z2 is Z; n fixed by chi doubling"},
    {"C9", "S3tS1", "S3xS1", "orientation cover of the twisted S3-bundle over S1"},
}};

Expr s2xs2_sum(Expr head, int copies) {
    std::vector<Expr> summands{std::move(head)};
    for (int i = 0; i < copies; ++i) summands.push_back(atom(AtomId::S2xS2));
    return normalize(conn_sum(std::move(summands)));
}

Expr atoms_sum(const std::vector<AtomId>& ids) {
    std::vector<Expr> summands;
    for (auto id : ids) summands.push_back(atom(id));
    return normalize(conn_sum(std::move(summands)));
}

bool is_z2_circle_tree(const Expr& e) {
    switch (e.kind()) {
    case Expr::Kind::Atom:
        return e.is_atom(AtomId::RP4) || e.is_atom(AtomId::Q) || e.is_atom(AtomId::S2gR);
    case Expr::Kind::Bar:
        return is_z2_circle_tree(e.child(0));
    case Expr::Kind::CircleSum:
        if (e.is_twist()) return is_z2_circle_tree(e.child(0));
        return is_z2_circle_tree(e.child(0)) && is_z2_circle_tree(e.child(1));
    default:
        return false;
    }
}

Expr record(std::vector<CoverStep>& steps, std::string_view rule, const Expr& in, Expr out) {
    const auto& t = out.topology();
    if (t.chi != 2 * in.topology().chi)
        throw std::logic_error("cover rule " + std::string(rule) + " breaks chi doubling on " + in.str());
    if (!t.orientable) throw std::logic_error("cover rule " + std::string(rule) + " gave a non-orientable result");
    if (t.sigma != 0) throw std::logic_error("cover rule " + std::string(rule) + " gave non-zero signature");
    steps.push_back({std::string(rule), in.str(), out.str()});
    return out;
}

Expr cover_of(const Expr& e, std::vector<CoverStep>& steps) {
    if (e.topology().orientable) throw UnknownCoverError("'" + e.str() + "' is orientable");

    if (e.is_bar()) return cover_of(e.child(0), steps);
    if (e.is_twist()) return record(steps, "C7", e, cover_of(e.child(0), steps));

    if (e.is_atom(AtomId::RP4) || e.is_atom(AtomId::Q)) return record(steps, "C1", e, atom(AtomId::S4));
    if (is_z2_circle_tree(e))
        return record(steps, "C2", e, s2xs2_sum(atom(AtomId::S4), e.topology().chi - 1));

    if (e.is_atom()) {
        const auto id = e.atom_id();
        if (id == AtomId::A) return record(steps, "C3", e, atoms_sum(atom_record(id).cover));
        if (id == AtomId::KbxS2 || id == AtomId::Xi3 || id == AtomId::KbxT2)
            return record(steps, "C5", e, atoms_sum(atom_record(id).cover));
        if (id == AtomId::S3tS1) return record(steps, "C9", e, atoms_sum(atom_record(id).cover));
    }

    if (e.is_circle_sum() && e.child(1).is_atom(AtomId::A))
        return record(steps, "C6", e, s2xs2_sum(cover_of(e.child(0), steps), 2));

    if (e.is_conn_sum()) {
        std::vector<Expr> others;
        int spheres = 0;
        for (const auto& s : e.children()) {
            if (s.is_atom(AtomId::S2xS2))
                ++spheres;
            else if (s.topology().orientable)
                throw UnknownCoverError("no cover rule for the orientable summand '" + s.str() + "'");
            else
                others.push_back(s);
        }
        if (spheres > 0) {
            const Expr rest = conn_sum(others);
            return record(steps, "C4", e, s2xs2_sum(cover_of(rest, steps), 2 * spheres));
        }
        if (others.size() == 2) {
            bool ok = true;
            for (const auto& s : others) {
                std::vector<CoverStep> scratch;
                ok = ok && s.topology().pi1.kind() == GroupTag::Kind::Z2 &&
                     cover_of(s, scratch).topology().pi1.is_trivial();
            }
            if (ok) {
                const int n = others[0].topology().chi + others[1].topology().chi - 2;
                return record(steps, "C8", e, s2xs2_sum(atom(AtomId::S3xS1), n));
            }
        }
    }
    throw UnknownCoverError("no cover rule matches '" + e.str() + "'");
}

} // namespace

std::span<const CoverRule> cover_rules() { return kRules; }

CoverResult orientation_cover(const Expr& x) {
    const Expr n = normalize(x);
    std::vector<CoverStep> steps;
    Expr c = normalize(cover_of(n, steps));
    const GroupTag expected = orientation_kernel(n.topology().pi1);
    if (!expected.is_unknown() && c.topology().pi1 != expected)
        throw std::logic_error("cover of '" + n.str() + "' has pi1 " + c.topology().pi1.name() +
                               ", expected " + expected.name());
    return CoverResult{std::move(c), std::move(steps)};
}

InvolutionReport involution_report(const Expr& exotic, const Expr& standard) {
    const SmoothVerdict v = smooth_compare(exotic, standard);
    if (v.outcome != SmoothVerdict::Outcome::Exotic)
        throw NoVerdictError("'" + exotic.str() + "' vs '" + standard.str() + "' is not an exotic pair (" +
                             outcome_name(v.outcome) + ")");
    CoverResult ce = [&] {
        try {
            return orientation_cover(exotic);
        } catch (const UnknownCoverError& err) {
            throw NoVerdictError(std::string("exotic cover unknown: ") + err.what());
        }
    }();
    CoverResult cs = [&] {
        try {
            return orientation_cover(standard);
        } catch (const UnknownCoverError& err) {
            throw NoVerdictError(std::string("standard cover unknown: ") + err.what());
        }
    }();
    if (ce.cover != cs.cover)
        throw NoVerdictError("covers differ: " + ce.cover.str() + " vs " + cs.cover.str());

    InvolutionReport r{ce, cs, ce.cover, exotic.topology().pi1, {}};
    if (r.group.kind() == GroupTag::Kind::Z2FreeZ2) {
        const int n = r.cover.topology().chi / 2;
        if (n % 2 == 0)
            r.notes.push_back("S2xS2 count n = " + std::to_string(n) + " derived from chi; " +
                              "indexed form S3xS1 # 2(k-1)(S2xS2) has k = " + std::to_string(n / 2 + 1));
        else
            r.notes.push_back("S2xS2 count n = " + std::to_string(n) +
                              " derived from chi is odd; no index k of the form 2(k-1) matches");
    }
    return r;
}

} // namespace pinplus
