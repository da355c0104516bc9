#include "pinplus/classify.hpp"
#include "pinplus/errors.hpp"
#include "pinplus/oracle.hpp"

#include <doctest.h>

#include <algorithm>

using namespace pinplus;
using Smooth = SmoothVerdict::Outcome;

namespace {
bool has_rule(const std::vector<std::string>& chain, const std::string& id) {
    return std::find(chain.begin(), chain.end(), id) != chain.end();
}
} // namespace

TEST_SUITE("classify") {
    TEST_CASE("rule tables") {
        CHECK(homeo_rules().size() == 7);
        CHECK(diffeo_rules().size() == 4);
    }

    TEST_CASE("homeomorphism verdicts") {
        const Expr rp4 = atom("RP4");
        const HomeoVerdict t = homeo(twist(rp4), rp4);
        CHECK(t.yes());
        CHECK(has_rule(t.chain(), "R1"));
        CHECK(replay(t, twist(rp4), rp4));

        const Expr std1 = conn_sum(atom("S3tS1"), atom("S2xS2"));
        const HomeoVerdict g = homeo(gluck_twist(std1), std1);
        CHECK(g.yes());
        CHECK(has_rule(g.chain(), "R2"));
        CHECK(replay(g, gluck_twist(std1), std1));

        const HomeoVerdict m = homeo(rp4, atom("S3tS1"));
        CHECK_FALSE(m.yes());
        CHECK(m.note.find("pi1") != std::string::npos);

        CHECK(homeo(atom("Q"), rp4).yes());
        CHECK(has_rule(homeo(atom("Q"), rp4).chain(), "R4"));
        CHECK(homeo(atom("A"), std1).yes());
    }

    TEST_CASE("rewrites below the root record congruence") {
        const Expr x = conn_sum(twist(atom("S2gR")), atom("S2gR"));
        const HomeoVerdict v = homeo(x, conn_sum(atom("S2gR"), atom("S2gR")));
        CHECK(v.yes());
        CHECK(has_rule(v.chain(), "R5"));
        CHECK(has_rule(v.chain(), "R1"));
        CHECK(replay(v, x, conn_sum(atom("S2gR"), atom("S2gR"))));
    }

    TEST_CASE("a tampered trace does not replay") {
        const Expr rp4 = atom("RP4");
        HomeoVerdict v = homeo(twist(rp4), rp4);
        REQUIRE_FALSE(v.steps.empty());
        v.steps.front().after = "Q";
        CHECK_FALSE(replay(v, twist(rp4), rp4));
    }

    TEST_CASE("verdicts are symmetric and replayable on small expressions") {
        const auto all = enumerate_expressions(2);
        for (std::size_t i = 0; i < all.size(); i += 7)
            for (std::size_t j = 0; j < all.size(); j += 11) {
                const HomeoVerdict a = homeo(all[i], all[j]);
                const HomeoVerdict b = homeo(all[j], all[i]);
                CHECK(a.outcome == b.outcome);
                if (a.yes()) {
                    CHECK(replay(a, all[i], all[j]));
                    CHECK(all[i].topology().chi == all[j].topology().chi);
                    CHECK(all[i].topology().pi1 == all[j].topology().pi1);
                }
                CHECK(smooth_compare(all[i], all[j]).outcome == smooth_compare(all[j], all[i]).outcome);
            }
    }

    TEST_CASE("smooth verdicts") {
        const Expr s2gr = atom("S2gR");
        const SmoothVerdict e = smooth_compare(twist(s2gr), s2gr);
        CHECK(e.outcome == Smooth::Exotic);
        CHECK(e.eta[0]->nums() == std::vector<int>{16});
        CHECK(e.eta[1]->nums() == std::vector<int>{0});

        const SmoothVerdict k = smooth_compare(circle_sum(atom("KbxS2"), atom("A")),
                                               conn_sum(atom("KbxS2"), atom("S2xS2")));
        CHECK(k.outcome == Smooth::Exotic);
        CHECK(k.eta[0]->nums() == std::vector<int>{16});
        CHECK(k.eta[1]->nums() == std::vector<int>{0});

        const SmoothVerdict d = smooth_compare(atom("RP4"), atom("RP4"));
        CHECK(d.outcome == Smooth::Diffeomorphic);
        CHECK(d.chain() == std::vector<std::string>{"D0"});

        // Homeomorphic, overlapping eta sets: no decision either way.
        const Expr rp4 = atom("RP4");
        const SmoothVerdict u = smooth_compare(conn_sum(twist(circle_power(rp4, 2)), circle_power(rp4, 2)),
                                               conn_sum(circle_power(rp4, 2), circle_power(rp4, 2)));
        CHECK(u.outcome == Smooth::Unknown);

        CHECK(smooth_compare(rp4, atom("S3tS1")).outcome == Smooth::Unknown);
    }

    TEST_CASE("CP2 stabilization collapses the exotic pieces") {
        const Expr cp2 = atom("CP2");
        CHECK(cp2_stabilize(conn_sum(twist(atom("S2gR")), cp2)).result ==
              normalize(conn_sum(atom("S2gR"), cp2)));
        CHECK(cp2_stabilize(conn_sum(atom("Q"), cp2)).result == normalize(conn_sum(atom("RP4"), cp2)));
        CHECK_THROWS_AS(cp2_stabilize(atom("RP4")), PreconditionError);

        const SmoothVerdict v = smooth_compare(conn_sum(atom("Q"), cp2), conn_sum(atom("RP4"), cp2));
        CHECK(v.outcome == Smooth::Diffeomorphic);
        CHECK(has_rule(v.chain(), "D3"));
    }

    TEST_CASE("limits report") {
        const Expr rp4 = atom("RP4");
        const std::vector<Expr> two = {rp4, atom("Q")};
        const LimitsReport a = limits_report(two);
        CHECK(a.classes.size() == 2);
        REQUIRE(a.shift);
        CHECK(*a.shift == kUnitShift);

        const std::vector<Expr> one = {rp4, twist(twist(rp4))};
        CHECK(limits_report(one).classes.size() == 1);

        const std::vector<Expr> s = {atom("S2gR"), twist(atom("S2gR"))};
        const LimitsReport b = limits_report(s);
        REQUIRE(b.classes.size() == 2);
        CHECK(b.classes[0].set.nums() == std::vector<int>{0});
        CHECK(b.classes[1].set.nums() == std::vector<int>{16});

        const std::vector<Expr> bad = {rp4, atom("S3tS1")};
        CHECK_THROWS_AS(limits_report(bad), PreconditionError);
    }
}
