#include "pinplus/cover.hpp"
#include "pinplus/errors.hpp"
#include "pinplus/oracle.hpp"

#include <doctest.h>

using namespace pinplus;
using K = GroupTag::Kind;

TEST_SUITE("cover") {
    TEST_CASE("rule table") { CHECK(cover_rules().size() == 9); }

    TEST_CASE("reference covers") {
        CHECK(orientation_cover(circle_sum(atom("Q"), atom("RP4"))).cover == atom("S2xS2"));
        CHECK(orientation_cover(atom("A")).cover ==
              normalize(conn_sum({atom("S3xS1"), atom("S2xS2"), atom("S2xS2")})));
        CHECK(orientation_cover(twist(atom("KbxT2"))).cover == atom("T2xT2"));
        CHECK(orientation_cover(atom("RP4")).cover == atom("S4"));
        CHECK(orientation_cover(atom("S3tS1")).cover == atom("S3xS1"));
        CHECK_THROWS_AS(orientation_cover(atom("S2xS2")), UnknownCoverError);
    }

    TEST_CASE("every cover doubles chi and is orientable") {
        std::size_t covered = 0;
        for (const Expr& e : enumerate_expressions(2)) {
            if (e.topology().orientable) continue;
            try {
                const CoverResult c = orientation_cover(e);
                ++covered;
                CHECK(c.cover.topology().chi == 2 * e.topology().chi);
                CHECK(c.cover.topology().orientable);
                CHECK(c.cover.topology().sigma == 0);
                CHECK_FALSE(c.steps.empty());
            } catch (const UnknownCoverError&) {
            }
        }
        CHECK(covered > 50);
    }

    TEST_CASE("involution reports") {
        const Expr rp4 = atom("RP4");
        const InvolutionReport a = involution_report(twist(rp4), rp4);
        CHECK(a.cover == atom("S4"));
        CHECK(a.group == GroupTag(K::Z2));

        const InvolutionReport b =
            involution_report(circle_sum(atom("KbxS2"), atom("A")), conn_sum(atom("KbxS2"), atom("S2xS2")));
        CHECK(b.cover == normalize(stabilize(atom("T2xS2"), 2)));
        CHECK(b.group == GroupTag(K::ZsemiZ));

        const InvolutionReport c =
            involution_report(circle_sum(atom("S3tS1"), atom("A")), conn_sum(atom("S3tS1"), atom("S2xS2")));
        CHECK(c.cover == normalize(stabilize(atom("S3xS1"), 2)));
        CHECK(c.group == GroupTag(K::Z));

        const InvolutionReport d = involution_report(conn_sum(twist(rp4), circle_power(rp4, 2)),
                                                     conn_sum(rp4, circle_power(rp4, 2)));
        CHECK(d.group == GroupTag(K::Z2FreeZ2));
        REQUIRE(d.notes.size() == 1);
        CHECK(d.notes[0].find("odd") != std::string::npos);

        CHECK_THROWS_AS(involution_report(rp4, rp4), NoVerdictError);
    }
}
