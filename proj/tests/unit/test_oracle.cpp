#include "pinplus/errors.hpp"
#include "pinplus/oracle.hpp"

#include <doctest.h>

using namespace pinplus;

TEST_SUITE("oracle") {
    TEST_CASE("reference enumerations") {
        const Expr rp4 = atom("RP4");
        CHECK(brute_eta_set(circle_sum(rp4, circle_sum(rp4, rp4))).nums() == std::vector<int>{6, 26});
        CHECK(brute_eta_set(conn_sum(atom("S2gR"), rp4)).nums() == std::vector<int>{2, 30});
        CHECK(brute_eta_set(atom("S4")).nums() == std::vector<int>{0});
        CHECK(brute_eta_set(circle_power(rp4, 16)).nums() == std::vector<int>{0});
        CHECK_THROWS_AS(brute_eta_set(atom("CP2")), NoPinStructureError);
    }

    TEST_CASE("labelling counts") {
        const OracleResult r = brute_eta(circle_power(atom("RP4"), 3));
        CHECK(r.enumerated == 8);
        CHECK(r.accepted == 2);
        CHECK_THROWS_AS(brute_eta(conn_sum({atom("KbxT2"), atom("KbxT2")}), 100), EnumerationBoundError);
    }

    TEST_CASE("exhaustive agreement up to height 2") {
        const auto all = enumerate_expressions(2);
        CHECK(all.size() > 200);
        for (const Expr& e : all) {
            if (!pin_plus(e)) {
                CHECK_THROWS_AS(eta_set(e), NoPinStructureError);
                CHECK_THROWS_AS(brute_eta_set(e), NoPinStructureError);
                continue;
            }
            const OracleResult r = brute_eta(e);
            CHECK_MESSAGE(r.set == eta_set(e), e.str());
            CHECK(r.accepted == static_cast<std::uint64_t>(structure_count(e)));
        }
    }

    TEST_CASE("laws") {
        const LawReport report = check_laws();
        CHECK(report.checks.size() >= 5);
        for (const auto& c : report.checks) CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);
        CHECK(report.all_passed());
    }
}
