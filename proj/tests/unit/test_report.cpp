#include "pinplus/parser.hpp"
#include "pinplus/report.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace pinplus;

TEST_SUITE("report") {
    TEST_CASE("reference documents") {
        CHECK(report(atom("Q"), Format::Json).find("\"eta_set\": [14, 18]") != std::string::npos);
        CHECK(report(atom("A"), Format::Text).find("bordism_classes: {8, 8}") != std::string::npos);
        CHECK(report(atom("CP2"), Format::Json).find("\"pin_plus\": false") != std::string::npos);
    }

    TEST_CASE("json key set is fixed") {
        const std::vector<std::string> keys = {"expr",         "chi",     "sigma",          "orientable",
                                               "pi1",          "h1dim",   "w2zero",         "pin_plus",
                                               "structure_count", "profile_size", "profile", "eta_set",
                                               "eta_fractions", "bordism_classes", "oracle"};
        for (const char* text : {"RP4", "CP2", "S2xS2", "KbxT2 # RP4", "twist(S2gR)"}) {
            const auto j = nlohmann::ordered_json::parse(report(parse(text), Format::Json));
            std::vector<std::string> got;
            for (const auto& [k, v] : j.items()) got.push_back(k);
            CHECK(got == keys);
        }
    }

    TEST_CASE("oracle cross-check") {
        const auto j = nlohmann::json::parse(report(parse("csum(3, RP4)"), Format::Json, {true, 1000}));
        CHECK(j["oracle"]["agrees"] == true);
        CHECK(j["oracle"]["accepted"] == 2);
        CHECK_THROWS(report(parse("KbxT2 # KbxT2"), Format::Json, {true, 10}));
    }

    TEST_CASE("output is deterministic") {
        const Expr x = parse("twist(S2gR) # S2gR");
        CHECK(report(x, Format::Text) == report(x, Format::Text));
        CHECK(compare_report(x, parse("2*(S2gR)"), Format::Json) ==
              compare_report(x, parse("2*(S2gR)"), Format::Json));
    }

    TEST_CASE("compare and cover documents") {
        const auto c = nlohmann::json::parse(
            compare_report(parse("twist(S2gR)"), parse("S2gR"), Format::Json));
        CHECK(c["smooth"]["outcome"] == "Exotic");
        CHECK(c["homeo"]["outcome"] == "Yes");
        const auto v = nlohmann::json::parse(cover_report(parse("A"), Format::Json));
        CHECK(v["cover_chi"] == 4);
        CHECK(v["deck_group"] == "Z");
    }

    TEST_CASE("format names") {
        CHECK(format_from_name("json") == Format::Json);
        CHECK(format_from_name("text") == Format::Text);
        CHECK_FALSE(format_from_name("yaml"));
    }
}
