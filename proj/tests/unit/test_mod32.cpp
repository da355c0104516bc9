#include "pinplus/mod32.hpp"

#include <doctest.h>

using pinplus::Mod32;

TEST_SUITE("mod32") {
    TEST_CASE("reduction and arithmetic wrap modulo 32") {
        CHECK(Mod32(32).num() == 0);
        CHECK(Mod32(-2).num() == 30);
        CHECK((Mod32(30) + Mod32(4)).num() == 2);
        CHECK((Mod32(2) - Mod32(4)).num() == 30);
        CHECK((-Mod32(16)).num() == 16);
        CHECK((-Mod32(0)).num() == 0);
    }

    TEST_CASE("addition table forms a group") {
        for (int a = 0; a < 32; ++a) {
            CHECK(Mod32(a) + -Mod32(a) == Mod32(0));
            for (int b = 0; b < 32; ++b) {
                CHECK(Mod32(a) + Mod32(b) == Mod32(b) + Mod32(a));
                CHECK((Mod32(a) + Mod32(b)).num() == (a + b) % 32);
            }
        }
    }

    TEST_CASE("bordism class halves even numerators") {
        CHECK(Mod32(2).bordism_class() == 1);
        CHECK(Mod32(30).bordism_class() == 15);
        CHECK(Mod32(16).bordism_class() == 8);
        CHECK(Mod32(18).bordism_class() == 9);
        for (int k = 0; k < 32; k += 2)
            for (int j = 0; j < 32; j += 2)
                CHECK((Mod32(k) + Mod32(j)).bordism_class() ==
                      (Mod32(k).bordism_class() + Mod32(j).bordism_class()) % 16);
    }

    TEST_CASE("fractions use the signed representative") {
        CHECK(Mod32(0).fraction() == "0");
        CHECK(Mod32(2).fraction() == "1/8");
        CHECK(Mod32(30).fraction() == "-1/8");
        CHECK(Mod32(14).fraction() == "7/8");
        CHECK(Mod32(18).fraction() == "-7/8");
        CHECK(Mod32(16).fraction() == "1");
        CHECK(Mod32(8).fraction() == "1/2");
        CHECK(Mod32(1).fraction() == "1/16");
        CHECK(pinplus::kUnitShift.num() == 16);
        CHECK(pinplus::kOneEighth.num() == 2);
    }
}
