#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>

#include "quiver/coefficients.hpp"
#include "quiver/rank_conditions.hpp"

using namespace quiver;

namespace {
const char* kPaperTriangle = "6 8 9 6\n5 6 6\n4 3\n2\n";
}

TEST_CASE("parse and validate the example triangle") {
    RankConditions r = RankConditions::parse(kPaperTriangle);
    CHECK(r.n() == 3);
    CHECK(r.valid());
    CHECK(r.rank(0, 0) == 6);
    CHECK(r.rank(1, 2) == 6);
    CHECK(r.rank(0, 3) == 2);
    CHECK(r.to_text() == kPaperTriangle);
}

TEST_CASE("rectangle array of the example") {
    RankConditions r = RankConditions::parse(kPaperTriangle);
    CHECK(r.rect(0, 1) == Rectangle{1, 3});
    CHECK(r.rect(1, 2) == Rectangle{2, 3});
    CHECK(r.rect(2, 3) == Rectangle{3, 0});
    CHECK(r.rect(0, 2) == Rectangle{1, 2});
    CHECK(r.rect(1, 3) == Rectangle{3, 3});
    CHECK(r.rect(0, 3) == Rectangle{2, 1});
    CHECK(r.codim() == 22);
}

TEST_CASE("single map codim") {
    RankConditions r = RankConditions::parse("5 4\n2\n");
    CHECK(r.codim() == (5 - 2) * (4 - 2));
    RankConditions zero = RankConditions::parse("3 4\n3\n");
    CHECK(zero.codim() == 0);
}

TEST_CASE("invalid triangles are reported with indices") {
    RankConditions r = RankConditions::parse("1 1\n2\n");
    auto v = r.validate();
    REQUIRE(v.has_value());
    CHECK(v->i == 0);
    CHECK(v->j == 1);
    CHECK_THROWS_AS(r.codim(), std::invalid_argument);

    RankConditions r2 = RankConditions::parse("2 1\n2\n");
    CHECK_FALSE(r2.valid());

    // submodularity violation: r(1,1) - r(0,1) - r(1,2) + r(0,2) = 1-1-1+0 < 0
    RankConditions r3 = RankConditions::parse("1 1 1\n1 1\n0\n");
    auto v3 = r3.validate();
    REQUIRE(v3.has_value());
    CHECK(v3->what.find("r(i+1,j-1)") != std::string::npos);
}

TEST_CASE("strict parsing") {
    CHECK_THROWS_AS(RankConditions::parse("1 2\n1\nextra\n"), std::invalid_argument);
    CHECK_THROWS_AS(RankConditions::parse("1 x\n1\n"), std::invalid_argument);
    CHECK_THROWS_AS(RankConditions::parse("1 -2\n1\n"), std::invalid_argument);
    CHECK_THROWS_AS(RankConditions::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(RankConditions::parse("1 1 1\n1\n0\n"), std::invalid_argument);
    // trailing blank lines are fine
    CHECK(RankConditions::parse("2 2\n1\n\n\n").n() == 1);
}

TEST_CASE("parser never crashes on garbage") {
    // deterministic byte soup: parse must succeed or throw invalid_argument
    std::uint64_t state = 424242;
    auto next = [&]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<unsigned>(state >> 33);
    };
    const char alphabet[] = " \t\n0123456789-x,";
    for (int t = 0; t < 3000; ++t) {
        std::string s;
        int len = static_cast<int>(next() % 40);
        for (int k = 0; k < len; ++k)
            s += alphabet[next() % (sizeof alphabet - 1)];
        try {
            (void)RankConditions::parse(s);
        } catch (const std::invalid_argument&) {
        }
    }
    CHECK(true);
}

TEST_CASE("delete top row") {
    RankConditions r = RankConditions::parse(kPaperTriangle);
    RankConditions s = r.delete_top_row();
    CHECK(s.n() == 2);
    CHECK(s.rank(0, 0) == 5);
    CHECK(s.rect(0, 1) == r.rect(0, 2));
    CHECK(s.rect(0, 2) == r.rect(0, 3));
}

TEST_CASE("dual reverses and transposes") {
    RankConditions r = RankConditions::parse("3 2\n1\n");  // rectangle 2x1
    CHECK(r.rect(0, 1) == Rectangle{2, 1});
    RankConditions d = r.dual();
    CHECK(d.rect(0, 1) == Rectangle{1, 2});
    CHECK(d.dual() == r);

    RankConditions big = RankConditions::parse(kPaperTriangle);
    CHECK(big.dual().dual() == big);
    CHECK(big.dual().valid());
    for (int j = 1; j <= 3; ++j)
        for (int i = 0; i < j; ++i) {
            Rectangle a = big.rect(i, j);
            Rectangle b = big.dual().rect(3 - j, 3 - i);
            CHECK(a.width == b.height);
            CHECK(a.height == b.width);
        }
}

TEST_CASE("shifted leaves rectangles unchanged") {
    RankConditions r = RankConditions::parse(kPaperTriangle);
    RankConditions s = r.shifted(3);
    for (int j = 1; j <= 3; ++j)
        for (int i = 0; i < j; ++i) CHECK(r.rect(i, j) == s.rect(i, j));
    CHECK(s.valid());
}

TEST_CASE("inessential detection") {
    // 1 -> 2 -> 1 complex with middle rank forcing all rectangles around E_1
    // to be empty: r_1 = r_2 = 1, r_02 = 1 (every rectangle is empty here)
    RankConditions r = RankConditions::parse("1 2 1\n1 1\n1\n");
    auto idx = r.inessential_indices();
    CHECK(idx == std::vector<int>{0, 1, 2});
    RankConditions shorter = r.omit(1);
    CHECK(shorter.n() == 1);
    CHECK(shorter.rank(0, 0) == 1);
    CHECK(shorter.rank(0, 1) == 1);

    // the same complex with r_02 = 0 keeps the middle box; the middle bundle
    // is still removable and the box becomes the condition on the composite
    RankConditions complex = RankConditions::parse("1 2 1\n1 1\n0\n");
    CHECK(complex.rect(0, 2) == Rectangle{1, 1});
    CHECK(complex.inessential_indices() == std::vector<int>{1});
    RankConditions composite = complex.omit(1);
    CHECK(composite.rect(0, 1) == Rectangle{1, 1});

    // a one-map sequence never has removable bundles
    RankConditions porteous = RankConditions::parse("2 2\n1\n");
    CHECK(porteous.inessential_indices().empty());
    CHECK_THROWS_AS(porteous.omit(0), std::invalid_argument);
}
