#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quiver/littlewood_richardson.hpp"
#include "quiver/tableau.hpp"
#include "quiver/verify.hpp"

using namespace quiver;

TEST_CASE("tableau validation") {
    CHECK_NOTHROW(Tableau({{1, 1, 2}, {2, 3}}));
    CHECK_THROWS_AS(Tableau({{2, 1}}), std::invalid_argument);       // row decreasing
    CHECK_THROWS_AS(Tableau({{1}, {1}}), std::invalid_argument);     // column weak
    CHECK_THROWS_AS(Tableau({{1}, {1, 2}}), std::invalid_argument);  // shape
    CHECK(Tableau().empty());
    CHECK(Tableau({{1, 2}, {2}}).shape() == Partition({2, 1}));
    CHECK(Tableau({{1, 2}, {2}}).box_count() == 3);
}

TEST_CASE("reading word") {
    Tableau t({{1, 2, 2}, {2, 3}});
    CHECK(t.reading_word() == std::vector<int>{2, 3, 1, 2, 2});
}

TEST_CASE("parse and print") {
    Tableau t({{1, 1}, {2}});
    CHECK(t.to_string() == "1 1\n2\n");
    CHECK(Tableau::parse("1 1\n2\n") == t);
    CHECK(Tableau::parse("-\n") == Tableau());
    CHECK(Tableau().to_string() == "-\n");
    CHECK_THROWS_AS(Tableau::parse("2 1\n"), std::invalid_argument);
}

TEST_CASE("products: unit and basic examples") {
    Tableau one(std::vector<std::vector<int>>{{1}});
    Tableau two(std::vector<std::vector<int>>{{2}});
    CHECK(product(one, Tableau()) == one);
    CHECK(product(Tableau(), one) == one);
    CHECK(jdt_product(one, Tableau()) == one);
    CHECK(jdt_product(Tableau(), one) == one);
    CHECK(product(one, one) == Tableau({{1, 1}}));
    CHECK(product(two, one) == Tableau({{1}, {2}}));
    CHECK(jdt_product(one, one) == Tableau({{1, 1}}));
    CHECK(jdt_product(two, one) == Tableau({{1}, {2}}));
}

TEST_CASE("jdt product equals row insertion exhaustively") {
    auto small = all_tableaux(4, 3);
    for (const Tableau& p : small)
        for (const Tableau& q : small) {
            CAPTURE(p.to_string());
            CAPTURE(q.to_string());
            CHECK(product(p, q) == jdt_product(p, q));
        }
}

TEST_CASE("plactic associativity exhaustively") {
    auto tiny = all_tableaux(3, 3);
    for (const Tableau& a : tiny)
        for (const Tableau& b : tiny)
            for (const Tableau& c : tiny)
                CHECK(product(product(a, b), c) == product(a, product(b, c)));
}

TEST_CASE("product preserves content") {
    auto small = all_tableaux(4, 3);
    for (const Tableau& p : small)
        for (const Tableau& q : small) {
            auto c = p.content();
            for (const auto& [v, k] : q.content()) c[v] += k;
            CHECK(product(p, q).content() == c);
        }
}

TEST_CASE("jdt equals row insertion on larger random pairs") {
    quiver::SplitMix64 rng(31);
    auto random_tableau = [&](int max_boxes, int max_entry) {
        Tableau t;
        int boxes = rng.uniform(0, max_boxes);
        for (int k = 0; k < boxes; ++k) {
            std::vector<std::vector<int>> rows = t.rows();
            quiver::detail::row_insert(rows, rng.uniform(1, max_entry));
            t = Tableau(std::move(rows));
        }
        return t;
    };
    for (int trial = 0; trial < 300; ++trial) {
        Tableau p = random_tableau(8, 4);
        Tableau q = random_tableau(8, 4);
        CHECK(product(p, q) == jdt_product(p, q));
    }
}

TEST_CASE("ssyt enumeration") {
    // content {1,1,2}: tableaux 1 1 2 / (1 1 over 2)
    std::map<int, int> content{{1, 2}, {2, 1}};
    auto tabs = ssyt_with_content(content);
    CHECK(tabs.size() == 2);
    CHECK(ssyt_of_shape(Partition({2, 1}), 3).size() == 8);
    CHECK(ssyt_of_shape(Partition{}, 3).size() == 1);
    CHECK(superstandard(Partition({3, 1})) == Tableau({{1, 1, 1}, {2}}));
}
