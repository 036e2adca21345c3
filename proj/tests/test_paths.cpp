#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quiver/paths.hpp"
#include "quiver/random.hpp"
#include "quiver/verify.hpp"

using namespace quiver;

TEST_CASE("path validation") {
    CHECK(Path::lowest(2).segments() == 4);
    CHECK(Path::top(2).segments() == 2);
    CHECK_THROWS_AS(Path(2, {{0, 0}, {1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Path(1, {{0, 0}, {1, 0}, {1, 1}}), std::invalid_argument);
    // a mixed path: down, horizontal, up
    Path mixed(2, {{0, 0}, {0, 1}, {1, 2}, {2, 2}});
    CHECK(mixed.segments() == 3);
}

TEST_CASE("lowest path gives the empty symbol") {
    for (const char* text : {"2 2\n1\n", "1 2 1\n1 1\n0\n", "6 8 9 6\n5 6 6\n4 3\n2\n"}) {
        RankConditions r = RankConditions::parse(text);
        CHECK(path_phi(r, Path::lowest(r.n())) == QuiverPolynomial::unit(2 * r.n()));
    }
}

TEST_CASE("one-map top path collapses to the rectangle symbol") {
    RankConditions r = RankConditions::parse("5 4\n2\n");
    QuiverPolynomial phi = path_phi(r, Path::top(1));
    CHECK(phi.arity() == 1);
    CHECK(phi.term_count() == 1);
    CHECK(phi.coefficient({Partition({3, 3})}) == Integer(1));
    CHECK(phi == coefficients(r));
}

TEST_CASE("top path reproduces the coefficient polynomial") {
    SplitMix64 rng(11);
    for (int t = 0; t < 12; ++t) {
        RankConditions r = random_rank_conditions(rng, 3, 3);
        CHECK(path_phi(r, Path::top(r.n())) == coefficients(r));
    }
}

TEST_CASE("raising order does not change the result") {
    SplitMix64 rng(13);
    for (int t = 0; t < 8; ++t) {
        RankConditions r = random_rank_conditions(rng, 3, 3);
        const int n = r.n();
        CHECK(path_phi(r, Path::top(n), false) == path_phi(r, Path::top(n), true));
        if (n >= 2) {
            Path mixed(n, [&] {
                std::vector<std::pair<int, int>> pts{{0, 0}, {0, 1}};
                for (int i = 1; i <= n - 1; ++i) pts.push_back({i, i + 1});
                pts.push_back({n, n});
                return pts;
            }());
            CHECK(path_phi(r, mixed, false) == path_phi(r, mixed, true));
        }
    }
}

TEST_CASE("intermediate path slot counts") {
    RankConditions r = RankConditions::parse("1 2 1\n1 1\n0\n");
    // down, horizontal, up: three segments
    Path mixed(2, {{0, 0}, {0, 1}, {1, 2}, {2, 2}});
    QuiverPolynomial phi = path_phi(r, mixed);
    CHECK(phi.arity() == 3);
}
