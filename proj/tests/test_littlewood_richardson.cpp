#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quiver/littlewood_richardson.hpp"
#include "quiver/schur_eval.hpp"

using namespace quiver;

TEST_CASE("basic LR values") {
    CHECK(lr_coefficient(Partition({2, 1}), Partition({1}), Partition({1, 1})) == 1);
    CHECK(lr_coefficient(Partition({2, 2}), Partition({2}), Partition({1, 1})) == 0);
    CHECK(lr_coefficient(Partition({2, 2}), Partition({2}), Partition({2})) == 1);
    CHECK(lr_coefficient(Partition({2, 1}), Partition({1}), Partition({1})) == 0);
    CHECK(lr_coefficient(Partition{}, Partition{}, Partition{}) == 1);
    CHECK(lr_coefficient(Partition({1}), Partition({2}), Partition({1})) == 0);
    // the classical multiplicity-2 example: c^{(4,3,2)}_{(3,2,1),(2,1)} = 2
    CHECK(lr_coefficient(Partition({4, 3, 2}), Partition({3, 2, 1}),
                         Partition({2, 1})) == 2);
}

TEST_CASE("split expansion examples") {
    CHECK(split_expansion(Partition{}) ==
          std::map<std::pair<Partition, Partition>, long long>{
              {{Partition{}, Partition{}}, 1}});

    auto one = split_expansion(Partition({1}));
    CHECK(one.size() == 2);
    CHECK(one.at({Partition({1}), Partition{}}) == 1);
    CHECK(one.at({Partition{}, Partition({1})}) == 1);

    auto hook = split_expansion(Partition({2, 1}));
    CHECK(hook.size() == 6);
    for (const auto& [st, c] : hook) CHECK(c == 1);
    CHECK(hook.count({Partition({2}), Partition({1})}) == 1);
    CHECK(hook.count({Partition({1, 1}), Partition({1})}) == 1);
    CHECK(hook.count({Partition({1}), Partition({2})}) == 1);
    CHECK(hook.count({Partition({1}), Partition({1, 1})}) == 1);
}

TEST_CASE("split expansion weights add up") {
    for (int w = 0; w <= 5; ++w)
        for (const Partition& mu : partitions_of(w))
            for (const auto& [st, c] : split_expansion(mu)) {
                CHECK(st.first.weight() + st.second.weight() == w);
                CHECK(c > 0);
            }
}

TEST_CASE("symmetry in sigma and tau") {
    for (int w = 0; w <= 6; ++w)
        for (const Partition& lam : partitions_of(w)) {
            auto splits = split_expansion(lam);
            for (const auto& [st, c] : splits) {
                auto it = splits.find({st.second, st.first});
                REQUIRE(it != splits.end());
                CHECK(it->second == c);
            }
        }
}

TEST_CASE("rectangle divisions have unit coefficient") {
    for (int w = 1; w <= 3; ++w)
        for (int h = 1; h <= 3; ++h) {
            Rectangle box{w, h};
            auto divs = rectangle_divisions(box);
            auto splits = split_expansion(box.to_partition());
            CHECK(divs.size() == splits.size());
            for (const auto& [sigma, tau] : divs) {
                CHECK(lr_coefficient(box.to_partition(), sigma, tau) == 1);
                CHECK(tau == rotated_complement(sigma, box));
            }
        }
    CHECK(rectangle_divisions(Rectangle{0, 3}).size() == 1);
}

TEST_CASE("product expansion inverts the coproduct pairing") {
    // <s_sigma s_tau, s_lambda> = c^lambda_{sigma,tau}
    auto prod = lr_product_expansion(Partition({2}), Partition({1, 1}));
    CHECK(prod.at(Partition({3, 1})) == 1);
    CHECK(prod.at(Partition({2, 1, 1})) == 1);
    CHECK(prod.size() == 2);
    for (const auto& [lam, c] : prod)
        CHECK(lr_coefficient(lam, Partition({2}), Partition({1, 1})) == c);
}

TEST_CASE("numeric cross-check against Schur evaluation") {
    // s_sigma(x) * s_tau(x) = sum_lambda c^lambda_{sigma,tau} s_lambda(x)
    std::vector<int> roots{2, -1, 3};
    for (const Partition& sigma : partitions_of(2))
        for (const Partition& tau : partitions_of(3)) {
            Integer lhs = eval_schur_difference(sigma, roots, {}) *
                          eval_schur_difference(tau, roots, {});
            Integer rhs = 0;
            for (const auto& [lam, c] : lr_product_expansion(sigma, tau))
                rhs += Integer(c) * eval_schur_difference(lam, roots, {});
            CHECK(lhs == rhs);
        }
}
