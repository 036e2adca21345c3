#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quiver/coefficients.hpp"
#include "quiver/random.hpp"
#include "quiver/schubert.hpp"
#include "quiver/verify.hpp"

using namespace quiver;

namespace {

LambdaTuple tup(std::initializer_list<Partition> parts) { return LambdaTuple(parts); }

}  // namespace

TEST_CASE("zero and one map") {
    CHECK(coefficients(RankConditions::parse("4\n")) == QuiverPolynomial::unit(0));

    RankConditions porteous = RankConditions::parse("5 4\n2\n");
    QuiverPolynomial p = coefficients(porteous);
    CHECK(p.term_count() == 1);
    CHECK(p.coefficient({Partition({3, 3})}) == Integer(1));  // (e-r)^(f-r) = 3^2

    RankConditions full = RankConditions::parse("3 4\n3\n");
    CHECK(coefficients(full) == QuiverPolynomial::unit(1));
}

TEST_CASE("the complex 1 -> 2 -> 1") {
    RankConditions r = RankConditions::parse("1 2 1\n1 1\n0\n");
    QuiverPolynomial p = coefficients(r);
    CHECK(p.term_count() == 2);
    CHECK(p.coefficient(tup({Partition({1}), Partition{}})) == Integer(1));
    CHECK(p.coefficient(tup({Partition{}, Partition({1})})) == Integer(1));
    CHECK(coefficients_two_row(r) == p);
}

TEST_CASE("worked permutation example w = 3142") {
    Permutation w = Permutation::parse("3142");
    RankConditions r = rank_conditions_from(w, 3);
    CHECK(r.codim() == 3);
    QuiverPolynomial p = coefficients(r);

    QuiverPolynomial expect(5);
    Partition e, p1({1}), p2({2}), p11({1, 1}), p21({2, 1});
    expect.add_term(tup({e, p2, p1, e, e}), 1);
    expect.add_term(tup({e, p1, p11, e, e}), 1);
    expect.add_term(tup({e, p1, p2, e, e}), 1);
    expect.add_term(tup({e, p1, p1, p1, e}), 1);
    expect.add_term(tup({e, e, p21, e, e}), 1);
    expect.add_term(tup({e, e, p11, p1, e}), 1);
    expect.add_term(tup({e, p1, p1, e, p1}), 1);
    expect.add_term(tup({e, e, p11, e, p1}), 1);
    CHECK(p == expect);
}

TEST_CASE("two-row closed form equals the algorithm and is multiplicity-free") {
    // enumerate small varieties of complexes: r_{ij} = 0 for j - i >= 2
    for (int e0 = 1; e0 <= 2; ++e0)
        for (int e1 = 1; e1 <= 2; ++e1)
            for (int e2 = 1; e2 <= 2; ++e2)
                for (int r1 = 0; r1 <= std::min(e0, e1); ++r1)
                    for (int r2 = 0; r2 <= std::min(e1, e2); ++r2) {
                        if (r1 + r2 > e1) continue;
                        std::vector<std::vector<int>> rows{
                            {e0, e1, e2}, {r1, r2}, {0}};
                        RankConditions r = RankConditions::from_rows(rows);
                        REQUIRE(r.valid());
                        QuiverPolynomial a = coefficients(r);
                        QuiverPolynomial b = coefficients_two_row(r);
                        CHECK(a == b);
                        for (const auto& [lam, c] : b.terms())
                            CHECK(c == Integer(1));
                    }
}

TEST_CASE("two-row values for the 2-2-2 complex") {
    RankConditions r = RankConditions::parse("2 2 2\n1 1\n0\n");
    QuiverPolynomial p = coefficients_two_row(r);
    CHECK(p.term_count() == 2);
    CHECK(p.coefficient(tup({Partition({2}), Partition({1})})) == Integer(1));
    CHECK(p.coefficient(tup({Partition({1}), Partition({1, 1})})) == Integer(1));
    CHECK(p == coefficients(r));
}

TEST_CASE("two-row hypothesis is enforced") {
    RankConditions deep = RankConditions::parse("6 8 9 6\n5 6 6\n4 3\n2\n");
    CHECK_THROWS_AS(coefficients_two_row(deep), std::invalid_argument);
}

TEST_CASE("homogeneity on the paper triangle") {
    RankConditions r = RankConditions::parse("6 8 9 6\n5 6 6\n4 3\n2\n");
    QuiverPolynomial p = coefficients(r);
    CHECK_FALSE(p.is_zero());
    for (const auto& [lam, c] : p.terms()) {
        int total = 0;
        for (const Partition& part : lam) total += part.weight();
        CHECK(total == 22);
        CHECK(c.sign() > 0);
    }
}

TEST_CASE("difference dependence") {
    RankConditions r = RankConditions::parse("1 2 1\n1 1\n0\n");
    CHECK(coefficients(r.shifted(1)) == coefficients(r));
    CHECK(coefficients(r.shifted(5)) == coefficients(r));
}

TEST_CASE("duality identity on random instances") {
    SuiteResult s = suite_duality(VerifyConfig::kDefaultSeed, 25, 3, 3);
    CHECK(s.fail == 0);
    CHECK(s.pass == 25);
}

TEST_CASE("dual tuple transport") {
    RankConditions r = RankConditions::parse("3 2\n1\n");
    QuiverPolynomial p = coefficients(r);             // S((2))
    QuiverPolynomial q = coefficients(r.dual());      // S((1,1))
    CHECK(q.coefficient({Partition({1, 1})}) == Integer(1));
    CHECK(dual_transport(p) == q);
}

TEST_CASE("omission identity") {
    RankConditions r = RankConditions::parse("1 2 1\n1 1\n0\n");
    CHECK(omit_and_expand(r, 1) == coefficients(r));

    // endpoint omission on the permutation instance: G_1 and F_2
    Permutation w = Permutation::parse("3142");
    RankConditions rw = rank_conditions_from(w, 3);
    auto iness = rw.inessential_indices();
    CHECK(std::find(iness.begin(), iness.end(), 0) != iness.end());  // G_1
    CHECK(std::find(iness.begin(), iness.end(), 4) != iness.end());  // F_2
    CHECK(omit_and_expand(rw, 0) == coefficients(rw));
    CHECK(omit_and_expand(rw, 4) == coefficients(rw));
}

TEST_CASE("memoized and plain runs agree") {
    CoefficientCache cache;
    SplitMix64 rng(7);
    for (int t = 0; t < 10; ++t) {
        RankConditions r = random_rank_conditions(rng, 3, 3);
        CHECK(coefficients(r, &cache) == coefficients(r));
    }
}

TEST_CASE("LR embedding: the generalized coefficients contain the classical ones") {
    // array with two vertical lines of height f, two horizontal lines of
    // width e, one dot, and the full e x f rectangle at the bottom
    auto embed = [](int e, int f) {
        std::vector<std::vector<int>> rows{
            {e, e + f, e + f, f}, {e, e + f, f}, {e, f}, {0}};
        return RankConditions::from_rows(rows);
    };
    for (int e = 1; e <= 2; ++e)
        for (int f = 1; f <= 2; ++f) {
            RankConditions r = embed(e, f);
            REQUIRE(r.valid());
            CHECK(r.rect(0, 1) == Rectangle{0, f});
            CHECK(r.rect(1, 2) == Rectangle{0, 0});
            CHECK(r.rect(2, 3) == Rectangle{e, 0});
            CHECK(r.rect(0, 2) == Rectangle{0, f});
            CHECK(r.rect(1, 3) == Rectangle{e, 0});
            CHECK(r.rect(0, 3) == Rectangle{e, f});
            QuiverPolynomial p = coefficients(r);
            Rectangle box{e, f};
            for (const Partition& gamma : partitions_in_box(e, f)) {
                Partition tau = rotated_complement(gamma, box);
                for (int a = 0; a <= gamma.weight(); ++a)
                    for (const Partition& alpha : partitions_of(a))
                        for (const Partition& beta :
                             partitions_of(gamma.weight() - a)) {
                            CHECK(p.coefficient(tup({alpha, beta, tau})) ==
                                  Integer(lr_coefficient(gamma, alpha, beta)));
                        }
            }
        }
}
