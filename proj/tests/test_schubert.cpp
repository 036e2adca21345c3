#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quiver/schubert.hpp"
#include "quiver/verify.hpp"

using namespace quiver;

namespace {

MultiPolynomial X(int nx, int i) { return MultiPolynomial::x(nx, 0, i); }

}  // namespace

TEST_CASE("permutation basics") {
    Permutation w = Permutation::parse("3142");
    CHECK(w(1) == 3);
    CHECK(w(4) == 2);
    CHECK(w.inverse() == Permutation::parse("2413"));
    CHECK(Permutation::parse("3,1,4,2") == w);
    CHECK_THROWS_AS(Permutation::parse("3141"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("30"), std::invalid_argument);
    CHECK(Permutation::longest(3) == Permutation::parse("321"));
    CHECK(Permutation::all(4).size() == 24);
    CHECK((Permutation::parse("231") * Permutation::parse("231")) ==
          Permutation::parse("312"));
}

TEST_CASE("permutation rank conditions") {
    Permutation w = Permutation::parse("3142");
    CHECK(permutation_rank(w, 1, 1) == 0);
    CHECK(permutation_rank(w, 2, 3) == 2);
    CHECK(permutation_rank(w, 3, 2) == 1);

    RankConditions r = rank_conditions_from(w, 3);
    CHECK(r.n() == 5);
    CHECK(r.valid());
    // ranks 1,2,3,3,2,1 on the diagonal
    for (int i = 0; i <= 5; ++i)
        CHECK(r.rank(i, i) == std::vector<int>({1, 2, 3, 3, 2, 1})[i]);

    // identity: r_w(p, q) = min(p, q), zero expected codimension
    Permutation id = Permutation::identity(4);
    RankConditions rid = rank_conditions_from(id, 3);
    CHECK(rid.codim() == 0);
    CHECK(coefficients(rid) == QuiverPolynomial::unit(5));
}

TEST_CASE("only empty and 1x1 rectangles appear") {
    for (const Permutation& w : Permutation::all(4)) {
        RankConditions r = rank_conditions_from(w, 3);
        for (int j = 1; j <= r.n(); ++j)
            for (int i = 0; i < j; ++i) {
                Rectangle rc = r.rect(i, j);
                CHECK((rc.empty() || (rc.width == 1 && rc.height == 1)));
            }
    }
}

TEST_CASE("dprime criterion matches rectangle emptiness for S_3 and S_4") {
    SuiteResult s = suite_dprime(3);
    CHECK(s.fail == 0);
}

TEST_CASE("divided difference oracle on S_2 and S_3") {
    // m = 1
    CHECK(schubert_oracle(Permutation::parse("12"), 1, false) ==
          MultiPolynomial::constant(1, 0, 1));
    CHECK(schubert_oracle(Permutation::parse("21"), 1, false) == X(1, 1));
    MultiPolynomial x1 = MultiPolynomial::x(1, 1, 1), y1 = MultiPolynomial::y(1, 1, 1);
    CHECK(schubert_oracle(Permutation::parse("21"), 1, true) == x1 - y1);

    // m = 2: the classical S_3 table
    auto S = [&](const char* p) { return schubert_oracle(Permutation::parse(p), 2, false); };
    CHECK(S("123") == MultiPolynomial::constant(2, 0, 1));
    CHECK(S("213") == X(2, 1));
    CHECK(S("132") == X(2, 1) + X(2, 2));
    CHECK(S("231") == X(2, 1) * X(2, 2));
    CHECK(S("312") == X(2, 1) * X(2, 1));
    CHECK(S("321") == X(2, 1) * X(2, 1) * X(2, 2));
}

TEST_CASE("single Schubert polynomial of 132 via specialization") {
    Permutation w = Permutation::parse("132");
    QuiverPolynomial p = coefficients(rank_conditions_from(w, 2));
    MultiPolynomial s = specialize_single(p, 2);
    CHECK(s == X(2, 1) + X(2, 2));
    CHECK(s == schubert_oracle(w, 2, false));
}

TEST_CASE("worked example 3142: single") {
    Permutation w = Permutation::parse("3142");
    QuiverPolynomial p = coefficients(rank_conditions_from(w, 3));
    MultiPolynomial got = specialize_single(p, 3);
    // s_21(x) - (x2 + x3) s_11(x)
    MultiPolynomial expect = schur_xy(3, 0, Partition({2, 1})) -
                             (X(3, 2) + X(3, 3)) * schur_xy(3, 0, Partition({1, 1}));
    CHECK(got == expect);
    CHECK(got == schubert_oracle(w, 3, false));
}

TEST_CASE("worked example 3142: double") {
    Permutation w = Permutation::parse("3142");
    QuiverPolynomial p = coefficients(rank_conditions_from(w, 3));
    MultiPolynomial got = specialize_double(p, 3);
    const int nx = 3, ny = 3;
    auto x = [&](int i) { return MultiPolynomial::x(nx, ny, i); };
    auto y = [&](int i) { return MultiPolynomial::y(nx, ny, i); };
    MultiPolynomial expect =
        schur_xy(nx, ny, Partition({2, 1})) +
        y(3) * schur_xy(nx, ny, Partition({2})) +
        (y(3) - x(2) - x(3)) * schur_xy(nx, ny, Partition({1, 1})) +
        y(3) * (y(3) - x(2) - x(3)) * schur_xy(nx, ny, Partition({1}));
    CHECK(got == expect);
    CHECK(got == schubert_oracle(w, 3, true));
}

TEST_CASE("specializations match the oracle over all of S_3") {
    for (const Permutation& w : Permutation::all(3)) {
        QuiverPolynomial p = coefficients(rank_conditions_from(w, 2));
        CHECK(specialize_single(p, 2) == schubert_oracle(w, 2, false));
        CHECK(specialize_double(p, 2) == schubert_oracle(w, 2, true));
    }
}

TEST_CASE("oracle does not depend on the reduced word") {
    SuiteResult s = suite_schubert_oracle_words(3);
    CHECK(s.fail == 0);
}

TEST_CASE("S_5 single specialization matches the oracle exhaustively") {
    CoefficientCache cache;
    for (const Permutation& w : Permutation::all(5)) {
        QuiverPolynomial p = coefficients(rank_conditions_from(w, 4), &cache);
        CHECK(specialize_single(p, 4) == schubert_oracle(w, 4, false));
    }
}

TEST_CASE("S_5 double specialization matches the oracle on a sample") {
    for (const char* text : {"12345", "54321", "21534", "35142", "45123", "13254"}) {
        Permutation w = Permutation::parse(text);
        QuiverPolynomial p = coefficients(rank_conditions_from(w, 4));
        CHECK(specialize_double(p, 4) == schubert_oracle(w, 4, true));
    }
}

TEST_CASE("double specialization restricted to y = 0 gives the single one") {
    for (const Permutation& w : Permutation::all(4)) {
        QuiverPolynomial p = coefficients(rank_conditions_from(w, 3));
        MultiPolynomial dbl = specialize_double(p, 3);
        CHECK(dbl.y_to_zero().restricted(3, 0) == specialize_single(p, 3));
    }
}
