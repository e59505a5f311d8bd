#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "corona/sequences.hpp"

using namespace corona;
using namespace corona::sequences;
using matchings::GraphSpec;
using matchings::Matching;
using matchings::Variant;

TEST_CASE("binomial coefficients") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(7, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(10, 5) == 252);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(4, -1) == 0);
}

TEST_CASE("recurrence rows agree with exhaustive matching counts") {
    std::vector<std::vector<long long>> a_rows = {
        {1},
        {1, 1},
        {1, 3, 1},
        {1, 6, 6, 1},
        {1, 10, 21, 10, 1},
        {1, 15, 55, 55, 15, 1},
        {1, 21, 120, 215, 120, 21, 1},
    };
    for (int p = 0; p <= 6; ++p)
        for (int m = 0; m <= p; ++m) CHECK(a_count(p, m) == a_rows[p][m]);
    CHECK(a_count(5, 2) == 55);
    CHECK(a_count(6, 3) == 215);
    CHECK(c_count(2, 1) == 4);
    CHECK(c_count(3, 1) == 9);
    CHECK(c_count(3, 2) == 9);
    CHECK(c_count(4, 2) == 42);

    for (int p = 0; p <= 7; ++p)
        for (int m = 0; m <= p; ++m) {
            CHECK(a_count(p, m) ==
                  matchings::count_matchings(GraphSpec{Variant::Plain, p}, m));
            CHECK(c_count(p, m) ==
                  matchings::count_matchings(GraphSpec{Variant::Double, p}, m));
        }
    CHECK(a_count(3, 5) == 0);
    CHECK_THROWS_AS(a_count(-1, 0), std::invalid_argument);
}

TEST_CASE("minus-invariant enumeration matches the brute filter") {
    for (auto [variant, p] :
         {std::pair{Variant::Signed, 2}, {Variant::Signed, 4}, {Variant::Signed0, 3},
          {Variant::Signed0, 5}}) {
        GraphSpec spec{variant, p};
        for (int k = 0; k <= p; ++k) {
            std::set<std::vector<matchings::Edge>> brute;
            for (const auto& s : matchings::enumerate_matchings(spec, k))
                if (minus_matching(s) == s) brute.insert(s.edges);
            std::set<std::vector<matchings::Edge>> block;
            for (const auto& s : minus_invariant_matchings(spec, k)) {
                CHECK(minus_matching(s) == s);
                CHECK(s.size() == k);
                CHECK(block.insert(s.edges).second);  // no duplicates
            }
            CHECK(block == brute);
        }
    }
    CHECK_THROWS_AS(minus_invariant_matchings(GraphSpec{Variant::Plain, 3}, 1),
                    std::invalid_argument);
}

TEST_CASE("invariant-count rows match frozen values") {
    std::vector<BigInt> row0 = {1, 2, 3, 4};
    for (int m = 0; m <= 3; ++m) CHECK(b_enumerate(m, 0) == row0[m]);
    std::vector<BigInt> row1 = {1, 7, 25, 62, 125, 221};
    for (int m = 0; m <= 5; ++m) CHECK(b_enumerate(m, 1) == row1[m]);
    std::vector<BigInt> row2 = {1, 15, 107, 476, 1536, 3997, 8946, 17928};
    for (int m = 0; m <= 7; ++m) CHECK(b_enumerate(m, 2) == row2[m]);

    // the binomial identity against the doubled-corona numbers agrees
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; n + m <= 5; ++n) {
            CHECK(b_identity(m, n) == b_enumerate(m, n));
            CHECK_NOTHROW(b_count(m, n));
        }

    // independent brute force: filter all 2m-matchings of the signed0 corona
    for (int m = 0; m <= 2; ++m)
        for (int n = 0; m + n <= 3; ++n) {
            GraphSpec spec{Variant::Signed0, 2 * m + 2 * n + 1};
            BigInt brute = 0;
            for (const auto& s : matchings::enumerate_matchings(spec, 2 * m))
                if (minus_matching(s) == s) ++brute;
            CHECK(brute == b_enumerate(m, n));
        }
}

TEST_CASE("exact polynomial interpolation") {
    // x^2 - 3x + 2 through four integer nodes
    std::vector<std::pair<BigInt, BigInt>> pts = {{0, 2}, {1, 0}, {2, 0}, {3, 2}};
    RationalPoly poly = lagrange_interpolate(pts);
    CHECK(poly.degree() == 2);
    CHECK(poly.coeff == std::vector<BigRat>{BigRat(2), BigRat(-3), BigRat(1)});
    CHECK(poly.integral());
    CHECK(poly.eval(BigRat(10)) == BigRat(72));

    // triangular numbers force halves into the coefficients
    RationalPoly tri = lagrange_interpolate({{0, 0}, {1, 1}, {2, 3}});
    CHECK(tri.degree() == 2);
    CHECK(tri.leading() == BigRat(1, 2));
    CHECK_FALSE(tri.integral());

    CHECK_THROWS_AS(lagrange_interpolate({{1, 1}, {1, 2}}), std::invalid_argument);
}

TEST_CASE("row interpolation degrees, leading terms, predictions") {
    InterpolationReport r0 = interpolate_b(0, 3);
    CHECK(r0.poly.degree() == 1);
    CHECK(r0.poly.integral());
    CHECK(r0.poly.leading() == BigRat(1));
    CHECK(r0.predicted == r0.enumerated);
    CHECK(r0.predicted.size() == 3u);

    InterpolationReport r1 = interpolate_b(1, 2);
    CHECK(r1.poly.degree() == 3);
    CHECK(r1.poly.leading() == BigRat(7, 6));
    CHECK_FALSE(r1.poly.integral());
    CHECK(r1.predicted == r1.enumerated);

    InterpolationReport r2 = interpolate_b(2, 1);
    CHECK(r2.poly.degree() == 5);
    CHECK(boost::multiprecision::denominator(r2.poly.leading()) > 1);
    CHECK_FALSE(r2.poly.integral());

    CHECK_THROWS_AS(interpolate_b(-1, 1), std::invalid_argument);
}

TEST_CASE("row inequalities hold in exact arithmetic") {
    for (char family : {'a', 'c'}) {
        InequalityReport rep = check_inequalities(family, 10);
        CHECK(rep.family == family);
        CHECK(rep.max_p == 10);
        CHECK(rep.ok());
        CHECK(rep.violations.empty());
    }
    CHECK_THROWS_AS(check_inequalities('x', 3), std::invalid_argument);
    CHECK(check_estimation(8).ok());
}
