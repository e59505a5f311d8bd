#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "corona/json_io.hpp"

using namespace corona;
using namespace corona::json_io;
using fieldmat::Mat;
using matchings::Edge;
using matchings::GraphSpec;
using matchings::Matching;
using matchings::Variant;
using nlohmann::json;
using roots::AdmissibleRoot;

TEST_CASE("matching serialization shape") {
    Matching s(GraphSpec{Variant::Plain, 3}, {Edge::pendant(1), Edge::between(2, 3)});
    json j = matching_to_json(s);
    CHECK(j["graph"]["variant"] == "plain");
    CHECK(j["graph"]["p"] == 3);
    REQUIRE(j["edges"].size() == 2u);
    CHECK(j["edges"][0]["kind"] == "pendant");
    CHECK(j["edges"][0]["i"] == 1);
    CHECK(j["edges"][1]["kind"] == "internal");
    CHECK(j["edges"][1]["i"] == 2);
    CHECK(j["edges"][1]["j"] == 3);
    CHECK(matching_from_json(j) == s);

    // channel defaults to 1 when absent
    json stripped = j;
    stripped["edges"][1].erase("channel");
    CHECK(matching_from_json(stripped) == s);
}

TEST_CASE("matching roundtrips across variants") {
    std::vector<Matching> cases = {
        Matching(GraphSpec{Variant::Plain, 4}, {}),
        Matching(GraphSpec{Variant::Double, 3},
                 {Edge::pendant(3), Edge::between(1, 2, 2)}),
        Matching(GraphSpec{Variant::Signed, 4},
                 {Edge::between(-2, 1), Edge::between(-1, 2)}),
        Matching(GraphSpec{Variant::Signed0, 5},
                 {Edge::pendant(0), Edge::between(-2, 2)}),
    };
    for (const auto& s : cases) {
        json j = matching_to_json(s);
        CHECK(matching_from_json(j) == s);
        // negative labels survive the trip
        if (s.spec.variant == Variant::Signed) CHECK(j["edges"][0]["i"] == -2);
    }
    CHECK_THROWS_AS(matching_from_json(json{{"graph", {{"variant", "plain"}}}}),
                    std::invalid_argument);
    json bad = matching_to_json(cases[0]);
    bad["graph"]["variant"] = "hexagonal";
    CHECK_THROWS_AS(matching_from_json(bad), std::invalid_argument);
}

TEST_CASE("root serialization") {
    json pend = root_to_json(AdmissibleRoot::pend(2));
    CHECK(pend["root"]["kind"] == "pend");
    CHECK(pend["root"]["i"] == 2);
    CHECK_FALSE(pend["root"].contains("j"));
    json pair = root_to_json(AdmissibleRoot::pair(1, 3));
    CHECK(pair["root"]["j"] == 3);
    for (const auto& r : roots::admissible_roots(2, 2))
        CHECK(root_from_json(root_to_json(r)) == r);
    // bare object without the wrapper is accepted too
    CHECK(root_from_json(pend["root"]) == AdmissibleRoot::pend(2));
}

TEST_CASE("root set serialization carries the size pair") {
    Matching s(GraphSpec{Variant::Plain, 4}, {Edge::pendant(2), Edge::between(1, 4)});
    roots::RootSet rs = roots::matching_to_rootset(s, 2, 2);
    json j = rootset_to_json(rs, 2, 2);
    CHECK(j["m"] == 2);
    CHECK(j["n"] == 2);
    CHECK(j["roots"].size() == rs.size());
    int m = 0, n = 0;
    roots::RootSet back = rootset_from_json(j, &m, &n);
    CHECK(back == rs);
    CHECK(m == 2);
    CHECK(n == 2);
}

TEST_CASE("matrix serialization is flat row-major") {
    Mat g = Mat::from_rows(3, {{1, 2, 0}, {0, 1, 1}});
    json j = mat_to_json(g);
    CHECK(j["q"] == 3);
    CHECK(j["rows"] == 2);
    CHECK(j["cols"] == 3);
    CHECK(j["entries"] == json::array({1, 2, 0, 0, 1, 1}));
    CHECK(mat_from_json(j) == g);

    json short_entries = j;
    short_entries["entries"] = json::array({1, 2, 0});
    CHECK_THROWS_AS(mat_from_json(short_entries), std::invalid_argument);
    json bad_field = j;
    bad_field["q"] = 9;
    CHECK_THROWS_AS(mat_from_json(bad_field), std::invalid_argument);
}

TEST_CASE("big integers and rationals print exactly") {
    BigInt big = 1;
    for (int i = 0; i < 100; ++i) big *= 2;
    CHECK(big_string(big) == "1267650600228229401496703205376");
    CHECK(big_string(BigInt(-7)) == "-7");
    CHECK(rat_string(BigRat(7, 6)) == "7/6");
    CHECK(rat_string(BigRat(3)) == "3");
    CHECK(rat_string(BigRat(4, 2)) == "2");
    CHECK(rat_string(BigRat(-1, 2)) == "-1/2");
}
