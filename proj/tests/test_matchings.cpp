#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "corona/matchings.hpp"

using namespace corona;
using namespace corona::matchings;

namespace {

GraphSpec spec_of(Variant v, int p) { return GraphSpec{v, p}; }

BigInt total_over_k(const GraphSpec& s) {
    BigInt total = 0;
    for (int k = 0; k <= 2 * s.p; ++k) total += count_matchings(s, k);
    return total;
}

}  // namespace

TEST_CASE("graph construction and labels") {
    Graph g = build_graph(spec_of(Variant::Plain, 3));
    CHECK(g.core_labels == std::vector<int>{1, 2, 3});
    CHECK(g.edges.size() == 3u + 3u);  // pendants then core pairs
    CHECK_FALSE(g.edges[0].internal);
    CHECK(g.edges[3] == Edge::between(1, 2));

    Graph d = build_graph(spec_of(Variant::Double, 2));
    CHECK(d.edges.size() == 2u + 2u);  // two pendants, one pair in two channels
    CHECK(d.edges[2] == Edge::between(1, 2, 1));
    CHECK(d.edges[3] == Edge::between(1, 2, 2));

    CHECK(build_graph(spec_of(Variant::Signed, 4)).core_labels ==
          std::vector<int>{-2, -1, 1, 2});
    CHECK(build_graph(spec_of(Variant::Signed0, 5)).core_labels ==
          std::vector<int>{-2, -1, 0, 1, 2});

    CHECK_THROWS_AS(build_graph(spec_of(Variant::Signed, 3)), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(spec_of(Variant::Signed0, 4)), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(spec_of(Variant::Plain, -1)), std::invalid_argument);
}

TEST_CASE("matching validation") {
    GraphSpec s = spec_of(Variant::Plain, 3);
    CHECK_NOTHROW(Matching(s, {Edge::pendant(1), Edge::between(2, 3)}));
    // two edges at one core vertex
    CHECK_THROWS_AS(Matching(s, {Edge::pendant(1), Edge::between(1, 2)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Matching(s, {Edge::between(1, 2), Edge::between(2, 3)}),
                    std::invalid_argument);
    // label outside the graph / channel outside the variant
    CHECK_THROWS_AS(Matching(s, {Edge::pendant(4)}), std::invalid_argument);
    CHECK_THROWS_AS(Matching(s, {Edge::between(1, 2, 2)}), std::invalid_argument);
    // edges get sorted into canonical order
    Matching m(s, {Edge::between(2, 3), Edge::pendant(1)});
    CHECK(m.edges.front() == Edge::pendant(1));
    CHECK(m.untouched_labels().empty());
    CHECK(m.touches(2));
    CHECK(m.contains(Edge::between(2, 3)));
}

TEST_CASE("matching counts match frozen values") {
    // plain corona rows
    std::vector<std::vector<int>> plain_rows = {
        {1},
        {1, 1},
        {1, 3, 1},
        {1, 6, 6, 1},
        {1, 10, 21, 10, 1},
        {1, 15, 55, 55, 15, 1},
        {1, 21, 120, 215, 120, 21, 1},
    };
    for (int p = 0; p <= 6; ++p)
        for (int k = 0; k <= p; ++k)
            CHECK(count_matchings(spec_of(Variant::Plain, p), k) == plain_rows[p][k]);
    CHECK(count_matchings(spec_of(Variant::Plain, 5), 2) == 55);

    // doubled-core values
    CHECK(count_matchings(spec_of(Variant::Double, 2), 1) == 4);
    CHECK(count_matchings(spec_of(Variant::Double, 3), 1) == 9);
    CHECK(count_matchings(spec_of(Variant::Double, 3), 2) == 9);
    CHECK(count_matchings(spec_of(Variant::Double, 4), 2) == 42);

    // signed relabelings count the same as plain on the same p
    for (int k = 0; k <= 4; ++k) {
        CHECK(count_matchings(spec_of(Variant::Signed, 4), k) ==
              count_matchings(spec_of(Variant::Plain, 4), k));
        CHECK(count_matchings(spec_of(Variant::Signed0, 5), k) ==
              count_matchings(spec_of(Variant::Plain, 5), k));
    }
}

TEST_CASE("enumeration agrees with counting and is canonical") {
    for (Variant v : {Variant::Plain, Variant::Double}) {
        for (int p = 0; p <= 8; ++p) {
            GraphSpec s = spec_of(v, p);
            for (int k = 0; k <= p; ++k) {
                auto all = enumerate_matchings(s, k);
                CHECK(BigInt(all.size()) == count_matchings(s, k));
                CHECK(std::is_sorted(all.begin(), all.end(),
                                     [](const Matching& a, const Matching& b) {
                                         return a.edges < b.edges;
                                     }));
                std::set<std::vector<Edge>> distinct;
                for (const auto& m : all) {
                    CHECK(m.size() == k);
                    distinct.insert(m.edges);
                }
                CHECK(distinct.size() == all.size());
            }
        }
    }
    CHECK(enumerate_matchings(spec_of(Variant::Signed, 4), 2).size() == 21u);
    CHECK(enumerate_matchings(spec_of(Variant::Signed0, 5), 1).size() == 15u);
    CHECK(total_over_k(spec_of(Variant::Plain, 6)) == 499);
}

TEST_CASE("early stop in the matching visitor") {
    int seen = 0;
    for_each_matching(spec_of(Variant::Plain, 4), 2, [&](const Matching&) {
        ++seen;
        return seen < 3;
    });
    CHECK(seen == 3);
}

TEST_CASE("duality on the plain corona") {
    for (int p = 0; p <= 7; ++p) {
        GraphSpec s = spec_of(Variant::Plain, p);
        for (int k = 0; k <= p; ++k) {
            CHECK(count_matchings(s, k) == count_matchings(s, p - k));
            for (const auto& m : enumerate_matchings(s, k)) {
                Matching d = dual_matching(m);
                CHECK(d.size() == p - k);
                CHECK(dual_matching(d) == m);
                // internal edges survive, pendants move to the untouched labels
                for (const auto& e : m.edges)
                    if (e.internal) CHECK(d.contains(e));
                for (int label : m.untouched_labels())
                    CHECK(d.contains(Edge::pendant(label)));
            }
        }
    }
}

TEST_CASE("label negation on signed variants") {
    for (auto [v, p] : {std::pair{Variant::Signed, 4}, {Variant::Signed0, 5}}) {
        GraphSpec s = spec_of(v, p);
        for (int k = 0; k <= p; ++k)
            for (const auto& m : enumerate_matchings(s, k)) {
                Matching neg = minus_matching(m);
                CHECK(neg.size() == m.size());
                CHECK(minus_matching(neg) == m);
            }
    }
    Matching fixed(spec_of(Variant::Signed, 4),
                   {Edge::between(-2, 2), Edge::between(-1, 1)});
    CHECK(minus_matching(fixed) == fixed);
    CHECK(horizontal_edges(fixed).size() == 2u);
    CHECK_THROWS_AS(minus_matching(Matching(spec_of(Variant::Plain, 2), {})),
                    std::invalid_argument);
}

TEST_CASE("horizontal edges and the center pendant") {
    Matching m(spec_of(Variant::Signed0, 5),
               {Edge::pendant(0), Edge::between(-1, 1), Edge::between(-2, 2)});
    auto horiz = horizontal_edges(m);
    CHECK(horiz == std::vector<Edge>{Edge::between(-2, 2), Edge::between(-1, 1)});
    auto center = center_pendant(m);
    REQUIRE(center.has_value());
    CHECK(*center == Edge::pendant(0));
    CHECK_FALSE(center_pendant(Matching(spec_of(Variant::Signed0, 5), {})).has_value());
}

TEST_CASE("quotient and lift between signed and doubled coronas") {
    for (int r = 1; r <= 3; ++r) {
        GraphSpec s = spec_of(Variant::Signed, 2 * r);
        for (int k = 0; k <= 2 * r; k += 2)
            for (const auto& m : enumerate_matchings(s, k)) {
                if (!(minus_matching(m) == m)) continue;
                if (!horizontal_edges(m).empty()) continue;
                Matching q = quotient_matching(m);
                CHECK(q.spec == spec_of(Variant::Double, r));
                CHECK(q.size() == k / 2);
                CHECK(lift_matching(q) == m);
            }
    }

    // channel semantics: pendant pair -> pendant, same signs -> channel 1,
    // mixed signs -> channel 2
    GraphSpec s4 = spec_of(Variant::Signed, 4);
    Matching pend_pair(s4, {Edge::pendant(-1), Edge::pendant(1)});
    CHECK(quotient_matching(pend_pair).edges == std::vector<Edge>{Edge::pendant(1)});
    Matching same_sign(s4, {Edge::between(-2, -1), Edge::between(1, 2)});
    CHECK(quotient_matching(same_sign).edges ==
          std::vector<Edge>{Edge::between(1, 2, 1)});
    Matching mixed(s4, {Edge::between(-2, 1), Edge::between(-1, 2)});
    CHECK(quotient_matching(mixed).edges == std::vector<Edge>{Edge::between(1, 2, 2)});

    // quotient refuses non-invariant input and horizontal edges
    CHECK_THROWS_AS(quotient_matching(Matching(s4, {Edge::pendant(1)})),
                    std::invalid_argument);
    CHECK_THROWS_AS(quotient_matching(Matching(s4, {Edge::between(-1, 1)})),
                    std::invalid_argument);
}

TEST_CASE("relabeling between positions and signed labels") {
    GraphSpec even = spec_of(Variant::Signed, 4);
    CHECK(label_for_position(even, 1) == -2);
    CHECK(label_for_position(even, 2) == -1);
    CHECK(label_for_position(even, 3) == 1);
    CHECK(label_for_position(even, 4) == 2);
    GraphSpec odd = spec_of(Variant::Signed0, 5);
    CHECK(label_for_position(odd, 3) == 0);
    for (int pos = 1; pos <= 5; ++pos)
        CHECK(position_for_label(odd, label_for_position(odd, pos)) == pos);

    for (auto [variant, p] : {std::pair{Variant::Signed, 4}, {Variant::Signed0, 5}})
        for (int k = 0; k <= p; ++k)
            for (const auto& m : enumerate_matchings(spec_of(Variant::Plain, p), k)) {
                Matching lifted = relabel_to_signed(m);
                CHECK(lifted.spec.variant == variant);
                CHECK(relabel_to_positions(lifted) == m);
            }
}
