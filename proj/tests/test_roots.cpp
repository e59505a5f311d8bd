#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "corona/roots.hpp"

using namespace corona;
using namespace corona::roots;
using matchings::Edge;
using matchings::GraphSpec;
using matchings::Matching;
using matchings::Variant;

TEST_CASE("root listing and admissibility") {
    auto all = admissible_roots(2, 2);
    // Pend(1..4), Free(1..4), Pair(i<j): 4 + 4 + 6
    CHECK(all.size() == 14u);
    std::set<AdmissibleRoot> distinct(all.begin(), all.end());
    CHECK(distinct.size() == all.size());
    CHECK(all.front() == AdmissibleRoot::pend(1));
    for (const auto& r : all) CHECK(is_admissible(r, 2, 2));
    CHECK_FALSE(is_admissible(AdmissibleRoot::pend(5), 2, 2));
    CHECK_FALSE(is_admissible(AdmissibleRoot::pend(0), 2, 2));
    CHECK_FALSE(is_admissible(AdmissibleRoot{RootKind::Pair, 2, 2}, 2, 2));
    CHECK_THROWS_AS(AdmissibleRoot::pair(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(AdmissibleRoot::pair(2, 2), std::invalid_argument);

    CHECK(root_kind_name(RootKind::Pair) == "pair");
    CHECK(root_kind_from_name("free") == RootKind::Free);
    CHECK_THROWS_AS(root_kind_from_name("bogus"), std::invalid_argument);
}

TEST_CASE("dimension vectors of the three root shapes") {
    DimVector pend = root_dimension_vector(AdmissibleRoot::pend(2), 2, 2);
    CHECK(pend.flag == std::vector<int>{0, 1, 1, 1});
    CHECK(pend.branch_a == 1);
    CHECK(pend.branch_b == 0);

    DimVector free = root_dimension_vector(AdmissibleRoot::free_vertex(4), 2, 2);
    CHECK(free.flag == std::vector<int>{0, 0, 0, 1});
    CHECK(free.branch_a == 0);
    CHECK(free.branch_b == 1);

    DimVector pair = root_dimension_vector(AdmissibleRoot::pair(1, 3), 2, 2);
    CHECK(pair.flag == std::vector<int>{1, 1, 2, 2});
    CHECK(pair.branch_a == 1);
    CHECK(pair.branch_b == 1);

    DimVector target = target_dim_vector(2, 2);
    CHECK(target.flag == std::vector<int>{1, 2, 3, 4});
    CHECK(target.branch_a == 2);
    CHECK(target.branch_b == 2);

    DimVector sum(4);
    sum += pend;
    sum += free;
    CHECK(sum.flag == std::vector<int>{0, 1, 1, 2});
    CHECK(sum.branch_b == 1);
}

TEST_CASE("matchings and root decompositions are in bijection") {
    for (int p = 1; p <= 5; ++p)
        for (int m = 0; m <= p; ++m) {
            int n = p - m;
            GraphSpec spec{Variant::Plain, p};
            std::set<RootSet> seen;
            for (const auto& s : matchings::enumerate_matchings(spec, m)) {
                RootSet roots = matching_to_rootset(s, m, n);
                CHECK(validate_decomposition(roots, m, n).ok);
                CHECK(rootset_to_matching(roots, m, n) == s);
                seen.insert(roots);
            }
            CHECK(BigInt(seen.size()) == matchings::count_matchings(spec, m));
        }
}

TEST_CASE("translation dictionary on a concrete matching") {
    // pendant at 1, internal {2,4}, untouched 3 at (m,n) = (2,2)
    Matching s(GraphSpec{Variant::Plain, 4}, {Edge::pendant(1), Edge::between(2, 4)});
    RootSet roots = matching_to_rootset(s, 2, 2);
    CHECK(roots == RootSet{AdmissibleRoot::pend(1), AdmissibleRoot::pair(2, 4),
                           AdmissibleRoot::free_vertex(3)});
}

TEST_CASE("decomposition validation failure reasons") {
    // wrong total: three roots cannot reach the (2,2) target
    RootSet short_set = {AdmissibleRoot::pend(1), AdmissibleRoot::pend(2)};
    CHECK_FALSE(validate_decomposition(short_set, 2, 2).ok);

    // duplicates rejected
    RootSet dup = {AdmissibleRoot::pend(1), AdmissibleRoot::pend(1),
                   AdmissibleRoot::free_vertex(2)};
    auto dup_result = validate_decomposition(dup, 2, 2);
    CHECK_FALSE(dup_result.ok);
    CHECK_FALSE(dup_result.reason.empty());

    // inadmissible member rejected
    RootSet bad = {AdmissibleRoot::pend(7)};
    CHECK_FALSE(validate_decomposition(bad, 2, 2).ok);

    // a correct decomposition passes with empty reason
    Matching s(GraphSpec{Variant::Plain, 4}, {Edge::between(1, 2), Edge::pendant(3)});
    auto ok = validate_decomposition(matching_to_rootset(s, 2, 2), 2, 2);
    CHECK(ok.ok);
    CHECK(ok.reason.empty());
}
