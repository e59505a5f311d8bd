#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <vector>

#include "corona/quiver.hpp"

using namespace corona;
using namespace corona::quiver;
using fieldmat::Mat;
using matchings::Edge;
using matchings::GraphSpec;
using matchings::Matching;
using matchings::Variant;
using roots::AdmissibleRoot;

namespace {

VarietyPoint base_point(int q, int m, int n) {
    int d = m + n;
    Mat a(q, m, d), b(q, n, d);
    for (int r = 0; r < m; ++r) a.set(r, r, 1);
    for (int r = 0; r < n; ++r) b.set(r, m + r, 1);
    return VarietyPoint::make(q, m, n, a, b);
}

}  // namespace

TEST_CASE("variety points require complementary subspaces") {
    CHECK_NOTHROW(base_point(2, 2, 2));
    Mat a = Mat::from_rows(2, {{1, 0}});
    Mat b_same = Mat::from_rows(2, {{1, 0}});
    CHECK_THROWS_AS(VarietyPoint::make(2, 1, 1, a, b_same), std::invalid_argument);
    Mat b_short = Mat::from_rows(2, {{0, 1}});
    CHECK_THROWS_AS(VarietyPoint::make(2, 1, 0, a, b_short), std::invalid_argument);
}

TEST_CASE("representation read off a point") {
    VarietyPoint pt = base_point(3, 2, 2);
    Rep v = rep_from_point(pt);
    CHECK_NOTHROW(v.validate());
    CHECK(v.flag_dims == std::vector<int>{1, 2, 3, 4});
    CHECK(v.dim_a == 2);
    CHECK(v.dim_b == 2);
    CHECK(is_injective(v));
    CHECK(is_complementary(v));
    // flag maps are the standard inclusions
    for (int t = 0; t + 1 < v.len(); ++t) {
        const Mat& f = v.flag_maps[t];
        CHECK(f.rows() == t + 2);
        CHECK(f.cols() == t + 1);
        for (int c = 0; c <= t; ++c) CHECK(f.at(c, c) == 1);
    }
}

TEST_CASE("indecomposable models are injective with scalar endomorphisms") {
    for (int q : {2, 3})
        for (const auto& r : roots::admissible_roots(2, 2)) {
            Rep model = indecomposable_rep(r, 2, 2, q);
            CHECK_NOTHROW(model.validate());
            CHECK(is_injective(model));
            CHECK(hom_dim(model, model) == 1);
        }
}

TEST_CASE("hom is additive over direct sums") {
    int q = 3;
    Rep x = indecomposable_rep(AdmissibleRoot::pend(1), 2, 2, q);
    Rep y = indecomposable_rep(AdmissibleRoot::pair(1, 3), 2, 2, q);
    Rep z = indecomposable_rep(AdmissibleRoot::free_vertex(2), 2, 2, q);
    Rep yz = direct_sum(y, z);
    CHECK(hom_dim(x, yz) == hom_dim(x, y) + hom_dim(x, z));
    CHECK(hom_dim(yz, x) == hom_dim(y, x) + hom_dim(z, x));
    CHECK(hom_dim(direct_sum(x, x), y) == 2 * hom_dim(x, y));
}

TEST_CASE("hom matrix is unitriangular with unit determinant") {
    for (auto [m, n] : {std::pair{2, 1}, {1, 2}, {2, 2}}) {
        const HomMatrix& h2 = hom_matrix(m, n, 2);
        const HomMatrix& h3 = hom_matrix(m, n, 3);
        int p = m + n;
        size_t expected = static_cast<size_t>(2 * p + p * (p - 1) / 2);
        CHECK(h2.order.size() == expected);
        CHECK((h2.det == 1 || h2.det == -1));
        for (size_t a = 0; a < h2.order.size(); ++a) {
            CHECK(h2.dims[a][a] == 1);
            for (size_t b = 0; b < a; ++b) CHECK(h2.dims[a][b] == 0);
        }
        // hom dimensions of the combinatorial models do not depend on the field
        CHECK(h2.order == h3.order);
        CHECK(h2.dims == h3.dims);
    }
}

TEST_CASE("classification recovers synthetic direct sums") {
    for (int q : {2, 3})
        for (auto [m, n] : {std::pair{2, 1}, {1, 2}, {2, 2}}) {
            GraphSpec spec{Variant::Plain, m + n};
            for (const auto& s : matchings::enumerate_matchings(spec, m)) {
                auto roots_of_s = roots::matching_to_rootset(s, m, n);
                Rep sum = indecomposable_rep(roots_of_s[0], m, n, q);
                for (size_t i = 1; i < roots_of_s.size(); ++i)
                    sum = direct_sum(sum, indecomposable_rep(roots_of_s[i], m, n, q));
                CHECK(classify_rep(sum, m, n) == s);
            }
        }
}

TEST_CASE("binary representatives classify back to their matchings") {
    for (int q : {2, 3})
        for (int p = 1; p <= 4; ++p)
            for (int m = 0; m <= p; ++m) {
                int n = p - m;
                GraphSpec spec{Variant::Plain, p};
                std::set<std::vector<std::vector<int>>> images;
                for (const auto& s : matchings::enumerate_matchings(spec, m)) {
                    Mat g = binary_representative(s, m, n, q);
                    CHECK(g.rows() == p);
                    CHECK(g.cols() == p);
                    for (int r = 0; r < p; ++r)
                        for (int c = 0; c < p; ++c) CHECK(g.at(r, c) <= 1);
                    CHECK(g.inverse().has_value());
                    images.insert(g.to_rows());
                    VarietyPoint pt = point_of_matrix(g, leading_split_positions(m, n));
                    CHECK(classify_point(pt) == s);
                }
                CHECK(BigInt(images.size()) == matchings::count_matchings(spec, m));
            }
}

TEST_CASE("split position helpers") {
    CHECK(leading_split_positions(3, 2) == std::vector<int>{1, 2, 3});
    CHECK(leading_split_positions(0, 2).empty());
    // signed corona on 4 cores: labels -2,-1,1,2 sit at positions 1..4
    CHECK(signed_split_positions(1, 2) == std::vector<int>{2, 3});
    CHECK(signed_split_positions(2, 2) == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("outer involution on invertible matrices") {
    Mat g = Mat::from_rows(3, {{1, 1, 0, 2}, {0, 1, 0, 0}, {0, 0, 2, 1}, {0, 0, 0, 1}});
    REQUIRE(g.inverse().has_value());
    Mat gg = apply_phi(apply_phi(g));
    CHECK(gg == g);
    Mat id = Mat::identity(3, 4);
    CHECK(apply_phi(id) == id);
    // multiplicative: phi(g h) == phi(g) phi(h)
    Mat h = Mat::from_rows(3, {{2, 0, 1, 0}, {0, 1, 1, 0}, {0, 0, 1, 2}, {0, 0, 0, 2}});
    CHECK(apply_phi(g.mul(h)) == apply_phi(g).mul(apply_phi(h)));
}

TEST_CASE("fixed-point representatives for invariant matchings") {
    GraphSpec s4{Variant::Signed, 4};
    std::vector<Matching> invariant = {
        Matching(s4, {Edge::pendant(-1), Edge::pendant(1)}),
        Matching(s4, {Edge::pendant(-2), Edge::pendant(2)}),
        Matching(s4, {Edge::between(-2, -1), Edge::between(1, 2)}),
        Matching(s4, {Edge::between(-2, 1), Edge::between(-1, 2)}),
    };
    std::set<std::vector<std::vector<int>>> distinct;
    for (const auto& s : invariant) {
        Mat g = symplectic_representative(s, 3);
        CHECK(apply_phi(g) == g);
        CHECK(g.inverse().has_value());
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                CHECK((g.at(r, c) == 0 || g.at(r, c) == 1 || g.at(r, c) == 2));
        distinct.insert(g.to_rows());
        VarietyPoint pt = point_of_matrix(g, signed_split_positions(1, 2));
        CHECK(matchings::relabel_to_signed(classify_point(pt)) == s);
    }
    CHECK(distinct.size() == invariant.size());

    // rejected inputs: not invariant, horizontal edge, even characteristic
    CHECK_THROWS_AS(symplectic_representative(
                        Matching(s4, {Edge::pendant(1), Edge::pendant(2)}), 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(symplectic_representative(
                        Matching(s4, {Edge::between(-1, 1), Edge::between(-2, 2)}), 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(symplectic_representative(invariant[0], 2), std::invalid_argument);
}
