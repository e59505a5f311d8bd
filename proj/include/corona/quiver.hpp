// Representations of the fork quiver behind the orbit parametrization:
// flag vertices 1 -> 2 -> ... -> m+n with two extra branch vertices A, B
// mapping into the last flag vertex.  A point of the variety (a pair of
// complementary subspaces against the standard full flag) is such a
// representation; its Krull-Schmidt decomposition into the admissible
// indecomposables is the classification invariant, and the multiset of
// summands is recovered by solving the unitriangular system of Hom
// dimensions against the indecomposable models.
#pragma once

#include <vector>

#include "corona/fieldmat.hpp"
#include "corona/matchings.hpp"
#include "corona/roots.hpp"

namespace corona {
namespace quiver {

struct Rep {
    int q = 2;
    std::vector<int> flag_dims;           // length m+n
    int dim_a = 0;
    int dim_b = 0;
    std::vector<fieldmat::Mat> flag_maps; // [t]: d_{t+1} x d_t
    fieldmat::Mat branch_a;               // d_last x dim_a
    fieldmat::Mat branch_b;               // d_last x dim_b

    int len() const { return static_cast<int>(flag_dims.size()); }
    int sink_dim() const { return flag_dims.empty() ? 0 : flag_dims.back(); }
    void validate() const;
};

struct VarietyPoint {
    int q = 2;
    int m = 0;
    int n = 0;
    fieldmat::Subspace a;  // dim m in F_q^{m+n}
    fieldmat::Subspace b;  // dim n, complementary to a

    static VarietyPoint make(int q, int m, int n, const fieldmat::Mat& a_rows,
                             const fieldmat::Mat& b_rows);
};

Rep rep_from_point(const VarietyPoint& pt);
Rep indecomposable_rep(const roots::AdmissibleRoot& r, int m, int n, int q);
Rep direct_sum(const Rep& x, const Rep& y);
bool is_injective(const Rep& v);       // all structure maps injective
bool is_complementary(const Rep& v);   // injective and im A + im B splits the sink

// dimension of the intertwiner space Hom(x, y)
int hom_dim(const Rep& x, const Rep& y);

struct HomMatrix {
    int m = 0, n = 0, q = 2;
    std::vector<roots::AdmissibleRoot> order;  // topological: nonzero homs go forward
    std::vector<Rep> models;                   // indecomposable model per order entry
    std::vector<std::vector<int>> dims;        // dims[a][b] = hom(order[a], order[b])
    long long det = 0;                         // exact integer determinant (must be +-1)
};

// computed once per (m, n, q) and cached; construction asserts the matrix is
// unitriangular in the stored order
const HomMatrix& hom_matrix(int m, int n, int q);

// Krull-Schmidt classification of a representation with the target dimension
// vector of (m, n); returns the matching tag on the plain corona with m+n cores
matchings::Matching classify_rep(const Rep& v, int m, int n);
// same, plus the flag/subspace jump-pattern cross-check available for points
matchings::Matching classify_point(const VarietyPoint& pt);

// upper-triangular orbit representative with 0/1 entries: columns listed by a
// position split (a_positions get the subspace playing the A role)
fieldmat::Mat binary_representative_split(const matchings::Matching& s, int q,
                                          const std::vector<int>& a_positions);
fieldmat::Mat binary_representative(const matchings::Matching& s, int m, int n, int q);
VarietyPoint point_of_matrix(const fieldmat::Mat& g, const std::vector<int>& a_positions);
std::vector<int> leading_split_positions(int m, int n);     // 1..m
std::vector<int> signed_split_positions(int half_m, int r); // positions of -half_m..half_m

// the outer involution g -> J g^{-T} J^{-1} with J the antidiagonal matrix
// whose upper-right quadrant is -1 and lower-left is +1 (even dimension)
fieldmat::Mat apply_phi(const fieldmat::Mat& g);

// fixed-point representative for a minus-invariant, horizontal-free matching
// on the signed corona: apply_phi(g) == g and the signed-split point of g
// classifies back to the input; entries lie in {0, 1, -1}
fieldmat::Mat symplectic_representative(const matchings::Matching& signed_s, int q);

}  // namespace quiver
}  // namespace corona
