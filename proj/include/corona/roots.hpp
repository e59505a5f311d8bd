// Admissible positive roots for the orbit parametrization at size (m, n) and
// their dimension vectors on the type-D fork quiver.
//
// The quiver has flag vertices 1..m+n in a path, plus two branch vertices A
// and B glued to the last flag vertex (the unique sink).  In coordinate form
// the three admissible root shapes are
//   Pend(i) = L_i - L_p,        Pair(i, j) = L_i + L_j,     Free(i) = L_i + L_p,
// with p = m+n+2 and 1 <= i < j <= m+n.  Their dimension vectors:
//   Pend(i): flag 1 on [i, m+n],                branch A = 1, branch B = 0
//   Free(i): flag 1 on [i, m+n],                branch A = 0, branch B = 1
//   Pair(i,j): flag 1 on [i, j-1], 2 on [j, m+n], branch A = 1, branch B = 1
// The target dimension vector at (m, n) is flag (1, 2, ..., m+n) with
// branches (m, n).
#pragma once

#include <string>
#include <vector>

#include "corona/matchings.hpp"

namespace corona {
namespace roots {

enum class RootKind { Pend, Pair, Free };

std::string root_kind_name(RootKind k);
RootKind root_kind_from_name(const std::string& name);

struct AdmissibleRoot {
    RootKind kind = RootKind::Pend;
    int i = 0;
    int j = 0;  // used by Pair only, i < j

    static AdmissibleRoot pend(int i) { return {RootKind::Pend, i, 0}; }
    static AdmissibleRoot pair(int i, int j);
    static AdmissibleRoot free_vertex(int i) { return {RootKind::Free, i, 0}; }
    auto operator<=>(const AdmissibleRoot&) const = default;
};

struct DimVector {
    std::vector<int> flag;  // length m+n
    int branch_a = 0;
    int branch_b = 0;

    DimVector() = default;
    explicit DimVector(int len) : flag(len, 0) {}
    DimVector& operator+=(const DimVector& o);
    bool operator==(const DimVector&) const = default;
};

using RootSet = std::vector<AdmissibleRoot>;  // sorted, duplicate-free

// canonical listing: Pend(1..m+n), Free(1..m+n), Pair(i,j) lexicographic
std::vector<AdmissibleRoot> admissible_roots(int m, int n);
bool is_admissible(const AdmissibleRoot& r, int m, int n);

DimVector root_dimension_vector(const AdmissibleRoot& r, int m, int n);
DimVector target_dim_vector(int m, int n);

// bijection with m-matchings of the plain corona on m+n cores:
//   pendant edge {v_i, w_i}  <->  Pend(i)
//   internal edge {v_i, v_j} <->  Pair(i, j)
//   untouched core v_i       <->  Free(i)
RootSet matching_to_rootset(const matchings::Matching& s, int m, int n);
matchings::Matching rootset_to_matching(const RootSet& roots, int m, int n);

struct ValidationResult {
    bool ok = true;
    std::string reason;  // first violated condition when !ok
};

// distinct admissible roots summing to the target dimension vector
ValidationResult validate_decomposition(const RootSet& roots, int m, int n);

}  // namespace roots
}  // namespace corona
