// Brute-force Borel-orbit partitions of the variety of complementary
// subspace pairs (A, B) in F_q^{m+n}, dim A = m, dim B = n.
//
// Points are stored as canonical keys: both subspaces reduced to their rref
// bases, entries packed three bits apiece (A block then B block, row-major).
// The Borel of upper-triangular matrices acts through its elementary and
// torus generators; orbits are the connected components under that action.
// Each orbit is classified through the quiver machinery on a random sample
// of its members, and the constancy of the resulting matching tag across the
// sample doubles as an internal consistency check.  Fixed-point scans for a
// symplectic or split symmetric form mark the orbits meeting the fixed locus.
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "corona/fieldmat.hpp"
#include "corona/matchings.hpp"
#include "corona/quiver.hpp"

namespace corona {
namespace orbits {

// 3-bit packing of d*d entries into six words caps the ambient dimension
inline constexpr int kMaxAmbient = 11;

struct PackedPoint {
    std::array<uint64_t, 6> w{};
    auto operator<=>(const PackedPoint&) const = default;
};

struct PackedPointHash {
    size_t operator()(const PackedPoint& p) const;
};

PackedPoint pack_point(const quiver::VarietyPoint& pt);
quiver::VarietyPoint unpack_point(int m, int n, int q, const PackedPoint& key);

BigInt gaussian_binomial(int d, int k, int q);
// closed form [m+n choose m]_q * q^{mn}; the enumeration must reproduce it
BigInt expected_point_count(int m, int n, int q);
// number of m-matchings of the plain corona on m+n cores
BigInt expected_orbit_count(int m, int n);

// every point exactly once, as canonical keys (A ranges over rref bases by
// pivot shape, B over the complements of each A)
std::vector<PackedPoint> enumerate_points(int m, int n, int q);

// generators of the Borel subgroup of upper-triangular matrices: elementary
// I + c E_{i,i+1} for every superdiagonal slot and c != 0, plus one diagonal
// primitive-root generator per position when q > 2
std::vector<fieldmat::Mat> borel_generators(int q, int d);

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CensusOptions {
    long long budget = 2'000'000;  // refuse point sets larger than this
    bool budget_override = false;
    uint64_t seed = 2024;          // reservoir sampling for the tag checks
    int samples_per_orbit = 25;
    bool classify_orbits = true;
    int threads = 1;
};

struct OrbitInfo {
    long long size = 0;
    matchings::Matching tag;  // classification, plain corona on m+n cores
    bool has_sp_point = false;
    bool has_so_point = false;
};

struct Partition {
    int m = 0, n = 0, q = 2;
    std::vector<PackedPoint> points;  // enumeration order
    std::vector<int32_t> orbit_of;    // parallel to points
    std::vector<OrbitInfo> orbits;    // orbit ids rank the least member keys
    BigInt expected_points = 0;
    BigInt expected_orbits = 0;

    long long total_points() const { return static_cast<long long>(points.size()); }
    // orbit count equals the matching count and the tags are pairwise distinct
    bool bijection_certified() const;
};

Partition borel_partition(int m, int n, int q, const CensusOptions& opt = {});

enum class FormKind { Symplectic, SymmetricSplit };

// antidiagonal Gram matrices: symplectic +1 above the center and -1 below
// (even d, odd q), split symmetric all +1
fieldmat::Mat gram_matrix(FormKind kind, int q, int d);
// B is the perp of A and the form restricted to A is nondegenerate
bool isotropy_fixed(FormKind kind, const quiver::VarietyPoint& pt);

// scan every point and set has_sp_point / has_so_point on its orbit
void mark_fixed_points(Partition& part, FormKind kind, int threads = 1);
long long fixed_orbit_count(const Partition& part, FormKind kind);

}  // namespace orbits
}  // namespace corona
