// Orbit-count sequences and their sanity laws.
//
//   a_{p,m} : m-matchings of the plain corona C_p
//   c_{p,m} : m-matchings of the doubled corona C_p^(2)
//   b_{m,n} : minus-invariant 2m-matchings of the signed0 corona on
//             2m+2n+1 cores
//
// a and c satisfy three-term recurrences (delete the last core vertex
// together with its pendant and its core edges); b is computed two
// independent ways — a direct backtracking enumeration over negation-orbit
// blocks, and a binomial identity against the c numbers — which must agree.
// Rows are interpolated by exact rational polynomials in m (fixed n), and
// the symmetry / unimodality / ultra-log-concavity inequalities are checked
// in exact arithmetic.
#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "corona/fieldmat.hpp"
#include "corona/matchings.hpp"

namespace corona {
namespace sequences {

BigInt binomial(int a, int b);

// recurrence values; both must match exhaustive matching enumeration
BigInt a_count(int p, int m);
BigInt c_count(int p, int m);

// visit every minus-invariant k-matching of a signed or signed0 corona once,
// by choosing a block type per negation class (pendant pair, horizontal edge,
// same-sign or crossed internal pair, untouched) plus the center pendant
void for_each_minus_invariant(const matchings::GraphSpec& spec, int k,
                              const std::function<bool(const matchings::Matching&)>& visit);
std::vector<matchings::Matching> minus_invariant_matchings(const matchings::GraphSpec& spec,
                                                           int k);

BigInt b_enumerate(int m, int n);  // direct count via the block backtracker
BigInt b_identity(int m, int n);   // sum_l C(m+n,2l) c_{m+n-2l,n-l} + odd-l twin
BigInt b_count(int m, int n);      // both methods; disagreement throws

struct RationalPoly {
    std::vector<BigRat> coeff;  // ascending degree, trailing zeros trimmed

    int degree() const { return static_cast<int>(coeff.size()) - 1; }
    BigRat leading() const { return coeff.empty() ? BigRat(0) : coeff.back(); }
    BigRat eval(const BigRat& x) const;
    bool integral() const;  // every coefficient has denominator 1
};

// exact interpolation through the given (x, y) points; x pairwise distinct
RationalPoly lagrange_interpolate(const std::vector<std::pair<BigInt, BigInt>>& pts);

struct InterpolationReport {
    int n = 0;
    int extra = 0;
    RationalPoly poly;          // through m = 0 .. 2n+1
    std::vector<BigInt> predicted;   // at m = 2n+2 .. 2n+1+extra
    std::vector<BigInt> enumerated;  // b_count at the same m
};

// throws if the degree is not exactly 2n+1 or any prediction misses
InterpolationReport interpolate_b(int n, int extra);

struct InequalityReport {
    char family = 'a';
    int max_p = 0;
    std::vector<std::string> violations;  // expected empty

    bool ok() const { return violations.empty(); }
};

// symmetry, unimodality, and a_{p,m}^2 * m * (p-m) >= (m+1)(p-m+1) *
// a_{p,m-1} * a_{p,m+1} on every row p <= max_p (family 'a' or 'c')
InequalityReport check_inequalities(char family, int max_p);
// c_{p,k} <= C(p^2, k): the doubled corona has p^2 edges
InequalityReport check_estimation(int max_p);

}  // namespace sequences
}  // namespace corona
