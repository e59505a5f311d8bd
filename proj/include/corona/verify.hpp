// End-to-end verification suites.  Each criterion is independent, returns a
// pass/fail result with a one-line detail, and never weakens on failure: any
// internal exception is reported as a failure of the enclosing criterion.
//
//   1  census        orbit counts match matching counts on eight (m,n,q)
//   2  roundtrip     classify(binary representative) is the identity
//   3  minus         the outer involution acts as label negation
//   4  sp            symplectic fixed points = invariant horizontal-free tags
//   5  so            orthogonal fixed points = invariant tags
//   6  recurrences   recurrence vs exhaustive matching counts (p <= 10)
//   7  quotient      invariant horizontal-free matchings quotient to the
//                    doubled corona (r <= 5)
//   8  inequalities  symmetry / unimodality / ultra-log-concavity / bound
//   9  bpoly         exact interpolation, degree, leading coefficients
//  10  tripwires     tag constancy, b methods, hom-matrix field independence
#pragma once

#include <string>
#include <vector>

namespace corona {
namespace verify {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

CriterionResult criterion_census(int threads = 1);
CriterionResult criterion_roundtrip(int threads = 1);
CriterionResult criterion_minus();
CriterionResult criterion_sp(int threads = 1);
CriterionResult criterion_so(int threads = 1);
CriterionResult criterion_recurrences();
CriterionResult criterion_quotient();
CriterionResult criterion_inequalities();
CriterionResult criterion_bpoly();
CriterionResult criterion_tripwires(int threads = 1);

// suite names as listed above, or "all"; unknown names throw
std::vector<CriterionResult> run_suite(const std::string& name, int threads = 1);
std::vector<CriterionResult> run_all(int threads = 1);

}  // namespace verify
}  // namespace corona
