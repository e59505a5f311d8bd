#include "corona/sequences.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace corona {
namespace sequences {

using matchings::Edge;
using matchings::GraphSpec;
using matchings::Matching;
using matchings::Variant;

BigInt binomial(int a, int b) {
    if (b < 0 || b > a) return 0;
    b = std::min(b, a - b);
    BigInt r = 1;
    for (int i = 0; i < b; ++i) {
        r *= a - i;
        r /= i + 1;  // exact: product of i+1 consecutive integers
    }
    return r;
}

namespace {

BigInt corona_recurrence(int p, int m, int edge_weight, std::map<std::pair<int, int>, BigInt>& memo) {
    if (m < 0 || m > p) return 0;
    if (p == 0) return 1;
    auto it = memo.find({p, m});
    if (it != memo.end()) return it->second;
    // delete core vertex v_p: unmatched pendant, matched pendant, or one of
    // the (p-1) core edges (doubled in the two-channel variant)
    BigInt val = corona_recurrence(p - 1, m, edge_weight, memo) +
                 corona_recurrence(p - 1, m - 1, edge_weight, memo);
    if (p >= 2)
        val += BigInt(edge_weight) * (p - 1) * corona_recurrence(p - 2, m - 1, edge_weight, memo);
    memo.emplace(std::pair(p, m), val);
    return val;
}

}  // namespace

BigInt a_count(int p, int m) {
    if (p < 0) throw std::invalid_argument("negative corona size");
    static std::mutex mu;
    static std::map<std::pair<int, int>, BigInt> memo;
    std::lock_guard<std::mutex> lock(mu);
    return corona_recurrence(p, m, 1, memo);
}

BigInt c_count(int p, int m) {
    if (p < 0) throw std::invalid_argument("negative corona size");
    static std::mutex mu;
    static std::map<std::pair<int, int>, BigInt> memo;
    std::lock_guard<std::mutex> lock(mu);
    return corona_recurrence(p, m, 2, memo);
}

namespace {

struct BlockSearch {
    GraphSpec spec;
    int r = 0;        // negation classes 1..r
    int target = 0;   // total edges wanted
    std::vector<bool> used;
    std::vector<Edge> edges;
    const std::function<bool(const Matching&)>* visit = nullptr;
    bool stopped = false;

    bool emit() {
        Matching s(spec, edges);
        if (!(matchings::minus_matching(s) == s))
            throw std::logic_error("block backtracker produced a non-invariant matching");
        if (!(*visit)(s)) stopped = true;
        return !stopped;
    }

    // classes processed in increasing order; cls pairs only with larger ones
    void rec(int cls, int count) {
        if (stopped) return;
        if (count == target) {
            // remaining classes stay untouched: exactly one completion
            emit();
            return;
        }
        if (cls > r || count > target) return;
        // capacity prune: every remaining class adds at most 2 edges
        int open = 0;
        for (int c = cls; c <= r; ++c)
            if (!used[c]) ++open;
        if (count + 2 * open < target) return;
        if (used[cls]) {
            rec(cls + 1, count);
            return;
        }

        // untouched
        rec(cls + 1, count);
        // pendant pair {w_c v_c}, {w_-c v_-c}
        edges.push_back(Edge::pendant(-cls));
        edges.push_back(Edge::pendant(cls));
        rec(cls + 1, count + 2);
        edges.resize(edges.size() - 2);
        // horizontal edge {v_-c, v_c}
        edges.push_back(Edge::between(-cls, cls));
        rec(cls + 1, count + 1);
        edges.pop_back();
        // internal pair with a larger class: same-sign or crossed channel
        for (int other = cls + 1; other <= r && !stopped; ++other) {
            if (used[other]) continue;
            used[other] = true;
            edges.push_back(Edge::between(-other, -cls));
            edges.push_back(Edge::between(cls, other));
            rec(cls + 1, count + 2);
            edges.resize(edges.size() - 2);
            edges.push_back(Edge::between(-other, cls));
            edges.push_back(Edge::between(-cls, other));
            rec(cls + 1, count + 2);
            edges.resize(edges.size() - 2);
            used[other] = false;
        }
    }
};

}  // namespace

void for_each_minus_invariant(const GraphSpec& spec, int k,
                              const std::function<bool(const Matching&)>& visit) {
    spec.validate();
    if (!spec.is_signed_family())
        throw std::invalid_argument("minus-invariant enumeration needs a signed corona");
    if (k < 0) return;
    BlockSearch search;
    search.spec = spec;
    search.r = spec.variant == Variant::Signed ? spec.p / 2 : (spec.p - 1) / 2;
    search.target = k;
    search.used.assign(search.r + 1, false);
    search.visit = &visit;
    search.rec(1, 0);
    if (spec.variant == Variant::Signed0 && !search.stopped) {
        // same block choices with the self-mirrored center pendant {w_0 v_0}
        search.edges.push_back(Edge::pendant(0));
        search.rec(1, 1);
    }
}

std::vector<Matching> minus_invariant_matchings(const GraphSpec& spec, int k) {
    std::vector<Matching> out;
    for_each_minus_invariant(spec, k, [&](const Matching& s) {
        out.push_back(s);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

BigInt b_enumerate(int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("negative b index");
    GraphSpec spec{Variant::Signed0, 2 * m + 2 * n + 1};
    BigInt total = 0;
    for_each_minus_invariant(spec, 2 * m, [&](const Matching&) {
        ++total;
        return true;
    });
    return total;
}

BigInt b_identity(int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("negative b index");
    // split the dual (2n+1)-matchings by center-pendant membership and the
    // number 2l (resp. 2l+1) of horizontal edges; the rest descends to the
    // doubled corona
    BigInt total = 0;
    for (int l = 0; 2 * l <= m + n && l <= n; ++l)
        total += binomial(m + n, 2 * l) * c_count(m + n - 2 * l, n - l);
    for (int l = 0; 2 * l + 1 <= m + n && l <= n; ++l)
        total += binomial(m + n, 2 * l + 1) * c_count(m + n - 2 * l - 1, n - l);
    return total;
}

BigInt b_count(int m, int n) {
    BigInt direct = b_enumerate(m, n);
    BigInt identity = b_identity(m, n);
    if (direct != identity)
        throw std::logic_error("b(" + std::to_string(m) + "," + std::to_string(n) +
                               "): direct enumeration " + direct.str() +
                               " disagrees with the identity value " + identity.str());
    return direct;
}

BigRat RationalPoly::eval(const BigRat& x) const {
    BigRat acc = 0;
    for (size_t i = coeff.size(); i-- > 0;) acc = acc * x + coeff[i];
    return acc;
}

bool RationalPoly::integral() const {
    for (const BigRat& c : coeff)
        if (boost::multiprecision::denominator(c) != 1) return false;
    return true;
}

RationalPoly lagrange_interpolate(const std::vector<std::pair<BigInt, BigInt>>& pts) {
    size_t count = pts.size();
    std::vector<BigRat> acc(count == 0 ? 1 : count, BigRat(0));
    for (size_t i = 0; i < count; ++i) {
        // basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j)
        std::vector<BigRat> basis{BigRat(1)};
        BigRat scale(pts[i].second);
        for (size_t j = 0; j < count; ++j) {
            if (j == i) continue;
            if (pts[i].first == pts[j].first)
                throw std::invalid_argument("interpolation nodes must be distinct");
            basis.push_back(0);
            for (size_t t = basis.size(); t-- > 1;)
                basis[t] = basis[t - 1] - BigRat(pts[j].first) * basis[t];
            basis[0] = -BigRat(pts[j].first) * basis[0];
            scale /= BigRat(pts[i].first) - BigRat(pts[j].first);
        }
        for (size_t t = 0; t < basis.size(); ++t) acc[t] += scale * basis[t];
    }
    while (acc.size() > 1 && acc.back() == 0) acc.pop_back();
    return RationalPoly{acc};
}

InterpolationReport interpolate_b(int n, int extra) {
    if (n < 0 || extra < 0) throw std::invalid_argument("negative interpolation parameter");
    InterpolationReport rep;
    rep.n = n;
    rep.extra = extra;
    std::vector<std::pair<BigInt, BigInt>> pts;
    for (int m = 0; m <= 2 * n + 1; ++m) pts.emplace_back(m, b_count(m, n));
    rep.poly = lagrange_interpolate(pts);
    if (rep.poly.degree() != 2 * n + 1)
        throw std::runtime_error("b interpolation at n=" + std::to_string(n) +
                                 " has degree " + std::to_string(rep.poly.degree()) +
                                 " instead of " + std::to_string(2 * n + 1));
    for (int m = 2 * n + 2; m <= 2 * n + 1 + extra; ++m) {
        BigRat value = rep.poly.eval(m);
        if (boost::multiprecision::denominator(value) != 1)
            throw std::runtime_error("b interpolation predicts a non-integer");
        rep.predicted.push_back(BigInt(boost::multiprecision::numerator(value)));
        rep.enumerated.push_back(b_count(m, n));
        if (rep.predicted.back() != rep.enumerated.back())
            throw std::runtime_error("b interpolation prediction at m=" + std::to_string(m) +
                                     " is " + rep.predicted.back().str() +
                                     " but enumeration gives " + rep.enumerated.back().str());
    }
    return rep;
}

namespace {

BigInt family_value(char family, int p, int m) {
    if (family == 'a') return a_count(p, m);
    if (family == 'c') return c_count(p, m);
    throw std::invalid_argument("sequence family must be 'a' or 'c'");
}

}  // namespace

InequalityReport check_inequalities(char family, int max_p) {
    InequalityReport rep;
    rep.family = family;
    rep.max_p = max_p;
    for (int p = 1; p <= max_p; ++p) {
        std::vector<BigInt> row(p + 1);
        for (int m = 0; m <= p; ++m) row[m] = family_value(family, p, m);
        std::string tag = std::string(1, family) + "(" + std::to_string(p) + ",";
        for (int m = 0; m <= p; ++m)
            if (row[m] != row[p - m])
                rep.violations.push_back(tag + std::to_string(m) + ") breaks symmetry");
        for (int m = 0; m + 1 <= p / 2; ++m)
            if (row[m] > row[m + 1])
                rep.violations.push_back(tag + std::to_string(m) + ") breaks unimodality");
        for (int m = 1; m < p; ++m) {
            // a^2 (1+1/m)^{-1} (1+1/(p-m))^{-1} >= a_- a_+ without rationals
            BigInt lhs = row[m] * row[m] * m * (p - m);
            BigInt rhs = row[m - 1] * row[m + 1] * (m + 1) * (p - m + 1);
            if (lhs < rhs)
                rep.violations.push_back(tag + std::to_string(m) + ") breaks ultra-log-concavity");
        }
    }
    return rep;
}

InequalityReport check_estimation(int max_p) {
    InequalityReport rep;
    rep.family = 'c';
    rep.max_p = max_p;
    for (int p = 1; p <= max_p; ++p)
        for (int k = 0; k <= p; ++k)
            if (c_count(p, k) > binomial(p * p, k))
                rep.violations.push_back("c(" + std::to_string(p) + "," + std::to_string(k) +
                                         ") exceeds the p^2-choose-k bound");
    return rep;
}

}  // namespace sequences
}  // namespace corona
