#include "corona/roots.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace corona {
namespace roots {

std::string root_kind_name(RootKind k) {
    switch (k) {
        case RootKind::Pend: return "pend";
        case RootKind::Pair: return "pair";
        case RootKind::Free: return "free";
    }
    throw std::logic_error("unknown root kind");
}

RootKind root_kind_from_name(const std::string& name) {
    if (name == "pend") return RootKind::Pend;
    if (name == "pair") return RootKind::Pair;
    if (name == "free") return RootKind::Free;
    throw std::invalid_argument("unknown root kind: " + name);
}

AdmissibleRoot AdmissibleRoot::pair(int i, int j) {
    if (i >= j) throw std::invalid_argument("pair root requires i < j");
    return {RootKind::Pair, i, j};
}

DimVector& DimVector::operator+=(const DimVector& o) {
    if (flag.size() != o.flag.size()) throw std::invalid_argument("dimension vector length mismatch");
    for (size_t t = 0; t < flag.size(); ++t) flag[t] += o.flag[t];
    branch_a += o.branch_a;
    branch_b += o.branch_b;
    return *this;
}

static void require_sizes(int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("sizes m, n must be non-negative");
}

std::vector<AdmissibleRoot> admissible_roots(int m, int n) {
    require_sizes(m, n);
    int len = m + n;
    std::vector<AdmissibleRoot> out;
    for (int i = 1; i <= len; ++i) out.push_back(AdmissibleRoot::pend(i));
    for (int i = 1; i <= len; ++i) out.push_back(AdmissibleRoot::free_vertex(i));
    for (int i = 1; i <= len; ++i)
        for (int j = i + 1; j <= len; ++j) out.push_back(AdmissibleRoot::pair(i, j));
    return out;
}

bool is_admissible(const AdmissibleRoot& r, int m, int n) {
    int len = m + n;
    switch (r.kind) {
        case RootKind::Pend:
        case RootKind::Free: return r.i >= 1 && r.i <= len && r.j == 0;
        case RootKind::Pair: return r.i >= 1 && r.i < r.j && r.j <= len;
    }
    return false;
}

DimVector root_dimension_vector(const AdmissibleRoot& r, int m, int n) {
    require_sizes(m, n);
    if (!is_admissible(r, m, n)) throw std::invalid_argument("root not admissible at (m, n)");
    int len = m + n;
    DimVector d(len);
    switch (r.kind) {
        case RootKind::Pend:
            for (int t = r.i; t <= len; ++t) d.flag[t - 1] = 1;
            d.branch_a = 1;
            break;
        case RootKind::Free:
            for (int t = r.i; t <= len; ++t) d.flag[t - 1] = 1;
            d.branch_b = 1;
            break;
        case RootKind::Pair:
            for (int t = r.i; t <= len; ++t) d.flag[t - 1] = t < r.j ? 1 : 2;
            d.branch_a = 1;
            d.branch_b = 1;
            break;
    }
    return d;
}

DimVector target_dim_vector(int m, int n) {
    require_sizes(m, n);
    DimVector d(m + n);
    for (int t = 1; t <= m + n; ++t) d.flag[t - 1] = t;
    d.branch_a = m;
    d.branch_b = n;
    return d;
}

RootSet matching_to_rootset(const matchings::Matching& s, int m, int n) {
    require_sizes(m, n);
    if (s.spec.variant != matchings::Variant::Plain || s.spec.p != m + n)
        throw std::invalid_argument("matching must live on the plain corona with m+n cores");
    if (s.size() != m)
        throw std::invalid_argument("matching size must equal m");
    RootSet out;
    for (const matchings::Edge& e : s.edges)
        out.push_back(e.internal ? AdmissibleRoot::pair(e.i, e.j) : AdmissibleRoot::pend(e.i));
    for (int lab : s.untouched_labels()) out.push_back(AdmissibleRoot::free_vertex(lab));
    std::sort(out.begin(), out.end());
    return out;
}

matchings::Matching rootset_to_matching(const RootSet& roots, int m, int n) {
    require_sizes(m, n);
    ValidationResult v = validate_decomposition(roots, m, n);
    if (!v.ok) throw std::invalid_argument("invalid decomposition: " + v.reason);
    std::vector<matchings::Edge> edges;
    for (const AdmissibleRoot& r : roots) {
        if (r.kind == RootKind::Pend) edges.push_back(matchings::Edge::pendant(r.i));
        if (r.kind == RootKind::Pair) edges.push_back(matchings::Edge::between(r.i, r.j));
    }
    return matchings::Matching({matchings::Variant::Plain, m + n}, std::move(edges));
}

ValidationResult validate_decomposition(const RootSet& roots, int m, int n) {
    require_sizes(m, n);
    std::set<AdmissibleRoot> seen;
    for (const AdmissibleRoot& r : roots) {
        if (!seen.insert(r).second) return {false, "duplicate root"};
        if (!is_admissible(r, m, n)) return {false, "root not admissible at (m, n)"};
    }
    DimVector total(m + n);
    for (const AdmissibleRoot& r : roots) total += root_dimension_vector(r, m, n);
    if (!(total == target_dim_vector(m, n)))
        return {false, "roots do not sum to the target dimension vector"};
    return {};
}

}  // namespace roots
}  // namespace corona
