#include "corona/matchings.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace corona {
namespace matchings {

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::Plain: return "plain";
        case Variant::Double: return "double";
        case Variant::Signed: return "signed";
        case Variant::Signed0: return "signed0";
    }
    throw std::logic_error("unknown variant");
}

Variant variant_from_name(const std::string& name) {
    if (name == "plain") return Variant::Plain;
    if (name == "double") return Variant::Double;
    if (name == "signed") return Variant::Signed;
    if (name == "signed0") return Variant::Signed0;
    throw std::invalid_argument("unknown graph variant: " + name);
}

void GraphSpec::validate() const {
    if (p < 0) throw std::invalid_argument("corona size p must be non-negative");
    if (variant == Variant::Signed && p % 2 != 0)
        throw std::invalid_argument("signed corona requires even p");
    if (variant == Variant::Signed0 && p % 2 != 1)
        throw std::invalid_argument("signed0 corona requires odd p");
}

std::vector<int> GraphSpec::core_labels() const {
    validate();
    std::vector<int> out;
    out.reserve(p);
    if (variant == Variant::Plain || variant == Variant::Double) {
        for (int i = 1; i <= p; ++i) out.push_back(i);
    } else {
        int r = p / 2;
        for (int i = -r; i <= r; ++i) {
            if (i == 0 && variant == Variant::Signed) continue;
            out.push_back(i);
        }
    }
    return out;
}

Edge Edge::between(int i, int j, int channel) {
    if (i == j) throw std::invalid_argument("internal edge endpoints must differ");
    if (i > j) std::swap(i, j);
    return Edge{true, i, j, channel};
}

namespace {

// sort key realizing the canonical order: pendants first, then internals
auto edge_key(const Edge& e) { return std::tuple(e.internal, e.i, e.j, e.channel); }

void validate_edge(const GraphSpec& spec, const Edge& e) {
    std::vector<int> labels = spec.core_labels();
    auto known = [&](int x) { return std::binary_search(labels.begin(), labels.end(), x); };
    if (!known(e.i)) throw std::invalid_argument("edge label outside graph: " + std::to_string(e.i));
    if (e.internal) {
        if (!known(e.j))
            throw std::invalid_argument("edge label outside graph: " + std::to_string(e.j));
        if (e.i >= e.j) throw std::invalid_argument("internal edge must have i < j");
        if (e.channel < 1 || e.channel > spec.channels())
            throw std::invalid_argument("edge channel outside graph variant");
    } else {
        if (e.j != e.i || e.channel != 1)
            throw std::invalid_argument("malformed pendant edge");
    }
}

}  // namespace

Matching::Matching(GraphSpec spec_, std::vector<Edge> edges_)
    : spec(spec_), edges(std::move(edges_)) {
    spec.validate();
    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return edge_key(a) < edge_key(b); });
    std::set<int> used;
    for (size_t t = 0; t < edges.size(); ++t) {
        validate_edge(spec, edges[t]);
        if (t > 0 && edges[t] == edges[t - 1])
            throw std::invalid_argument("duplicate edge in matching");
        if (!used.insert(edges[t].i).second)
            throw std::invalid_argument("matching reuses core vertex " + std::to_string(edges[t].i));
        if (edges[t].internal && !used.insert(edges[t].j).second)
            throw std::invalid_argument("matching reuses core vertex " + std::to_string(edges[t].j));
    }
}

bool Matching::touches(int core_label) const {
    return std::any_of(edges.begin(), edges.end(),
                       [&](const Edge& e) { return e.touches(core_label); });
}

bool Matching::contains(const Edge& e) const {
    return std::find(edges.begin(), edges.end(), e) != edges.end();
}

std::vector<int> Matching::untouched_labels() const {
    std::vector<int> out;
    for (int lab : spec.core_labels())
        if (!touches(lab)) out.push_back(lab);
    return out;
}

Graph build_graph(const GraphSpec& spec) {
    spec.validate();
    Graph g;
    g.spec = spec;
    g.core_labels = spec.core_labels();
    for (int lab : g.core_labels) g.edges.push_back(Edge::pendant(lab));
    for (size_t a = 0; a < g.core_labels.size(); ++a)
        for (size_t b = a + 1; b < g.core_labels.size(); ++b)
            for (int ch = 1; ch <= spec.channels(); ++ch)
                g.edges.push_back(Edge::between(g.core_labels[a], g.core_labels[b], ch));
    std::sort(g.edges.begin(), g.edges.end(),
              [](const Edge& x, const Edge& y) { return edge_key(x) < edge_key(y); });
    return g;
}

void for_each_matching(const GraphSpec& spec, int k,
                       const std::function<bool(const Matching&)>& visit) {
    if (k < 0) throw std::invalid_argument("matching size must be non-negative");
    Graph g = build_graph(spec);
    int ne = static_cast<int>(g.edges.size());
    std::vector<Edge> chosen;
    std::set<int> used;
    bool keep_going = true;

    std::function<void(int)> rec = [&](int start) {
        if (!keep_going) return;
        if (static_cast<int>(chosen.size()) == k) {
            Matching m;
            m.spec = spec;
            m.edges = chosen;  // already in canonical order by construction
            keep_going = visit(m);
            return;
        }
        int need = k - static_cast<int>(chosen.size());
        for (int t = start; t <= ne - need && keep_going; ++t) {
            const Edge& e = g.edges[t];
            if (used.count(e.i) || (e.internal && used.count(e.j))) continue;
            chosen.push_back(e);
            used.insert(e.i);
            if (e.internal) used.insert(e.j);
            rec(t + 1);
            used.erase(e.i);
            if (e.internal) used.erase(e.j);
            chosen.pop_back();
        }
    };
    rec(0);
}

std::vector<Matching> enumerate_matchings(const GraphSpec& spec, int k) {
    std::vector<Matching> out;
    for_each_matching(spec, k, [&](const Matching& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

namespace {

// count k-matchings of the sub-corona induced by the core-vertex bitmask.
// Recurse on the highest remaining vertex u: u untouched, u matched to its
// pendant, or u matched through the core to some lower remaining vertex
// (times the channel multiplicity).
BigInt count_rec(int channels, uint32_t mask, int k,
                 std::unordered_map<uint64_t, BigInt>* memo) {
    if (k < 0) return 0;
    if (mask == 0) return k == 0 ? 1 : 0;
    int popcount = __builtin_popcount(mask);
    if (k > popcount) return 0;
    if (k == 0) return 1;
    uint64_t key = (static_cast<uint64_t>(mask) << 8) | static_cast<uint64_t>(k);
    if (memo) {
        auto it = memo->find(key);
        if (it != memo->end()) return it->second;
    }
    int top = 31 - __builtin_clz(mask);
    uint32_t rest = mask & ~(1u << top);
    BigInt total = count_rec(channels, rest, k, memo) + count_rec(channels, rest, k - 1, memo);
    for (uint32_t m2 = rest; m2;) {
        int x = __builtin_ctz(m2);
        m2 &= m2 - 1;
        total += channels * count_rec(channels, rest & ~(1u << x), k - 1, memo);
    }
    if (memo) (*memo)[key] = total;
    return total;
}

}  // namespace

BigInt count_matchings(const GraphSpec& spec, int k) {
    spec.validate();
    if (k < 0) throw std::invalid_argument("matching size must be non-negative");
    if (k > spec.p) return 0;
    uint32_t full = spec.p >= 32 ? ~0u : ((1u << spec.p) - 1);
    if (spec.p <= 16) {
        std::unordered_map<uint64_t, BigInt> memo;
        return count_rec(spec.channels(), full, k, &memo);
    }
    if (spec.p > 31) throw std::invalid_argument("count_matchings supports p <= 31");
    return count_rec(spec.channels(), full, k, nullptr);
}

Matching dual_matching(const Matching& s) {
    if (s.spec.variant != Variant::Plain)
        throw std::invalid_argument("dual_matching is defined on the plain corona");
    std::vector<Edge> out;
    for (const Edge& e : s.edges)
        if (e.internal) out.push_back(e);
    for (int lab : s.untouched_labels()) out.push_back(Edge::pendant(lab));
    return Matching(s.spec, std::move(out));
}

Matching minus_matching(const Matching& s) {
    if (!s.spec.is_signed_family())
        throw std::invalid_argument("minus_matching requires a signed or signed0 corona");
    std::vector<Edge> out;
    for (const Edge& e : s.edges) {
        if (e.internal)
            out.push_back(Edge::between(-e.i, -e.j, e.channel));
        else
            out.push_back(Edge::pendant(-e.i));
    }
    return Matching(s.spec, std::move(out));
}

std::vector<Edge> horizontal_edges(const Matching& s) {
    if (!s.spec.is_signed_family())
        throw std::invalid_argument("horizontal_edges requires a signed or signed0 corona");
    std::vector<Edge> out;
    for (const Edge& e : s.edges)
        if (e.is_horizontal()) out.push_back(e);
    return out;
}

std::optional<Edge> center_pendant(const Matching& s) {
    if (s.spec.variant != Variant::Signed0)
        throw std::invalid_argument("center_pendant requires a signed0 corona");
    Edge c = Edge::pendant(0);
    if (s.contains(c)) return c;
    return std::nullopt;
}

Matching quotient_matching(const Matching& s) {
    if (s.spec.variant != Variant::Signed)
        throw std::invalid_argument("quotient_matching requires a signed corona");
    if (!(minus_matching(s) == s))
        throw std::invalid_argument("quotient_matching: matching is not minus-invariant");
    if (!horizontal_edges(s).empty())
        throw std::invalid_argument("quotient_matching: matching has a horizontal edge");
    if (s.size() % 2 != 0)
        throw std::invalid_argument("quotient_matching: matching size is odd");
    GraphSpec target{Variant::Double, s.spec.p / 2};
    std::vector<Edge> out;
    for (const Edge& e : s.edges) {
        if (!e.internal) {
            if (e.i > 0) out.push_back(Edge::pendant(e.i));  // -i carries the mirror copy
        } else if (e.i > 0 || e.j < 0) {
            if (e.i > 0) out.push_back(Edge::between(e.i, e.j, 1));  // mirror is the negative copy
        } else {
            // mixed signs: i < 0 < j; orbit {(i,j),(-j,-i)}; keep the copy with |i| > |j|
            // meaningless tie i == -j excluded by the horizontal check
            int x = -e.i, y = e.j;
            if (x > y) out.push_back(Edge::between(y, x, 2));
        }
    }
    return Matching(target, std::move(out));
}

Matching lift_matching(const Matching& s) {
    if (s.spec.variant != Variant::Double)
        throw std::invalid_argument("lift_matching requires a double corona");
    GraphSpec target{Variant::Signed, s.spec.p * 2};
    std::vector<Edge> out;
    for (const Edge& e : s.edges) {
        if (!e.internal) {
            out.push_back(Edge::pendant(e.i));
            out.push_back(Edge::pendant(-e.i));
        } else if (e.channel == 1) {
            out.push_back(Edge::between(e.i, e.j, 1));
            out.push_back(Edge::between(-e.j, -e.i, 1));
        } else {
            out.push_back(Edge::between(-e.j, e.i, 1));
            out.push_back(Edge::between(-e.i, e.j, 1));
        }
    }
    return Matching(target, std::move(out));
}

int label_for_position(const GraphSpec& signed_spec, int position) {
    if (position < 1 || position > signed_spec.p)
        throw std::invalid_argument("position outside 1..p");
    int r = signed_spec.p / 2;
    if (signed_spec.variant == Variant::Signed)
        return position <= r ? position - r - 1 : position - r;
    if (signed_spec.variant == Variant::Signed0) return position - r - 1;
    throw std::invalid_argument("label_for_position requires a signed or signed0 spec");
}

int position_for_label(const GraphSpec& signed_spec, int label) {
    int r = signed_spec.p / 2;
    if (signed_spec.variant == Variant::Signed) {
        if (label == 0 || label < -r || label > r)
            throw std::invalid_argument("label outside signed range");
        return label < 0 ? label + r + 1 : label + r;
    }
    if (signed_spec.variant == Variant::Signed0) {
        if (label < -r || label > r) throw std::invalid_argument("label outside signed0 range");
        return label + r + 1;
    }
    throw std::invalid_argument("position_for_label requires a signed or signed0 spec");
}

Matching relabel_to_signed(const Matching& plain_matching) {
    if (plain_matching.spec.variant != Variant::Plain)
        throw std::invalid_argument("relabel_to_signed expects a plain-corona matching");
    GraphSpec target{plain_matching.spec.p % 2 == 0 ? Variant::Signed : Variant::Signed0,
                     plain_matching.spec.p};
    std::vector<Edge> out;
    for (const Edge& e : plain_matching.edges) {
        if (e.internal)
            out.push_back(Edge::between(label_for_position(target, e.i),
                                        label_for_position(target, e.j), e.channel));
        else
            out.push_back(Edge::pendant(label_for_position(target, e.i)));
    }
    return Matching(target, std::move(out));
}

Matching relabel_to_positions(const Matching& signed_matching) {
    const GraphSpec& src = signed_matching.spec;
    if (!src.is_signed_family())
        throw std::invalid_argument("relabel_to_positions expects a signed-family matching");
    GraphSpec target{Variant::Plain, src.p};
    std::vector<Edge> out;
    for (const Edge& e : signed_matching.edges) {
        if (e.internal)
            out.push_back(
                Edge::between(position_for_label(src, e.i), position_for_label(src, e.j), e.channel));
        else
            out.push_back(Edge::pendant(position_for_label(src, e.i)));
    }
    return Matching(target, std::move(out));
}

}  // namespace matchings
}  // namespace corona
