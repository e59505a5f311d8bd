// Corona graphs and their partial matchings.
//
// A corona graph on p core vertices v_i has a complete core (one edge {v_i,v_j}
// per unordered pair, or two parallel channel edges in the doubled variant)
// plus one private pendant w_i attached to each v_i.  Core labels by variant:
//   plain / double : 1..p
//   signed         : -r..-1, 1..r        (p = 2r, no 0)
//   signed0        : -r..0..r            (p = 2r+1)
// Labels are ordered as integers; an internal edge is stored with i < j.
// Canonical edge order: all pendants (by label), then all internal edges by
// (i, j, channel).  Matching streams are lexicographic in that edge order.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "corona/fieldmat.hpp"

namespace corona {
namespace matchings {

enum class Variant { Plain, Double, Signed, Signed0 };

std::string variant_name(Variant v);
Variant variant_from_name(const std::string& name);

struct GraphSpec {
    Variant variant = Variant::Plain;
    int p = 0;

    void validate() const;
    int channels() const { return variant == Variant::Double ? 2 : 1; }
    bool is_signed_family() const {
        return variant == Variant::Signed || variant == Variant::Signed0;
    }
    // core labels in increasing order
    std::vector<int> core_labels() const;
    bool operator==(const GraphSpec&) const = default;
};

struct Edge {
    bool internal = false;
    int i = 0;       // pendant: the core label; internal: smaller endpoint
    int j = 0;       // internal: larger endpoint; pendant: equals i
    int channel = 1; // 1, or 2 on the doubled core

    static Edge pendant(int i) { return Edge{false, i, i, 1}; }
    static Edge between(int i, int j, int channel = 1);

    bool touches(int core_label) const {
        return internal ? (i == core_label || j == core_label) : i == core_label;
    }
    bool is_horizontal() const { return internal && i == -j; }
    auto operator<=>(const Edge&) const = default;
};

struct Matching {
    GraphSpec spec;
    std::vector<Edge> edges;  // kept sorted in canonical edge order

    Matching() = default;
    Matching(GraphSpec spec, std::vector<Edge> edges);  // validates and sorts

    int size() const { return static_cast<int>(edges.size()); }
    bool touches(int core_label) const;
    bool contains(const Edge& e) const;
    std::vector<int> untouched_labels() const;
    bool operator==(const Matching&) const = default;
    bool operator<(const Matching& o) const { return edges < o.edges; }
};

struct Graph {
    GraphSpec spec;
    std::vector<int> core_labels;
    std::vector<Edge> edges;  // canonical order
};

Graph build_graph(const GraphSpec& spec);

// visits k-matchings in canonical (lexicographic) order; stop by returning false
void for_each_matching(const GraphSpec& spec, int k,
                       const std::function<bool(const Matching&)>& visit);
std::vector<Matching> enumerate_matchings(const GraphSpec& spec, int k);

// memoized highest-label deletion recursion; independent of any closed-form
// recurrence for the same numbers
BigInt count_matchings(const GraphSpec& spec, int k);

// plain-corona duality: keep internal edges, re-pendant exactly the untouched
// core vertices; an involution with |dual(S)| = p - |S|
Matching dual_matching(const Matching& s);

// label negation on the signed variants
Matching minus_matching(const Matching& s);

std::vector<Edge> horizontal_edges(const Matching& s);
// signed0 only: the minus-fixed pendant {v_0, w_0}, reported apart from the
// horizontal edges
std::optional<Edge> center_pendant(const Matching& s);

// signed C_{2r} minus horizontal edges, modulo label negation, is the doubled
// corona on r cores: pendant pairs descend to pendants, same-sign edge pairs
// to channel 1, mixed-sign pairs to channel 2
Matching quotient_matching(const Matching& s);
Matching lift_matching(const Matching& s);  // inverse of quotient_matching

// relabel plain positions 1..p to signed (p even) / signed0 (p odd) labels and
// back; position k maps to k-r-1 (skipping 0 when p is even, r = p/2)
Matching relabel_to_signed(const Matching& plain_matching);
Matching relabel_to_positions(const Matching& signed_matching);
int label_for_position(const GraphSpec& signed_spec, int position);
int position_for_label(const GraphSpec& signed_spec, int label);

}  // namespace matchings
}  // namespace corona
