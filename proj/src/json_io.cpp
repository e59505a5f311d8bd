#include "corona/json_io.hpp"

#include <stdexcept>

namespace corona {
namespace json_io {

using matchings::Edge;
using matchings::GraphSpec;
using matchings::Matching;
using nlohmann::json;
using roots::AdmissibleRoot;
using roots::RootKind;

json matching_to_json(const Matching& s) {
    json edges = json::array();
    for (const Edge& e : s.edges) {
        if (e.internal)
            edges.push_back({{"kind", "internal"}, {"i", e.i}, {"j", e.j}, {"channel", e.channel}});
        else
            edges.push_back({{"kind", "pendant"}, {"i", e.i}});
    }
    return json{{"graph", {{"variant", matchings::variant_name(s.spec.variant)}, {"p", s.spec.p}}},
                {"edges", edges}};
}

Matching matching_from_json(const json& j) {
    if (!j.contains("graph") || !j.contains("edges"))
        throw std::invalid_argument("matching JSON needs \"graph\" and \"edges\"");
    GraphSpec spec{matchings::variant_from_name(j.at("graph").at("variant").get<std::string>()),
                   j.at("graph").at("p").get<int>()};
    std::vector<Edge> edges;
    for (const json& e : j.at("edges")) {
        std::string kind = e.at("kind").get<std::string>();
        if (kind == "pendant") {
            edges.push_back(Edge::pendant(e.at("i").get<int>()));
        } else if (kind == "internal") {
            edges.push_back(Edge::between(e.at("i").get<int>(), e.at("j").get<int>(),
                                          e.value("channel", 1)));
        } else {
            throw std::invalid_argument("unknown edge kind \"" + kind + "\"");
        }
    }
    return Matching(spec, std::move(edges));
}

json root_to_json(const AdmissibleRoot& r) {
    json inner{{"kind", roots::root_kind_name(r.kind)}, {"i", r.i}};
    if (r.kind == RootKind::Pair) inner["j"] = r.j;
    return json{{"root", inner}};
}

AdmissibleRoot root_from_json(const json& j) {
    const json& inner = j.contains("root") ? j.at("root") : j;
    RootKind kind = roots::root_kind_from_name(inner.at("kind").get<std::string>());
    int i = inner.at("i").get<int>();
    switch (kind) {
        case RootKind::Pend: return AdmissibleRoot::pend(i);
        case RootKind::Free: return AdmissibleRoot::free_vertex(i);
        case RootKind::Pair: return AdmissibleRoot::pair(i, inner.at("j").get<int>());
    }
    throw std::invalid_argument("unknown root kind");
}

json rootset_to_json(const roots::RootSet& rs, int m, int n) {
    json arr = json::array();
    for (const AdmissibleRoot& r : rs) arr.push_back(root_to_json(r));
    return json{{"m", m}, {"n", n}, {"roots", arr}};
}

roots::RootSet rootset_from_json(const json& j, int* m, int* n) {
    if (m) *m = j.at("m").get<int>();
    if (n) *n = j.at("n").get<int>();
    roots::RootSet rs;
    for (const json& r : j.at("roots")) rs.push_back(root_from_json(r));
    return rs;
}

json mat_to_json(const fieldmat::Mat& g) {
    json entries = json::array();
    for (int r = 0; r < g.rows(); ++r)
        for (int c = 0; c < g.cols(); ++c) entries.push_back(static_cast<int>(g.at(r, c)));
    return json{{"q", g.q()}, {"rows", g.rows()}, {"cols", g.cols()}, {"entries", entries}};
}

fieldmat::Mat mat_from_json(const json& j) {
    int q = j.at("q").get<int>();
    int rows = j.at("rows").get<int>();
    int cols = j.at("cols").get<int>();
    const json& entries = j.at("entries");
    if (static_cast<int>(entries.size()) != rows * cols)
        throw std::invalid_argument("matrix JSON entry count mismatch");
    fieldmat::Mat g(q, rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) g.set(r, c, entries.at(r * cols + c).get<int>());
    return g;
}

std::string big_string(const BigInt& v) { return v.str(); }

std::string rat_string(const BigRat& v) {
    BigInt num = boost::multiprecision::numerator(v);
    BigInt den = boost::multiprecision::denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace json_io
}  // namespace corona
