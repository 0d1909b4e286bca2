#include "tdc/middle.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace tdc {

MiddleGraph middle_graph(const Graph& g) {
    if (g.order() < 1) throw std::invalid_argument("middle graph of the empty graph");
    const int n = g.order();
    auto base_edges = g.edges();
    const int m = static_cast<int>(base_edges.size());

    MiddleGraph mg;
    mg.base = g;
    mg.labels.reserve(n + m);
    for (int i = 0; i < n; ++i) mg.labels.push_back(MiddleVertexLabel::original(i));
    for (int e = 0; e < m; ++e) {
        mg.labels.push_back(MiddleVertexLabel::edge(base_edges[e].first, base_edges[e].second));
        mg.edge_index[base_edges[e]] = n + e;
    }

    GraphBuilder b(n + m);
    for (int e = 0; e < m; ++e) {
        b.add_edge(base_edges[e].first, n + e);
        b.add_edge(base_edges[e].second, n + e);
        for (int f = e + 1; f < m; ++f) {
            auto [a, c] = base_edges[e];
            auto [x, y] = base_edges[f];
            if (a == x || a == y || c == x || c == y) b.add_edge(n + e, n + f);
        }
    }
    mg.graph = b.build();
    return mg;
}

LineGraph line_graph(const Graph& g) {
    auto base_edges = g.edges();
    if (base_edges.empty()) throw std::invalid_argument("line graph of an edgeless graph");
    const int m = static_cast<int>(base_edges.size());

    GraphBuilder b(m);
    for (int e = 0; e < m; ++e)
        for (int f = e + 1; f < m; ++f) {
            auto [a, c] = base_edges[e];
            auto [x, y] = base_edges[f];
            if (a == x || a == y || c == x || c == y) b.add_edge(e, f);
        }
    return {b.build(), g, std::move(base_edges)};
}

std::vector<int> embed_line_in_middle(const MiddleGraph& mg) {
    if (mg.base.size() < 1) throw std::invalid_argument("base graph has no edges");
    std::vector<int> out;
    for (int v = 0; v < mg.graph.order(); ++v)
        if (!mg.labels[v].is_original()) out.push_back(v);
    return out;
}

nlohmann::json middle_to_json(const MiddleGraph& mg) {
    nlohmann::json labels = nlohmann::json::array();
    for (const auto& l : mg.labels) {
        if (l.is_original())
            labels.push_back({{"kind", "orig"}, {"i", l.i}});
        else
            labels.push_back({{"kind", "edge"}, {"i", l.i}, {"j", l.j}});
    }
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : mg.graph.edges()) edges.push_back({u, v});
    return {{"order", mg.graph.order()}, {"edges", edges}, {"labels", labels}};
}

} // namespace tdc
