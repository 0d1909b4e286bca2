#pragma once

#include "tdc/graph.hpp"

#include <nlohmann/json_fwd.hpp>

#include <map>
#include <utility>
#include <vector>

namespace tdc {

struct MiddleVertexLabel {
    enum class Kind { Original, EdgeVertex };
    Kind kind = Kind::Original;
    int i = 0;  // base vertex (Original) or smaller endpoint (EdgeVertex)
    int j = -1; // larger endpoint (EdgeVertex only)

    static MiddleVertexLabel original(int i) { return {Kind::Original, i, -1}; }
    static MiddleVertexLabel edge(int i, int j) {
        if (i > j) std::swap(i, j);
        return {Kind::EdgeVertex, i, j};
    }
    bool is_original() const { return kind == Kind::Original; }
};

// M(G) together with provenance: the base graph and the role of every
// vertex. Originals come first in base order, then edge-vertices in
// lexicographic endpoint order, so numbering is reproducible.
struct MiddleGraph {
    Graph graph;
    Graph base;
    std::vector<MiddleVertexLabel> labels;

    int original_vertex(int i) const { return i; }
    int edge_vertex(int i, int j) const {
        if (i > j) std::swap(i, j);
        return edge_index.at({i, j});
    }

    std::map<std::pair<int, int>, int> edge_index;
};

struct LineGraph {
    Graph graph;
    Graph base;
    std::vector<std::pair<int, int>> base_edges; // vertex id -> base edge
};

MiddleGraph middle_graph(const Graph& g);
LineGraph line_graph(const Graph& g);

// edge-vertex subset of M(G); inducing on it gives L(base)
std::vector<int> embed_line_in_middle(const MiddleGraph& mg);

nlohmann::json middle_to_json(const MiddleGraph& mg);

} // namespace tdc
