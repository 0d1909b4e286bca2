#pragma once

#include "tdc/bitset.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tdc {

class GraphBuilder;

// Immutable simple undirected graph on vertices 0..order-1.
class Graph {
public:
    Graph() = default;

    int order() const { return order_; }
    int size() const { return size_; }

    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    const Bitset& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return deg_[v]; }

    // all edges (u,v) with u<v, lexicographic
    std::vector<std::pair<int, int>> edges() const;

    bool has_labels() const { return !labels_.empty(); }
    const std::string& label(int v) const { return labels_[v]; }

private:
    friend class GraphBuilder;
    int order_ = 0;
    int size_ = 0;
    std::vector<Bitset> adj_;
    std::vector<int> deg_;
    std::vector<std::string> labels_;
};

// Single-owner builder; graphs are frozen once built.
class GraphBuilder {
public:
    explicit GraphBuilder(int order);

    GraphBuilder& add_edge(int u, int v);
    GraphBuilder& set_label(int v, std::string label);

    Graph build();

private:
    void check_vertex(int v) const;
    Graph g_;
    bool built_ = false;
};

std::vector<int> open_neighborhood(const Graph& g, int v);

// (min degree, max degree); throws on the empty graph
std::pair<int, int> degree_extremes(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_parent; // new vertex id -> parent vertex id
};
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& keep);

// maximal connected vertex sets, ordered by smallest member
std::vector<std::vector<int>> connected_components(const Graph& g);

// nullopt means the graph is disconnected (infinite diameter)
std::optional<int> diameter(const Graph& g);

bool is_connected(const Graph& g);
bool is_complete(const Graph& g);
bool is_complete_bipartite(const Graph& g);
bool is_tree(const Graph& g);

Graph disjoint_union(const Graph& a, const Graph& b);

} // namespace tdc
