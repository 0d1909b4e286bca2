#include "tdc/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace tdc {

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(size_);
    for (int u = 0; u < order_; ++u)
        for (int v = adj_[u].next(u + 1); v >= 0; v = adj_[u].next(v + 1))
            out.emplace_back(u, v);
    return out;
}

GraphBuilder::GraphBuilder(int order) {
    if (order < 0) throw std::invalid_argument("graph order must be nonnegative");
    g_.order_ = order;
    g_.adj_.assign(order, Bitset(order));
    g_.deg_.assign(order, 0);
}

void GraphBuilder::check_vertex(int v) const {
    if (v < 0 || v >= g_.order_)
        throw std::out_of_range("vertex index out of range");
}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
    if (built_) throw std::logic_error("builder already consumed");
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    if (!g_.adj_[u].test(v)) {
        g_.adj_[u].set(v);
        g_.adj_[v].set(u);
        ++g_.deg_[u];
        ++g_.deg_[v];
        ++g_.size_;
    }
    return *this;
}

GraphBuilder& GraphBuilder::set_label(int v, std::string label) {
    if (built_) throw std::logic_error("builder already consumed");
    check_vertex(v);
    if (g_.labels_.empty()) g_.labels_.assign(g_.order_, "");
    g_.labels_[v] = std::move(label);
    return *this;
}

Graph GraphBuilder::build() {
    if (built_) throw std::logic_error("builder already consumed");
    built_ = true;
    return std::move(g_);
}

std::vector<int> open_neighborhood(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw std::out_of_range("vertex index out of range");
    return g.neighbors(v).to_vector();
}

std::pair<int, int> degree_extremes(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("degree extremes of the empty graph");
    int lo = g.degree(0), hi = g.degree(0);
    for (int v = 1; v < g.order(); ++v) {
        lo = std::min(lo, g.degree(v));
        hi = std::max(hi, g.degree(v));
    }
    return {lo, hi};
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    std::vector<int> verts = keep;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (int v : verts)
        if (v < 0 || v >= g.order())
            throw std::out_of_range("induced subgraph vertex outside parent");

    GraphBuilder b(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.adjacent(verts[i], verts[j]))
                b.add_edge(static_cast<int>(i), static_cast<int>(j));
    if (g.has_labels())
        for (std::size_t i = 0; i < verts.size(); ++i)
            b.set_label(static_cast<int>(i), g.label(verts[i]));
    return {b.build(), verts};
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(g.order(), false);
    for (int s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::deque<int> queue{s};
        seen[s] = true;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            comp.push_back(u);
            const Bitset& nb = g.neighbors(u);
            for (int v = nb.next(0); v >= 0; v = nb.next(v + 1)) {
                if (!seen[v]) {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

namespace {

// BFS eccentricity; -1 if some vertex is unreachable
int eccentricity(const Graph& g, int s) {
    std::vector<int> dist(g.order(), -1);
    std::deque<int> queue{s};
    dist[s] = 0;
    int ecc = 0, reached = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        const Bitset& nb = g.neighbors(u);
        for (int v = nb.next(0); v >= 0; v = nb.next(v + 1)) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                ecc = std::max(ecc, dist[v]);
                ++reached;
                queue.push_back(v);
            }
        }
    }
    return reached == g.order() ? ecc : -1;
}

} // namespace

std::optional<int> diameter(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("diameter of the empty graph");
    int diam = 0;
    for (int v = 0; v < g.order(); ++v) {
        int ecc = eccentricity(g, v);
        if (ecc < 0) return std::nullopt;
        diam = std::max(diam, ecc);
    }
    return diam;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    return eccentricity(g, 0) >= 0;
}

bool is_complete(const Graph& g) {
    return 2LL * g.size() == static_cast<long long>(g.order()) * (g.order() - 1);
}

bool is_complete_bipartite(const Graph& g) {
    if (g.order() < 2 || g.size() == 0 || !is_connected(g)) return false;
    // 2-color by BFS, then demand every cross pair is an edge
    std::vector<int> side(g.order(), -1);
    std::deque<int> queue{0};
    side[0] = 0;
    int count[2] = {1, 0};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        const Bitset& nb = g.neighbors(u);
        for (int v = nb.next(0); v >= 0; v = nb.next(v + 1)) {
            if (side[v] < 0) {
                side[v] = 1 - side[u];
                ++count[side[v]];
                queue.push_back(v);
            } else if (side[v] == side[u]) {
                return false;
            }
        }
    }
    return static_cast<long long>(g.size()) ==
           static_cast<long long>(count[0]) * count[1];
}

bool is_tree(const Graph& g) {
    return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    GraphBuilder builder(a.order() + b.order());
    for (auto [u, v] : a.edges()) builder.add_edge(u, v);
    for (auto [u, v] : b.edges()) builder.add_edge(a.order() + u, a.order() + v);
    return builder.build();
}

} // namespace tdc
