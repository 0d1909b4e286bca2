#include "tdc/families.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace tdc {

std::optional<Family> family_from_name(const std::string& name) {
    static const std::map<std::string, Family> table = {
        {"path", Family::Path},
        {"cycle", Family::Cycle},
        {"star", Family::Star},
        {"double_star", Family::DoubleStar},
        {"wheel", Family::Wheel},
        {"complete", Family::Complete},
        {"friendship", Family::Friendship},
        {"tree_exhaustive", Family::TreeExhaustive},
        {"tree_random", Family::TreeRandom},
    };
    auto it = table.find(name);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::Path: return "path";
        case Family::Cycle: return "cycle";
        case Family::Star: return "star";
        case Family::DoubleStar: return "double_star";
        case Family::Wheel: return "wheel";
        case Family::Complete: return "complete";
        case Family::Friendship: return "friendship";
        case Family::TreeExhaustive: return "tree_exhaustive";
        case Family::TreeRandom: return "tree_random";
    }
    return "?";
}

void validate_spec(const FamilySpec& spec) {
    int lo;
    switch (spec.family) {
        case Family::Path: lo = 3; break;
        case Family::Cycle: lo = 3; break;
        case Family::Star: lo = 3; break;
        case Family::DoubleStar: lo = 1; break;
        case Family::Wheel: lo = 4; break;
        case Family::Complete: lo = 2; break;
        case Family::Friendship: lo = 2; break;
        case Family::TreeExhaustive:
        case Family::TreeRandom: lo = 2; break;
    }
    if (spec.n < lo)
        throw std::invalid_argument(family_name(spec.family) + " requires n >= " +
                                    std::to_string(lo));
    if (spec.family == Family::TreeExhaustive && spec.n > 10)
        throw std::invalid_argument("tree_exhaustive supports n <= 10");
}

Graph generate(const FamilySpec& spec) {
    validate_spec(spec);
    const int n = spec.n;
    switch (spec.family) {
        case Family::Path: {
            GraphBuilder b(n);
            for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
            return b.build();
        }
        case Family::Cycle: {
            GraphBuilder b(n);
            for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
            return b.build();
        }
        case Family::Star: {
            // K_{1,n}: center 0, leaves 1..n
            GraphBuilder b(n + 1);
            for (int i = 1; i <= n; ++i) b.add_edge(0, i);
            return b.build();
        }
        case Family::DoubleStar: {
            // S_{1,n,n}: center 0 adjacent to 1..n, each i adjacent to n+i
            GraphBuilder b(2 * n + 1);
            for (int i = 1; i <= n; ++i) {
                b.add_edge(0, i);
                b.add_edge(i, n + i);
            }
            return b.build();
        }
        case Family::Wheel: {
            // order n: hub 0 joined to the rim cycle 1..n-1
            GraphBuilder b(n);
            for (int i = 1; i < n; ++i) {
                b.add_edge(0, i);
                b.add_edge(i, i % (n - 1) + 1);
            }
            return b.build();
        }
        case Family::Complete: {
            GraphBuilder b(n);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) b.add_edge(i, j);
            return b.build();
        }
        case Family::Friendship: {
            // n triangles sharing vertex 0; order 2n+1
            GraphBuilder b(2 * n + 1);
            for (int i = 1; i <= 2 * n; ++i) b.add_edge(0, i);
            for (int i = 1; i <= 2 * n; i += 2) b.add_edge(i, i + 1);
            return b.build();
        }
        case Family::TreeRandom:
            return random_tree(n, spec.seed.value_or(1));
        case Family::TreeExhaustive:
            throw std::invalid_argument(
                "tree_exhaustive is a stream; use enumerate_trees");
    }
    throw std::logic_error("unreachable");
}

namespace {
int ceil_div(int a, int b) { return (a + b - 1) / b; }
}

std::optional<ClosedFormPrediction> predict_tdc_of_middle(const FamilySpec& spec) {
    validate_spec(spec);
    const int n = spec.n;
    switch (spec.family) {
        case Family::Star:
            return ClosedFormPrediction{n + 1, n + 1, "star-formula"};
        case Family::DoubleStar:
            return ClosedFormPrediction{2 * n + 1, 2 * n + 1, "double-star-formula"};
        case Family::Path: {
            int v = n <= 7 ? n : (n == 8 ? 7 : ceil_div(2 * n, 3) + 2);
            return ClosedFormPrediction{v, v, "path-formula"};
        }
        case Family::Cycle: {
            int v = n == 3 ? 4 : (n <= 5 ? n : ceil_div(2 * n, 3) + 2);
            return ClosedFormPrediction{v, v, "cycle-formula"};
        }
        case Family::Wheel: {
            int v = n == 4 ? 5 : n + 2;
            return ClosedFormPrediction{v, v, "wheel-formula"};
        }
        case Family::Complete: {
            // the two-sided bound is stated for n >= 2, but M(K_2) is a
            // complete bipartite P_3 with value 2, so only report n >= 3
            if (n < 3) return std::nullopt;
            return ClosedFormPrediction{n + 1, n + ceil_div(2 * n, 3) - 1,
                                        "complete-range"};
        }
        case Family::Friendship:
            return ClosedFormPrediction{2 * n + 2, 2 * n + 2, "friendship-formula"};
        case Family::TreeExhaustive:
        case Family::TreeRandom:
            return std::nullopt;
    }
    return std::nullopt;
}

namespace {

// canonical string of the subtree rooted at v
std::string ahu_string(const std::vector<std::vector<int>>& children, int v) {
    std::vector<std::string> parts;
    for (int c : children[v]) parts.push_back(ahu_string(children, c));
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (auto& p : parts) out += p;
    out += ")";
    return out;
}

std::string ahu_rooted_at(const Graph& g, int root) {
    int n = g.order();
    std::vector<std::vector<int>> children(n);
    std::vector<int> order{root}, parent(n, -1);
    std::vector<bool> seen(n, false);
    seen[root] = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
        int u = order[i];
        const Bitset& nb = g.neighbors(u);
        for (int v = nb.next(0); v >= 0; v = nb.next(v + 1)) {
            if (!seen[v]) {
                seen[v] = true;
                parent[v] = u;
                children[u].push_back(v);
                order.push_back(v);
            }
        }
    }
    return ahu_string(children, root);
}

std::vector<int> tree_centers(const Graph& g) {
    int n = g.order();
    if (n == 1) return {0};
    std::vector<int> deg(n), layer;
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] <= 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        remaining -= static_cast<int>(layer.size());
        for (int u : layer) {
            const Bitset& nb = g.neighbors(u);
            for (int v = nb.next(0); v >= 0; v = nb.next(v + 1))
                if (--deg[v] == 1) next.push_back(v);
            deg[u] = 0;
        }
        layer = std::move(next);
    }
    return layer;
}

// complete isomorphism invariant for free trees
std::string free_tree_canonical(const Graph& g) {
    std::string best;
    for (int c : tree_centers(g)) {
        std::string s = ahu_rooted_at(g, c);
        if (best.empty() || s < best) best = s;
    }
    return best;
}

Graph tree_from_levels(const std::vector<int>& levels) {
    int n = static_cast<int>(levels.size());
    GraphBuilder b(n);
    for (int i = 1; i < n; ++i) {
        for (int j = i - 1; j >= 0; --j) {
            if (levels[j] == levels[i] - 1) {
                b.add_edge(j, i);
                break;
            }
        }
    }
    return b.build();
}

} // namespace

std::vector<Graph> enumerate_trees(int n) {
    if (n < 2 || n > 10)
        throw std::invalid_argument("tree enumeration supports 2 <= n <= 10");

    // walk all canonical level sequences of rooted trees, keep one free
    // tree per canonical form
    std::vector<int> levels(n);
    for (int i = 0; i < n; ++i) levels[i] = i + 1;

    std::vector<Graph> out;
    std::set<std::string> seen;
    while (true) {
        Graph t = tree_from_levels(levels);
        if (seen.insert(free_tree_canonical(t)).second) out.push_back(std::move(t));

        int p = -1;
        for (int i = n - 1; i >= 1; --i)
            if (levels[i] > 2) {
                p = i;
                break;
            }
        if (p < 0) break;
        int q = -1;
        for (int i = p - 1; i >= 0; --i)
            if (levels[i] == levels[p] - 1) {
                q = i;
                break;
            }
        for (int i = p; i < n; ++i) levels[i] = levels[i - (p - q)];
    }
    return out;
}

Graph random_tree(int n, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("random tree requires n >= 2");
    if (n == 2) return GraphBuilder(2).add_edge(0, 1).build();

    std::mt19937_64 rng(seed);
    std::vector<int> pruefer(n - 2);
    for (int& x : pruefer) x = static_cast<int>(rng() % n);

    std::vector<int> deg(n, 1);
    for (int x : pruefer) ++deg[x];
    std::set<int> leaves_set;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) leaves_set.insert(v);

    GraphBuilder b(n);
    for (int x : pruefer) {
        int leaf = *leaves_set.begin();
        leaves_set.erase(leaves_set.begin());
        b.add_edge(leaf, x);
        if (--deg[x] == 1) leaves_set.insert(x);
    }
    int u = *leaves_set.begin();
    int v = *std::next(leaves_set.begin());
    b.add_edge(u, v);
    return b.build();
}

std::vector<int> leaves(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1) out.push_back(v);
    return out;
}

} // namespace tdc
