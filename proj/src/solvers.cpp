#include "tdc/solvers.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <stdexcept>

namespace tdc {

namespace {

constexpr int kMaxSolverOrder = 64;

inline int popcount(std::uint64_t x) { return __builtin_popcountll(x); }
inline int ctz(std::uint64_t x) { return __builtin_ctzll(x); }
inline std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

struct MaskGraph {
    int n = 0;
    std::uint64_t all = 0;
    std::array<std::uint64_t, kMaxSolverOrder> adj{};
    std::array<int, kMaxSolverOrder> deg{};
};

MaskGraph to_masks(const Graph& g) {
    if (g.order() > kMaxSolverOrder)
        throw std::invalid_argument("exact solvers support at most 64 vertices");
    MaskGraph mg;
    mg.n = g.order();
    mg.all = mg.n == 64 ? ~std::uint64_t{0} : (bit(mg.n) - 1);
    for (int v = 0; v < mg.n; ++v) {
        mg.deg[v] = g.degree(v);
        const Bitset& nb = g.neighbors(v);
        for (int u = nb.next(0); u >= 0; u = nb.next(u + 1)) mg.adj[v] |= bit(u);
    }
    return mg;
}

MaskGraph complement(const MaskGraph& g) {
    MaskGraph c;
    c.n = g.n;
    c.all = g.all;
    for (int v = 0; v < g.n; ++v) {
        c.adj[v] = g.all & ~g.adj[v] & ~bit(v);
        c.deg[v] = popcount(c.adj[v]);
    }
    return c;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

int ceil_div(int a, int b) { return (a + b - 1) / b; }

// ---------------------------------------------------------------------
// maximum independent set

struct MisSearch {
    const MaskGraph& G;
    std::uint64_t* nodes;
    std::uint64_t max_nodes;
    bool exhausted = false;
    int best = 0;
    std::uint64_t best_mask = 0;

    void dfs(std::uint64_t cur_mask, int cur, std::uint64_t cand) {
        if (++*nodes > max_nodes) {
            exhausted = true;
            return;
        }
        // vertices with no neighbor left in cand always go in
        std::uint64_t rest = cand;
        while (rest) {
            int v = ctz(rest);
            rest &= rest - 1;
            if ((G.adj[v] & cand) == 0) {
                cur_mask |= bit(v);
                ++cur;
                cand &= ~bit(v);
            }
        }
        if (!cand) {
            if (cur > best) {
                best = cur;
                best_mask = cur_mask;
            }
            return;
        }
        if (cur + popcount(cand) <= best) return;

        int pick = -1, pick_deg = -1;
        rest = cand;
        while (rest) {
            int v = ctz(rest);
            rest &= rest - 1;
            int d = popcount(G.adj[v] & cand);
            if (d > pick_deg) {
                pick_deg = d;
                pick = v;
            }
        }
        dfs(cur_mask | bit(pick), cur + 1, cand & ~(G.adj[pick] | bit(pick)));
        if (exhausted) return;
        dfs(cur_mask, cur, cand & ~bit(pick));
    }
};

std::pair<int, std::uint64_t> max_independent_set(const MaskGraph& g,
                                                  std::uint64_t* nodes,
                                                  std::uint64_t max_nodes,
                                                  bool* exhausted) {
    MisSearch s{g, nodes, max_nodes};
    s.dfs(0, 0, g.all);
    if (exhausted) *exhausted = s.exhausted;
    return {s.best, s.best_mask};
}

// ---------------------------------------------------------------------
// proper coloring (DSATUR greedy seed + decision search)

std::vector<int> dsatur_greedy(const MaskGraph& g, int& ncolors) {
    std::vector<int> color(g.n, -1);
    std::vector<std::uint64_t> nbcolors(g.n, 0); // colors seen in the neighborhood
    ncolors = 0;
    for (int step = 0; step < g.n; ++step) {
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < g.n; ++v) {
            if (color[v] >= 0) continue;
            int sat = popcount(nbcolors[v]);
            if (sat > pick_sat || (sat == pick_sat && g.deg[v] > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = g.deg[v];
            }
        }
        int c = ctz(~nbcolors[pick]);
        color[pick] = c;
        ncolors = std::max(ncolors, c + 1);
        std::uint64_t nb = g.adj[pick];
        while (nb) {
            int u = ctz(nb);
            nb &= nb - 1;
            nbcolors[u] |= bit(c);
        }
    }
    return color;
}

struct ColorDecision {
    const MaskGraph& G;
    int k;
    std::uint64_t* nodes;
    std::uint64_t max_nodes;
    bool exhausted = false;

    std::array<std::uint64_t, kMaxSolverOrder> cls{};
    std::array<int, kMaxSolverOrder> color{};
    std::uint64_t colored = 0;
    int used = 0;
    std::vector<int> solution;

    bool dfs() {
        if (++*nodes > max_nodes) {
            exhausted = true;
            return false;
        }
        if (colored == G.all) {
            solution.assign(color.begin(), color.begin() + G.n);
            return true;
        }
        int pick = -1, pick_sat = -1, pick_deg = -1;
        std::uint64_t unc = G.all & ~colored;
        while (unc) {
            int v = ctz(unc);
            unc &= unc - 1;
            int sat = 0;
            for (int c = 0; c < used; ++c)
                if (cls[c] & G.adj[v]) ++sat;
            if (sat == used && used == k) return false; // v cannot be colored
            if (sat > pick_sat || (sat == pick_sat && G.deg[v] > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = G.deg[v];
            }
        }
        const std::uint64_t b = bit(pick);
        for (int c = 0; c < used; ++c) {
            if (cls[c] & G.adj[pick]) continue;
            cls[c] |= b;
            color[pick] = c;
            colored |= b;
            if (dfs()) return true;
            cls[c] &= ~b;
            colored &= ~b;
            if (exhausted) return false;
        }
        if (used < k) {
            int c = used++;
            cls[c] = b;
            color[pick] = c;
            colored |= b;
            if (dfs()) return true;
            cls[c] = 0;
            colored &= ~b;
            --used;
        }
        return false;
    }
};

Coloring coloring_from_assignment(int n, const std::vector<int>& color) {
    Coloring c;
    c.class_of = color;
    c.num_classes = 0;
    for (int v = 0; v < n; ++v) c.num_classes = std::max(c.num_classes, color[v] + 1);
    return c;
}

// ---------------------------------------------------------------------
// total dominator coloring decision search
//
// State: a partial proper coloring plus, per class, an "allowed" mask of
// vertices that may still join it. A vertex v can end up totally
// dominated only by a class whose current members all lie inside N(v)
// (classes only grow), or by a class yet to be opened on an uncolored
// neighbor. When one existing class is v's last hope, it is locked to
// N(v) for the whole subtree.

struct TdcDecision {
    const MaskGraph& G;
    int k;
    std::uint64_t* nodes;
    std::uint64_t max_nodes;
    bool exhausted = false;

    std::array<std::uint64_t, kMaxSolverOrder> cls{};
    std::array<std::uint64_t, kMaxSolverOrder> allowed{};
    std::array<int, kMaxSolverOrder> color{};
    std::uint64_t colored = 0;
    int used = 0;
    std::vector<int> solution;

    bool propagate() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0; v < G.n; ++v) {
                const std::uint64_t nb = G.adj[v];
                int cand_count = 0, cand = -1;
                for (int c = 0; c < used; ++c) {
                    if ((cls[c] & ~nb) == 0) {
                        ++cand_count;
                        cand = c;
                    }
                }
                const bool new_possible = used < k && (nb & ~colored) != 0;
                if (cand_count == 0 && !new_possible) return false;
                if (cand_count == 1 && !new_possible) {
                    std::uint64_t narrowed = allowed[cand] & nb;
                    if (narrowed != allowed[cand]) {
                        allowed[cand] = narrowed;
                        changed = true;
                    }
                }
                if (color[v] < 0) {
                    bool colorable = used < k;
                    for (int c = 0; c < used && !colorable; ++c)
                        colorable = (cls[c] & nb) == 0 && (allowed[c] & bit(v));
                    if (!colorable) return false;
                }
            }
        }
        return true;
    }

    bool dfs() {
        if (++*nodes > max_nodes) {
            exhausted = true;
            return false;
        }
        std::array<std::uint64_t, kMaxSolverOrder> saved_allowed;
        std::copy(allowed.begin(), allowed.begin() + used, saved_allowed.begin());
        const int saved_used = used;

        bool result = false;
        if (propagate()) {
            if (colored == G.all) {
                solution.assign(color.begin(), color.begin() + G.n);
                return true; // propagate guarantees every vertex has a witness
            }
            result = branch();
        }
        if (!result)
            std::copy(saved_allowed.begin(), saved_allowed.begin() + saved_used,
                      allowed.begin());
        return result;
    }

    bool branch() {
        // prefer a vertex with no currently satisfiable witness class,
        // then maximum saturation, then maximum degree, then lowest index
        int pick = -1, pick_dom = 2, pick_sat = -1, pick_deg = -1;
        std::uint64_t unc = G.all & ~colored;
        while (unc) {
            int v = ctz(unc);
            unc &= unc - 1;
            int sat = 0, dom = 0;
            for (int c = 0; c < used; ++c) {
                if (cls[c] & G.adj[v]) ++sat;
                if ((cls[c] & ~G.adj[v]) == 0) dom = 1;
            }
            if (dom < pick_dom || (dom == pick_dom && (sat > pick_sat ||
                (sat == pick_sat && G.deg[v] > pick_deg)))) {
                pick = v;
                pick_dom = dom;
                pick_sat = sat;
                pick_deg = G.deg[v];
            }
        }
        const std::uint64_t b = bit(pick);
        for (int c = 0; c < used; ++c) {
            if ((cls[c] & G.adj[pick]) || !(allowed[c] & b)) continue;
            cls[c] |= b;
            color[pick] = c;
            colored |= b;
            if (dfs()) return true;
            cls[c] &= ~b;
            color[pick] = -1;
            colored &= ~b;
            if (exhausted) return false;
        }
        if (used < k) {
            int c = used++;
            cls[c] = b;
            allowed[c] = G.all;
            color[pick] = c;
            colored |= b;
            if (dfs()) return true;
            cls[c] = 0;
            color[pick] = -1;
            colored &= ~b;
            --used;
        }
        return false;
    }
};

TdcCertificate certificate_from_tdc(const Graph& g, const Coloring& c) {
    auto res = is_tdc(g, c);
    if (auto* cert = std::get_if<TdcCertificate>(&res)) return *cert;
    throw std::logic_error("search produced an invalid total dominator coloring");
}

} // namespace

int clique_number(const Graph& g) {
    if (g.order() == 0) return 0;
    std::uint64_t nodes = 0;
    MaskGraph co = complement(to_masks(g));
    return max_independent_set(co, &nodes, ~std::uint64_t{0}, nullptr).first;
}

SolveReport chromatic_number(const Graph& g, Budget budget) {
    if (g.order() == 0)
        throw std::invalid_argument("chromatic number of the empty graph");
    Timer timer;
    MaskGraph mg = to_masks(g);
    SolveReport rep;
    rep.problem = "chromatic";

    auto [alpha, alpha_mask] =
        max_independent_set(mg, &rep.nodes, ~std::uint64_t{0}, nullptr);
    int clique = max_independent_set(complement(mg), &rep.nodes, ~std::uint64_t{0},
                                     nullptr)
                     .first;
    int lb = std::max(clique, ceil_div(mg.n, alpha));
    rep.bound_trace.emplace_back("clique", clique);
    rep.bound_trace.emplace_back("class-size-count", ceil_div(mg.n, alpha));

    int greedy_colors = 0;
    std::vector<int> greedy = dsatur_greedy(mg, greedy_colors);

    rep.lower_bound = lb;
    rep.upper_bound = greedy_colors;
    for (int k = lb; k < greedy_colors; ++k) {
        if (static_cast<long long>(k) * alpha < mg.n) continue;
        ColorDecision dec{mg, k, &rep.nodes, budget.max_nodes};
        for (auto& c : dec.color) c = -1;
        if (dec.dfs()) {
            rep.optimum = k;
            rep.upper_bound = k;
            rep.coloring = coloring_from_assignment(mg.n, dec.solution);
            rep.time_ms = timer.ms();
            return rep;
        }
        if (dec.exhausted) {
            rep.proven = false;
            rep.lower_bound = k;
            rep.coloring = coloring_from_assignment(mg.n, greedy);
            rep.time_ms = timer.ms();
            return rep;
        }
        rep.lower_bound = k + 1;
    }
    rep.optimum = greedy_colors;
    rep.lower_bound = rep.upper_bound = greedy_colors;
    rep.coloring = coloring_from_assignment(mg.n, greedy);
    rep.time_ms = timer.ms();
    return rep;
}

SolveReport edge_chromatic_number(const Graph& g, Budget budget) {
    if (g.size() == 0)
        throw std::invalid_argument("edge chromatic number of an edgeless graph");
    LineGraph lg = line_graph(g);
    SolveReport rep = chromatic_number(lg.graph, budget);
    rep.problem = "edge-chromatic";
    rep.edge_labels = lg.base_edges;
    return rep;
}

SolveReport tdc_number(const Graph& g, Budget budget, const MiddleGraph* provenance) {
    if (g.order() == 0) throw std::invalid_argument("TDC undefined on the empty graph");
    if (degree_extremes(g).first < 1)
        throw std::invalid_argument("TDC undefined: minimum degree must be positive");
    Timer timer;
    MaskGraph mg = to_masks(g);
    SolveReport rep;
    rep.problem = "tdc";

    auto [alpha, alpha_mask] =
        max_independent_set(mg, &rep.nodes, ~std::uint64_t{0}, nullptr);
    int clique = max_independent_set(complement(mg), &rep.nodes, ~std::uint64_t{0},
                                     nullptr)
                     .first;
    int lb = std::max({2, clique, ceil_div(mg.n, alpha)});
    rep.bound_trace.emplace_back("clique", clique);
    rep.bound_trace.emplace_back("class-size-count", ceil_div(mg.n, alpha));
    if (provenance != nullptr) {
        int bn = provenance->base.order();
        if (bn >= 3 && is_connected(provenance->base)) {
            lb = std::max(lb, ceil_div(2 * bn, 3));
            rep.bound_trace.emplace_back("middle-two-thirds", ceil_div(2 * bn, 3));
        }
        if (bn >= 2)
            rep.bound_trace.emplace_back("middle-singletons", ceil_div(bn, 2));
    }

    // incumbent: singleton classes are always a TDC when delta >= 1
    std::vector<std::vector<int>> singleton_classes(g.order());
    for (int v = 0; v < g.order(); ++v) singleton_classes[v] = {v};
    Coloring incumbent = Coloring::from_classes(g.order(), singleton_classes);
    TdcCertificate incumbent_cert = certificate_from_tdc(g, incumbent);
    int ub = g.order();

    if (provenance != nullptr) {
        // one class per edge-vertex plus one class holding all originals
        std::vector<std::vector<int>> cs;
        std::vector<int> originals;
        for (int v = 0; v < g.order(); ++v) {
            if (provenance->labels[v].is_original())
                originals.push_back(v);
            else
                cs.push_back({v});
        }
        if (!originals.empty()) cs.push_back(originals);
        Coloring c = Coloring::from_classes(g.order(), cs);
        auto res = is_tdc(g, c);
        if (auto* cert = std::get_if<TdcCertificate>(&res)) {
            if (c.num_classes < ub) {
                ub = c.num_classes;
                incumbent_cert = *cert;
            }
        }
        rep.bound_trace.emplace_back("middle-construction", c.num_classes);
    }

    rep.lower_bound = lb;
    rep.upper_bound = ub;
    for (int k = lb; k < ub; ++k) {
        TdcDecision dec{mg, k, &rep.nodes, budget.max_nodes};
        for (auto& c : dec.color) c = -1;
        if (dec.dfs()) {
            Coloring c = coloring_from_assignment(mg.n, dec.solution);
            rep.optimum = k;
            rep.lower_bound = rep.upper_bound = k;
            rep.tdc_certificate = certificate_from_tdc(g, c);
            rep.time_ms = timer.ms();
            return rep;
        }
        if (dec.exhausted) {
            rep.proven = false;
            rep.lower_bound = k;
            rep.tdc_certificate = incumbent_cert;
            rep.time_ms = timer.ms();
            return rep;
        }
        rep.lower_bound = k + 1;
    }
    rep.optimum = ub;
    rep.lower_bound = ub;
    rep.tdc_certificate = incumbent_cert;
    rep.time_ms = timer.ms();
    return rep;
}

SolveReport tdc_number(const MiddleGraph& mg, Budget budget) {
    return tdc_number(mg.graph, budget, &mg);
}

namespace {

struct TdsSearch {
    const MaskGraph& G;
    std::uint64_t* nodes;
    std::uint64_t max_nodes;
    bool exhausted = false;
    int best;
    std::uint64_t best_set = 0;

    std::uint64_t uncovered_by(std::uint64_t chosen) const {
        std::uint64_t unc = 0;
        for (int v = 0; v < G.n; ++v)
            if ((G.adj[v] & chosen) == 0) unc |= bit(v);
        return unc;
    }

    void dfs(std::uint64_t chosen, int cnt, std::uint64_t excluded) {
        if (++*nodes > max_nodes) {
            exhausted = true;
            return;
        }
        std::uint64_t unc = uncovered_by(chosen);
        if (!unc) {
            if (cnt < best) {
                best = cnt;
                best_set = chosen;
            }
            return;
        }
        std::uint64_t avail = G.all & ~excluded & ~chosen;
        int max_cov = 0;
        std::uint64_t rest = avail;
        while (rest) {
            int u = ctz(rest);
            rest &= rest - 1;
            max_cov = std::max(max_cov, popcount(G.adj[u] & unc));
        }
        if (max_cov == 0) return;
        if (cnt + ceil_div(popcount(unc), max_cov) >= best) return;

        // cover the uncovered vertex with the fewest remaining dominators
        int pick = -1, pick_opts = kMaxSolverOrder + 1;
        rest = unc;
        while (rest) {
            int v = ctz(rest);
            rest &= rest - 1;
            int opts = popcount(G.adj[v] & avail);
            if (opts < pick_opts) {
                pick_opts = opts;
                pick = v;
            }
        }
        std::uint64_t doms = G.adj[pick] & avail;
        std::uint64_t excl = excluded;
        while (doms) {
            int u = ctz(doms);
            doms &= doms - 1;
            dfs(chosen | bit(u), cnt + 1, excl);
            if (exhausted) return;
            excl |= bit(u);
        }
    }
};

std::uint64_t greedy_tds(const MaskGraph& g) {
    std::uint64_t chosen = 0, unc = g.all;
    while (unc) {
        int pick = -1, pick_cov = -1;
        for (int u = 0; u < g.n; ++u) {
            if (chosen & bit(u)) continue;
            int cov = popcount(g.adj[u] & unc);
            if (cov > pick_cov) {
                pick_cov = cov;
                pick = u;
            }
        }
        chosen |= bit(pick);
        unc &= ~g.adj[pick];
    }
    return chosen;
}

std::vector<int> mask_to_vector(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(ctz(mask));
        mask &= mask - 1;
    }
    return out;
}

} // namespace

SolveReport total_domination_number(const Graph& g, Budget budget) {
    if (g.order() == 0)
        throw std::invalid_argument("total domination undefined on the empty graph");
    if (degree_extremes(g).first < 1)
        throw std::invalid_argument(
            "total domination undefined: minimum degree must be positive");
    Timer timer;
    MaskGraph mg = to_masks(g);
    SolveReport rep;
    rep.problem = "total-domination";

    int max_deg = degree_extremes(g).second;
    int lb = std::max(2, ceil_div(mg.n, max_deg));
    rep.bound_trace.emplace_back("coverage-count", ceil_div(mg.n, max_deg));

    std::uint64_t greedy = greedy_tds(mg);
    TdsSearch search{mg, &rep.nodes, budget.max_nodes};
    search.best = popcount(greedy);
    search.best_set = greedy;
    search.dfs(0, 0, 0);

    rep.lower_bound = search.exhausted ? lb : search.best;
    rep.upper_bound = search.best;
    rep.proven = !search.exhausted;
    if (rep.proven) rep.optimum = search.best;
    rep.members = mask_to_vector(search.best_set);
    rep.time_ms = timer.ms();
    return rep;
}

std::vector<TotalDominatingSet> min_tds_enumeration(const Graph& g, Budget budget) {
    SolveReport opt = total_domination_number(g, budget);
    if (!opt.proven)
        throw std::runtime_error("budget exhausted before the optimum was proven");
    MaskGraph mg = to_masks(g);
    const int target = opt.optimum;

    std::vector<TotalDominatingSet> out;
    std::vector<int> cur;
    // lexicographic enumeration of all TDS of minimum cardinality
    auto enumerate = [&](auto&& self, int start, int slots, std::uint64_t chosen) -> void {
        std::uint64_t unc = 0;
        for (int v = 0; v < mg.n; ++v)
            if ((mg.adj[v] & chosen) == 0) unc |= bit(v);
        if (slots == 0) {
            if (!unc) out.push_back({cur});
            return;
        }
        std::uint64_t suffix =
            start >= mg.n ? 0 : (mg.all & ~(start == 0 ? std::uint64_t{0} : bit(start) - 1));
        // every still-uncovered vertex must keep a potential dominator
        std::uint64_t rest = unc;
        int max_cov = 0;
        while (rest) {
            int v = ctz(rest);
            rest &= rest - 1;
            if ((mg.adj[v] & suffix) == 0) return;
        }
        rest = suffix;
        while (rest) {
            int u = ctz(rest);
            rest &= rest - 1;
            max_cov = std::max(max_cov, popcount(mg.adj[u] & unc));
        }
        if (slots * max_cov < popcount(unc)) return;
        for (int u = start; u < mg.n; ++u) {
            cur.push_back(u);
            self(self, u + 1, slots - 1, chosen | bit(u));
            cur.pop_back();
        }
    };
    enumerate(enumerate, 0, target, 0);
    return out;
}

SolveReport independence_number(const Graph& g, Budget budget) {
    Timer timer;
    SolveReport rep;
    rep.problem = "independence";
    if (g.order() == 0) {
        rep.optimum = rep.lower_bound = rep.upper_bound = 0;
        rep.members = std::vector<int>{};
        return rep;
    }
    MaskGraph mg = to_masks(g);
    bool exhausted = false;
    auto [alpha, mask] =
        max_independent_set(mg, &rep.nodes, budget.max_nodes, &exhausted);
    rep.proven = !exhausted;
    rep.lower_bound = alpha;
    rep.upper_bound = exhausted ? mg.n : alpha;
    if (rep.proven) rep.optimum = alpha;
    rep.members = mask_to_vector(mask);
    rep.time_ms = timer.ms();
    return rep;
}

nlohmann::json report_to_json(const SolveReport& r) {
    nlohmann::json bounds = nlohmann::json::array();
    for (const auto& [name, value] : r.bound_trace)
        bounds.push_back({{"name", name}, {"value", value}});

    nlohmann::json cert;
    if (r.tdc_certificate) {
        cert = {{"type", "tdc"},
                {"classes", r.tdc_certificate->coloring.classes()},
                {"witness", r.tdc_certificate->witness}};
    } else if (r.coloring) {
        cert = {{"type", "coloring"}, {"classes", r.coloring->classes()}};
        if (r.edge_labels) {
            nlohmann::json edges = nlohmann::json::array();
            for (auto [u, v] : *r.edge_labels) edges.push_back({u, v});
            cert["edges"] = edges;
        }
    } else if (r.members) {
        cert = {{"type", "vertex-set"}, {"members", *r.members}};
    }

    nlohmann::json out = {
        {"problem", r.problem},
        {"proven", r.proven},
        {"lower_bound", r.lower_bound},
        {"upper_bound", r.upper_bound},
        {"certificate", cert},
        {"nodes", r.nodes},
        {"bounds", bounds},
        {"time_ms", r.time_ms},
    };
    if (r.proven)
        out["optimum"] = r.optimum;
    else
        out["optimum"] = nullptr;
    return out;
}

} // namespace tdc
