#pragma once

#include "tdc/coloring.hpp"
#include "tdc/graph.hpp"
#include "tdc/middle.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tdc {

struct Budget {
    std::uint64_t max_nodes = 10'000'000;
};

struct SolveReport {
    std::string problem;
    bool proven = true;   // false: budget exhausted, optimum unknown
    int optimum = -1;     // valid only when proven
    int lower_bound = 0;  // always valid
    int upper_bound = 0;  // always valid
    std::uint64_t nodes = 0;
    std::vector<std::pair<std::string, int>> bound_trace;
    double time_ms = 0.0;

    std::optional<TdcCertificate> tdc_certificate;
    std::optional<Coloring> coloring;          // chromatic / edge-chromatic
    std::optional<std::vector<int>> members;   // TDS / independent set
    // edge-chromatic only: line-graph vertex id -> base edge
    std::optional<std::vector<std::pair<int, int>>> edge_labels;
};

// Exact total dominator chromatic number. When provenance is given (the
// graph is M(provenance->base)), middle-graph lower bounds activate.
SolveReport tdc_number(const Graph& g, Budget budget = {},
                       const MiddleGraph* provenance = nullptr);
SolveReport tdc_number(const MiddleGraph& mg, Budget budget = {});

SolveReport chromatic_number(const Graph& g, Budget budget = {});

// chi of the line graph; certificate colors base edges
SolveReport edge_chromatic_number(const Graph& g, Budget budget = {});

SolveReport total_domination_number(const Graph& g, Budget budget = {});

// all minimum-cardinality total dominating sets, members ascending,
// sets in lexicographic order
std::vector<TotalDominatingSet> min_tds_enumeration(const Graph& g, Budget budget = {});

SolveReport independence_number(const Graph& g, Budget budget = {});

// exact clique number (used as a coloring lower bound)
int clique_number(const Graph& g);

nlohmann::json report_to_json(const SolveReport& r);

} // namespace tdc
