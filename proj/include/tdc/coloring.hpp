#pragma once

#include "tdc/graph.hpp"

#include <string>
#include <variant>
#include <vector>

namespace tdc {

// Proper vertex coloring as a class index per vertex; class indices are
// dense in [0, num_classes) and every class is nonempty.
struct Coloring {
    std::vector<int> class_of;
    int num_classes = 0;

    static Coloring from_classes(int order,
                                 const std::vector<std::vector<int>>& classes);
    std::vector<std::vector<int>> classes() const;
};

// A coloring plus, per vertex, a class it totally dominates: every member
// of classes()[witness[v]] is a neighbor of v.
struct TdcCertificate {
    Coloring coloring;
    std::vector<int> witness;
};

struct TotalDominatingSet {
    std::vector<int> members;
};

struct TdcViolation {
    int vertex = -1;
    std::string reason;
};

// nullptr reason: checks class indices, coverage, and no monochromatic edge
bool is_proper(const Graph& g, const Coloring& c, std::string* reason = nullptr);

// Certificate with one witness per vertex, or the first violating vertex.
// Throws if the graph has an isolated vertex (TDC undefined).
std::variant<TdcCertificate, TdcViolation> is_tdc(const Graph& g, const Coloring& c);

bool is_total_dominating(const Graph& g, const std::vector<int>& members);

// CN(cls) = vertices adjacent to every member of cls; cls must be nonempty
std::vector<int> common_neighborhood(const Graph& g, const std::vector<int>& cls);

// vertices totally dominated by class_index and by no other class
std::vector<int> private_neighbors(const Graph& g, const Coloring& c, int class_index);

bool validate_tdc_certificate(const Graph& g, const TdcCertificate& cert,
                              std::string* reason = nullptr);

} // namespace tdc
