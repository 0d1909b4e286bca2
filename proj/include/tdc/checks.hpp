#pragma once

#include "tdc/families.hpp"
#include "tdc/middle.hpp"
#include "tdc/solvers.hpp"

#include <nlohmann/json_fwd.hpp>

#include <map>
#include <string>
#include <vector>

namespace tdc {

enum class CheckStatus { Pass, Fail, Skip };

std::string check_status_name(CheckStatus s);

struct BoundCheck {
    std::string theorem;  // check tag, e.g. "tdc-upper-order"
    std::string instance; // graph description, e.g. "M(P5)"
    long long lhs = 0;
    long long rhs = 0;
    std::string relation; // "<=", "=", ">="
    CheckStatus status = CheckStatus::Skip;
    std::string note;
};

// Runs bound/equality checks against exact-solver output. Solve results
// are memoized per graph, so stacking several check families on the same
// instance solves each problem once.
class Verifier {
public:
    explicit Verifier(Budget budget = {}) : budget_(budget) {}

    // max{chi,gamma_t,2} <= tdc <= n, the =2 / =n characterizations, and
    // the two total-dominating-set upper bounds; g connected, delta >= 1
    std::vector<BoundCheck> general_bounds(const Graph& g, const std::string& instance);

    // middle-graph bound suite: gamma_t range, two-thirds lower bound,
    // order upper bound, alpha = n, line-graph comparison
    std::vector<BoundCheck> middle_bounds(const MiddleGraph& mg,
                                          const std::string& instance);

    // disjoint-union sandwich for graphs with >= 2 components
    std::vector<BoundCheck> disjoint_union_bounds(const Graph& g,
                                                  const std::string& instance);

    // tree upper bound, leaf lower bound, diameter-<=3 equality
    std::vector<BoundCheck> tree_theorems(const Graph& tree,
                                          const std::string& instance);

    // explicit minimum TDS of M(K_n), chi values, and the tdc range; 2<=n<=6
    std::vector<BoundCheck> kn_structure(int n, const std::string& instance);

    // closed-form prediction vs solved value for a family member
    std::vector<BoundCheck> formula_check(const FamilySpec& spec,
                                          const std::string& instance);

    // structural properties every optimal TDC of a middle graph must have
    std::vector<BoundCheck> certificate_lemmas(const MiddleGraph& mg,
                                               const TdcCertificate& cert,
                                               const std::string& instance);

    const SolveReport& solve(const std::string& problem, const Graph& g,
                             const MiddleGraph* provenance = nullptr);

    bool budget_hit() const { return budget_hit_; }
    Budget budget() const { return budget_; }

private:
    Budget budget_;
    std::map<std::string, SolveReport> memo_;
    bool budget_hit_ = false;
};

std::string ledger_to_csv(const std::vector<BoundCheck>& ledger);
nlohmann::json ledger_to_json(const std::vector<BoundCheck>& ledger);

} // namespace tdc
