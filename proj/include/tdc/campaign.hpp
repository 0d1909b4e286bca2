#pragma once

#include "tdc/checks.hpp"
#include "tdc/families.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tdc {

enum class CheckKind {
    Formula,
    GeneralBounds,
    MiddleBounds,
    TreeTheorems,
    KnStructure,
};

std::optional<CheckKind> check_kind_from_name(const std::string& name);
std::string check_kind_name(CheckKind k);

struct CampaignSpec {
    Family family = Family::Path;
    int n_lo = 0;
    int n_hi = 0;
    std::vector<CheckKind> checks;
    std::uint64_t budget = 10'000'000;
    std::optional<std::uint64_t> seed; // tree_random only
};

struct CampaignInstance {
    std::string name;
    Graph base;
    int n = 0;
};

// deterministic (family, n, enumeration index) order
std::vector<CampaignInstance> campaign_instances(const CampaignSpec& spec);

struct CampaignResult {
    std::vector<BoundCheck> ledger;
    bool any_fail = false;
    bool any_budget = false;
};

// Workers > 1 solves instances on a small thread pool; rows are still
// emitted in instance order so output is deterministic.
CampaignResult run_verify(const CampaignSpec& spec, int workers = 1);

struct TableRow {
    std::string family;
    int n = 0;
    std::string instance;
    std::string predicted; // "-" when no closed form
    std::string solved;
    std::string match; // "yes", "no", "-"
};

struct TableResult {
    std::vector<TableRow> rows;
    bool any_mismatch = false;
    bool any_budget = false;
};

TableResult run_table(const CampaignSpec& spec, int workers = 1);

std::string table_to_csv(const std::vector<TableRow>& rows);

} // namespace tdc
