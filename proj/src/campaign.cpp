#include "tdc/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace tdc {

std::optional<CheckKind> check_kind_from_name(const std::string& name) {
    if (name == "formula") return CheckKind::Formula;
    if (name == "general_bounds" || name == "general") return CheckKind::GeneralBounds;
    if (name == "middle_bounds" || name == "middle") return CheckKind::MiddleBounds;
    if (name == "tree_theorems" || name == "tree") return CheckKind::TreeTheorems;
    if (name == "kn_structure" || name == "kn") return CheckKind::KnStructure;
    return std::nullopt;
}

std::string check_kind_name(CheckKind k) {
    switch (k) {
        case CheckKind::Formula: return "formula";
        case CheckKind::GeneralBounds: return "general_bounds";
        case CheckKind::MiddleBounds: return "middle_bounds";
        case CheckKind::TreeTheorems: return "tree_theorems";
        case CheckKind::KnStructure: return "kn_structure";
    }
    return "?";
}

namespace {

std::string instance_prefix(Family f) {
    switch (f) {
        case Family::Path: return "P";
        case Family::Cycle: return "C";
        case Family::Star: return "S";
        case Family::DoubleStar: return "DS";
        case Family::Wheel: return "W";
        case Family::Complete: return "K";
        case Family::Friendship: return "F";
        case Family::TreeExhaustive:
        case Family::TreeRandom: return "T";
    }
    return "?";
}

bool family_is_tree(Family f) {
    return f == Family::Path || f == Family::Star || f == Family::DoubleStar ||
           f == Family::TreeExhaustive || f == Family::TreeRandom;
}

} // namespace

std::vector<CampaignInstance> campaign_instances(const CampaignSpec& spec) {
    if (spec.n_lo > spec.n_hi)
        throw std::invalid_argument("empty n range");

    std::vector<CampaignInstance> out;
    for (int n = spec.n_lo; n <= spec.n_hi; ++n) {
        std::string stem = instance_prefix(spec.family) + std::to_string(n);
        if (spec.family == Family::TreeExhaustive) {
            validate_spec({spec.family, n});
            auto trees = enumerate_trees(n);
            for (std::size_t i = 0; i < trees.size(); ++i)
                out.push_back({stem + "#" + std::to_string(i),
                               std::move(trees[i]), n});
        } else if (spec.family == Family::TreeRandom) {
            std::uint64_t seed = spec.seed.value_or(0);
            FamilySpec fs{spec.family, n, seed};
            validate_spec(fs);
            out.push_back({stem + "@" + std::to_string(seed), generate(fs), n});
        } else {
            FamilySpec fs{spec.family, n};
            validate_spec(fs);
            out.push_back({stem, generate(fs), n});
        }
    }
    return out;
}

namespace {

// Process instances in parallel; per-instance results land in `slots`
// indexed by instance, so final output order never depends on timing.
template <typename Fn>
void for_each_instance(std::size_t count, int workers, Fn fn) {
    workers = std::max(1, workers);
    if (workers == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    auto loop = [&] {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
            fn(i);
    };
    for (int w = 0; w < workers; ++w) pool.emplace_back(loop);
    for (auto& t : pool) t.join();
}

} // namespace

CampaignResult run_verify(const CampaignSpec& spec, int workers) {
    auto instances = campaign_instances(spec);
    std::vector<std::vector<BoundCheck>> slots(instances.size());
    std::vector<char> budget_hits(instances.size(), 0);

    for_each_instance(instances.size(), workers, [&](std::size_t idx) {
        const CampaignInstance& inst = instances[idx];
        Verifier verifier(Budget{spec.budget});
        MiddleGraph mg = middle_graph(inst.base);
        std::string mid_name = "M(" + inst.name + ")";

        std::vector<BoundCheck> rows;
        auto append = [&rows](std::vector<BoundCheck> part) {
            for (auto& c : part) rows.push_back(std::move(c));
        };

        for (CheckKind kind : spec.checks) {
            switch (kind) {
                case CheckKind::Formula:
                    if (spec.family == Family::TreeExhaustive) {
                        rows.push_back({"formula", mid_name, 0, 0, "=",
                                        CheckStatus::Skip, "no closed form"});
                    } else {
                        FamilySpec fs{spec.family, inst.n, spec.seed};
                        append(verifier.formula_check(fs, mid_name));
                    }
                    break;
                case CheckKind::GeneralBounds:
                    append(verifier.general_bounds(mg.graph, mid_name));
                    break;
                case CheckKind::MiddleBounds:
                    append(verifier.middle_bounds(mg, mid_name));
                    break;
                case CheckKind::TreeTheorems:
                    if (family_is_tree(spec.family))
                        append(verifier.tree_theorems(inst.base, mid_name));
                    else
                        rows.push_back({"tree-upper", mid_name, 0, 0, "=",
                                        CheckStatus::Skip, "base is not a tree"});
                    break;
                case CheckKind::KnStructure:
                    if (spec.family == Family::Complete)
                        append(verifier.kn_structure(inst.n, mid_name));
                    else
                        rows.push_back({"kn-middle-chi", mid_name, 0, 0, "=",
                                        CheckStatus::Skip,
                                        "base is not a complete graph"});
                    break;
            }
        }
        if (verifier.budget_hit()) budget_hits[idx] = 1;
        slots[idx] = std::move(rows);
    });

    CampaignResult result;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        result.any_budget = result.any_budget || budget_hits[i];
        for (auto& c : slots[i]) {
            if (c.status == CheckStatus::Fail) result.any_fail = true;
            result.ledger.push_back(std::move(c));
        }
    }
    return result;
}

TableResult run_table(const CampaignSpec& spec, int workers) {
    auto instances = campaign_instances(spec);
    std::vector<TableRow> slots(instances.size());
    std::vector<char> mismatches(instances.size(), 0);
    std::vector<char> budget_hits(instances.size(), 0);

    for_each_instance(instances.size(), workers, [&](std::size_t idx) {
        const CampaignInstance& inst = instances[idx];
        MiddleGraph mg = middle_graph(inst.base);
        SolveReport rep = tdc_number(mg.graph, Budget{spec.budget}, &mg);

        TableRow row;
        row.family = family_name(spec.family);
        row.n = inst.n;
        row.instance = "M(" + inst.name + ")";

        std::optional<ClosedFormPrediction> pred;
        if (spec.family != Family::TreeExhaustive)
            pred = predict_tdc_of_middle({spec.family, inst.n, spec.seed});

        if (!pred) {
            row.predicted = "-";
        } else if (pred->exact()) {
            row.predicted = std::to_string(pred->lo);
        } else {
            row.predicted = "[" + std::to_string(pred->lo) + "," +
                            std::to_string(pred->hi) + "]";
        }

        if (rep.proven) {
            row.solved = std::to_string(rep.optimum);
        } else {
            row.solved = std::to_string(rep.lower_bound) + ".." +
                         std::to_string(rep.upper_bound);
            budget_hits[idx] = 1;
        }

        if (!pred) {
            row.match = "-";
        } else if (rep.proven) {
            bool ok = pred->lo <= rep.optimum && rep.optimum <= pred->hi;
            row.match = ok ? "yes" : "no";
            if (!ok) mismatches[idx] = 1;
        } else if (rep.lower_bound >= pred->lo && rep.upper_bound <= pred->hi) {
            // unproven, but the solver's interval already sits inside the
            // predicted range, so the prediction cannot be violated
            row.match = "yes";
        } else if (rep.lower_bound > pred->hi || rep.upper_bound < pred->lo) {
            row.match = "no";
            mismatches[idx] = 1;
        } else {
            row.match = "-";
        }
        slots[idx] = std::move(row);
    });

    TableResult result;
    result.rows = std::move(slots);
    for (std::size_t i = 0; i < result.rows.size(); ++i) {
        result.any_mismatch = result.any_mismatch || mismatches[i];
        result.any_budget = result.any_budget || budget_hits[i];
    }
    return result;
}

std::string table_to_csv(const std::vector<TableRow>& rows) {
    std::ostringstream out;
    out << "family,n,instance,predicted,solved,match\n";
    for (const auto& r : rows)
        out << r.family << "," << r.n << "," << r.instance << "," << r.predicted
            << "," << r.solved << "," << r.match << "\n";
    return out.str();
}

} // namespace tdc
