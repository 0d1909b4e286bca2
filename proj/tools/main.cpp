// tdcmid: generate graph families, build middle graphs, solve coloring and
// domination problems exactly, and check closed-form values over ranges.
//
// Exit codes: 0 ok, 1 usage/I-O, 2 budget exhausted, 3 check failure.

#include "tdc/campaign.hpp"
#include "tdc/checks.hpp"
#include "tdc/edgelist.hpp"
#include "tdc/families.hpp"
#include "tdc/middle.hpp"
#include "tdc/solvers.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBudget = 2;
constexpr int kExitCheckFail = 3;

int worker_count() {
    const char* env = std::getenv("TDC_WORKERS");
    if (!env) return 1;
    int w = std::atoi(env);
    return w >= 1 ? w : 1;
}

// "7" or "3..10" (inclusive)
bool parse_range(const std::string& text, int& lo, int& hi) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoi(text);
        } else {
            lo = std::stoi(text.substr(0, dots));
            hi = std::stoi(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        return false;
    }
    return lo <= hi;
}

tdc::Graph load_graph(const std::string& path, bool one_indexed) {
    if (path == "-") return tdc::parse_edge_list(std::cin, one_indexed);
    return tdc::parse_edge_list_file(path, one_indexed);
}

void write_output(const std::optional<std::string>& path, const std::string& text) {
    if (!path) {
        std::cout << text;
        return;
    }
    std::ofstream out(*path);
    if (!out) throw std::runtime_error("cannot open output file " + *path);
    out << text;
}

struct CampaignOptions {
    std::string family;
    std::string n_range;
    std::vector<std::string> checks;
    std::uint64_t budget = 10'000'000;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> output;
    std::string format = "csv";
    std::optional<std::string> config;
};

void add_campaign_options(CLI::App* cmd, CampaignOptions& opt, bool with_checks) {
    cmd->add_option("--family", opt.family, "family name");
    cmd->add_option("--n", opt.n_range, "n or inclusive range a..b");
    if (with_checks)
        cmd->add_option("--checks", opt.checks,
                        "formula, general_bounds, middle_bounds, tree_theorems, "
                        "kn_structure")
            ->delimiter(',');
    cmd->add_option("--budget", opt.budget, "search-node budget per solve");
    std::uint64_t seed_slot = 0;
    cmd->add_option_function<std::uint64_t>(
        "--seed", [&opt](std::uint64_t s) { opt.seed = s; },
        "seed for tree_random");
    (void)seed_slot;
    std::string out_slot;
    cmd->add_option_function<std::string>(
        "--output", [&opt](std::string p) { opt.output = std::move(p); },
        "write result to file instead of stdout");
    cmd->add_option("--format", opt.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option_function<std::string>(
        "--config", [&opt](std::string p) { opt.config = std::move(p); },
        "JSON config file; explicit flags override it");
}

// config file mirrors the campaign options; flags given on the command
// line keep priority, so only fill fields that are still empty
void apply_config(CampaignOptions& opt) {
    if (!opt.config) return;
    std::ifstream in(*opt.config);
    if (!in) throw std::runtime_error("cannot open config file " + *opt.config);
    nlohmann::json cfg = nlohmann::json::parse(in);

    if (opt.family.empty() && cfg.contains("family"))
        opt.family = cfg["family"].get<std::string>();
    if (opt.n_range.empty() && cfg.contains("n")) {
        if (cfg["n"].is_string())
            opt.n_range = cfg["n"].get<std::string>();
        else if (cfg["n"].is_array() && cfg["n"].size() == 2)
            opt.n_range = std::to_string(cfg["n"][0].get<int>()) + ".." +
                          std::to_string(cfg["n"][1].get<int>());
        else
            opt.n_range = std::to_string(cfg["n"].get<int>());
    }
    if (opt.checks.empty() && cfg.contains("checks"))
        opt.checks = cfg["checks"].get<std::vector<std::string>>();
    if (cfg.contains("budget")) opt.budget = cfg["budget"].get<std::uint64_t>();
    if (!opt.seed && cfg.contains("seed"))
        opt.seed = cfg["seed"].get<std::uint64_t>();
    if (!opt.output && cfg.contains("output"))
        opt.output = cfg["output"].get<std::string>();
    if (cfg.contains("format")) opt.format = cfg["format"].get<std::string>();
}

tdc::CampaignSpec build_campaign(const CampaignOptions& opt, bool need_checks) {
    auto family = tdc::family_from_name(opt.family);
    if (!family) throw std::runtime_error("unknown family '" + opt.family + "'");

    tdc::CampaignSpec spec;
    spec.family = *family;
    if (opt.n_range.empty() || !parse_range(opt.n_range, spec.n_lo, spec.n_hi))
        throw std::runtime_error("--n must be a value or range a..b");
    spec.budget = opt.budget;
    spec.seed = opt.seed;

    for (const auto& name : opt.checks) {
        auto kind = tdc::check_kind_from_name(name);
        if (!kind) throw std::runtime_error("unknown check '" + name + "'");
        spec.checks.push_back(*kind);
    }
    if (need_checks && spec.checks.empty())
        throw std::runtime_error("at least one --checks entry is required");
    return spec;
}

int cmd_gen(const std::string& family, int n, std::optional<std::uint64_t> seed,
            const std::optional<std::string>& out_path, bool one_indexed,
            bool as_middle) {
    auto fam = tdc::family_from_name(family);
    if (!fam) throw std::runtime_error("unknown family '" + family + "'");
    tdc::FamilySpec spec{*fam, n, seed};
    tdc::validate_spec(spec);
    tdc::Graph g = tdc::generate(spec);
    if (as_middle) g = tdc::middle_graph(g).graph;

    std::ostringstream text;
    tdc::write_edge_list(text, g, one_indexed);
    write_output(out_path, text.str());
    return kExitOk;
}

int cmd_solve(const std::string& problem, const std::string& input, bool middle,
              std::uint64_t budget, bool one_indexed) {
    tdc::Graph g = load_graph(input, one_indexed);
    tdc::Budget b{budget};

    std::optional<tdc::MiddleGraph> mg;
    if (middle) {
        mg = tdc::middle_graph(g);
        g = mg->graph;
    }

    tdc::SolveReport report;
    if (problem == "tdc")
        report = tdc::tdc_number(g, b, mg ? &*mg : nullptr);
    else if (problem == "chromatic")
        report = tdc::chromatic_number(g, b);
    else if (problem == "edge-chromatic")
        report = tdc::edge_chromatic_number(g, b);
    else if (problem == "total-domination")
        report = tdc::total_domination_number(g, b);
    else if (problem == "independence")
        report = tdc::independence_number(g, b);
    else
        throw std::runtime_error("unknown problem '" + problem + "'");

    std::cout << tdc::report_to_json(report).dump(2) << "\n";
    return report.proven ? kExitOk : kExitBudget;
}

int cmd_verify(CampaignOptions& opt) {
    apply_config(opt);
    tdc::CampaignSpec spec = build_campaign(opt, /*need_checks=*/true);
    tdc::CampaignResult result = tdc::run_verify(spec, worker_count());

    std::string rendered = opt.format == "json"
                               ? tdc::ledger_to_json(result.ledger).dump(2) + "\n"
                               : tdc::ledger_to_csv(result.ledger);
    write_output(opt.output, rendered);

    std::size_t passed = 0, failed = 0;
    const tdc::BoundCheck* first_fail = nullptr;
    for (const auto& c : result.ledger) {
        if (c.status == tdc::CheckStatus::Pass) ++passed;
        if (c.status == tdc::CheckStatus::Fail) {
            ++failed;
            if (!first_fail) first_fail = &c;
        }
    }
    if (failed == 0) {
        std::cerr << "PASS " << passed << "/" << passed << "\n";
    } else {
        std::cerr << "FAIL " << first_fail->theorem << " on " << first_fail->instance
                  << ": " << first_fail->lhs << " " << first_fail->relation << " "
                  << first_fail->rhs << " does not hold\n";
    }
    if (result.any_fail) return kExitCheckFail;
    if (result.any_budget) return kExitBudget;
    return kExitOk;
}

int cmd_table(CampaignOptions& opt) {
    apply_config(opt);
    tdc::CampaignSpec spec = build_campaign(opt, /*need_checks=*/false);
    tdc::TableResult result = tdc::run_table(spec, worker_count());

    write_output(opt.output, tdc::table_to_csv(result.rows));
    if (result.any_mismatch) return kExitCheckFail;
    if (result.any_budget) return kExitBudget;
    return kExitOk;
}

int cmd_check_cert(const std::string& input, const std::string& report_path,
                   bool middle, bool one_indexed) {
    tdc::Graph g = load_graph(input, one_indexed);
    std::optional<tdc::MiddleGraph> mg;
    if (middle) {
        mg = tdc::middle_graph(g);
        g = mg->graph;
    }

    nlohmann::json report;
    if (report_path == "-") {
        report = nlohmann::json::parse(std::cin);
    } else {
        std::ifstream in(report_path);
        if (!in) throw std::runtime_error("cannot open report file " + report_path);
        report = nlohmann::json::parse(in);
    }

    const nlohmann::json& cert = report.at("certificate");
    std::string type = cert.at("type").get<std::string>();
    std::string problem = report.at("problem").get<std::string>();
    bool proven = report.at("proven").get<bool>();
    int claimed = proven ? report.at("optimum").get<int>()
                         : report.at("upper_bound").get<int>();

    std::string failure;
    if (type == "tdc") {
        tdc::TdcCertificate tc;
        tc.coloring = tdc::Coloring::from_classes(
            g.order(), cert.at("classes").get<std::vector<std::vector<int>>>());
        tc.witness = cert.at("witness").get<std::vector<int>>();
        std::string reason;
        if (!tdc::validate_tdc_certificate(g, tc, &reason))
            failure = reason;
        else if (tc.coloring.num_classes != claimed)
            failure = "certificate uses " + std::to_string(tc.coloring.num_classes) +
                      " classes, report claims " + std::to_string(claimed);
    } else if (type == "coloring") {
        const tdc::Graph* target = &g;
        tdc::LineGraph lg;
        if (problem == "edge-chromatic") {
            lg = tdc::line_graph(g);
            target = &lg.graph;
        }
        tdc::Coloring c = tdc::Coloring::from_classes(
            target->order(), cert.at("classes").get<std::vector<std::vector<int>>>());
        std::string reason;
        if (!tdc::is_proper(*target, c, &reason))
            failure = reason;
        else if (c.num_classes != claimed)
            failure = "coloring uses " + std::to_string(c.num_classes) +
                      " classes, report claims " + std::to_string(claimed);
    } else if (type == "vertex-set") {
        auto members = cert.at("members").get<std::vector<int>>();
        if (problem == "total-domination") {
            if (!tdc::is_total_dominating(g, members))
                failure = "set is not total dominating";
        } else if (problem == "independence") {
            for (std::size_t a = 0; a < members.size() && failure.empty(); ++a)
                for (std::size_t b = a + 1; b < members.size(); ++b)
                    if (g.adjacent(members[a], members[b])) {
                        failure = "set is not independent";
                        break;
                    }
        } else {
            failure = "unknown vertex-set problem '" + problem + "'";
        }
        if (failure.empty() && static_cast<int>(members.size()) != claimed)
            failure = "set has " + std::to_string(members.size()) +
                      " members, report claims " + std::to_string(claimed);
    } else {
        throw std::runtime_error("report has no checkable certificate");
    }

    if (!failure.empty()) {
        std::cerr << "INVALID: " << failure << "\n";
        return kExitCheckFail;
    }
    std::cout << "certificate ok: " << problem << " value " << claimed << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact total dominator coloring toolkit for middle graphs"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a family member as an edge list");
    std::string gen_family;
    int gen_n = 0;
    std::optional<std::uint64_t> gen_seed;
    std::optional<std::string> gen_out;
    bool gen_one_indexed = false;
    bool gen_middle = false;
    gen->add_option("--family", gen_family, "family name")->required();
    gen->add_option("--n", gen_n, "family parameter")->required();
    gen->add_option_function<std::uint64_t>(
        "--seed", [&gen_seed](std::uint64_t s) { gen_seed = s; },
        "seed for tree_random");
    gen->add_option_function<std::string>(
        "--out", [&gen_out](std::string p) { gen_out = std::move(p); },
        "output file (default stdout)");
    gen->add_flag("--one-indexed", gen_one_indexed, "write vertices as 1..N");
    gen->add_flag("--middle", gen_middle, "emit the middle graph of the member");

    // solve
    auto* solve = app.add_subcommand("solve", "solve one problem exactly");
    std::string solve_problem, solve_input;
    bool solve_middle = false, solve_one_indexed = false;
    std::uint64_t solve_budget = 10'000'000;
    solve
        ->add_option("problem", solve_problem,
                     "tdc | chromatic | edge-chromatic | total-domination | "
                     "independence")
        ->required()
        ->check(CLI::IsMember({"tdc", "chromatic", "edge-chromatic",
                               "total-domination", "independence"}));
    solve->add_option("input", solve_input, "edge-list file, or - for stdin")
        ->required();
    solve->add_flag("--middle", solve_middle,
                    "apply the middle-graph transform before solving");
    solve->add_option("--budget", solve_budget, "search-node budget");
    solve->add_flag("--one-indexed", solve_one_indexed, "input vertices are 1..N");

    // verify
    auto* verify = app.add_subcommand("verify",
                                      "run theorem checks over a family range");
    CampaignOptions verify_opt;
    add_campaign_options(verify, verify_opt, /*with_checks=*/true);

    // table
    auto* table = app.add_subcommand("table", "predicted vs solved values as CSV");
    CampaignOptions table_opt;
    add_campaign_options(table, table_opt, /*with_checks=*/false);

    // check-cert
    auto* check = app.add_subcommand("check-cert",
                                     "re-validate a solve report certificate");
    std::string cert_input, cert_report;
    bool cert_middle = false, cert_one_indexed = false;
    check->add_option("input", cert_input, "edge-list file the report was solved on")
        ->required();
    check->add_option("report", cert_report, "solve report JSON, or - for stdin")
        ->required();
    check->add_flag("--middle", cert_middle,
                    "the report was produced with solve --middle");
    check->add_flag("--one-indexed", cert_one_indexed, "input vertices are 1..N");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed())
            return cmd_gen(gen_family, gen_n, gen_seed, gen_out, gen_one_indexed,
                           gen_middle);
        if (solve->parsed())
            return cmd_solve(solve_problem, solve_input, solve_middle, solve_budget,
                             solve_one_indexed);
        if (verify->parsed()) return cmd_verify(verify_opt);
        if (table->parsed()) return cmd_table(table_opt);
        if (check->parsed())
            return cmd_check_cert(cert_input, cert_report, cert_middle,
                                  cert_one_indexed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
