#include "tdc/campaign.hpp"
#include "tdc/checks.hpp"
#include "tdc/families.hpp"
#include "tdc/middle.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

using namespace tdc;

namespace {

int count_status(const std::vector<BoundCheck>& rows, CheckStatus s) {
    int k = 0;
    for (const auto& r : rows)
        if (r.status == s) ++k;
    return k;
}

} // namespace

TEST_CASE("general bounds pass on middle graphs of small families") {
    Verifier v;
    for (FamilySpec s : {FamilySpec{Family::Path, 5}, FamilySpec{Family::Cycle, 5},
                         FamilySpec{Family::Star, 4}}) {
        MiddleGraph mg = middle_graph(generate(s));
        auto rows = v.general_bounds(mg.graph, "x");
        CHECK(count_status(rows, CheckStatus::Fail) == 0);
        CHECK(count_status(rows, CheckStatus::Pass) == (int)rows.size());
    }
}

TEST_CASE("general bounds reject invalid inputs") {
    Verifier v;
    GraphBuilder disconnected(4);
    disconnected.add_edge(0, 1).add_edge(2, 3);
    CHECK_THROWS(v.general_bounds(disconnected.build(), "x"));

    GraphBuilder isolated(3);
    isolated.add_edge(0, 1);
    CHECK_THROWS(v.general_bounds(isolated.build(), "x"));
}

TEST_CASE("middle bound suite on a cycle") {
    Verifier v;
    MiddleGraph mg = middle_graph(generate({Family::Cycle, 6}));
    auto rows = v.middle_bounds(mg, "M(C6)");
    CHECK(count_status(rows, CheckStatus::Fail) == 0);
    CHECK(count_status(rows, CheckStatus::Skip) == 0);
    for (const auto& r : rows) CHECK(r.instance == "M(C6)");
}

TEST_CASE("disjoint union sandwich") {
    Graph u = disjoint_union(generate({Family::Path, 3}), generate({Family::Path, 3}));
    Verifier v;
    auto rows = v.disjoint_union_bounds(u, "2xP3");
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].status == CheckStatus::Pass);
    CHECK(rows[1].status == CheckStatus::Pass);

    CHECK_THROWS(v.disjoint_union_bounds(generate({Family::Path, 4}), "P4"));
}

TEST_CASE("tree theorem suite") {
    Verifier v;
    // diameter <= 3 forces equality with the order
    auto star_rows = v.tree_theorems(generate({Family::Star, 5}), "S5");
    bool saw_equality = false;
    for (const auto& r : star_rows) {
        CHECK(r.status == CheckStatus::Pass);
        if (r.theorem == "diam3-equality") saw_equality = true;
    }
    CHECK(saw_equality);

    auto path_rows = v.tree_theorems(generate({Family::Path, 9}), "P9");
    for (const auto& r : path_rows) CHECK(r.status == CheckStatus::Pass);

    CHECK_THROWS(v.tree_theorems(generate({Family::Cycle, 4}), "C4"));
}

TEST_CASE("complete graph structure checks") {
    Verifier v;
    for (int n = 3; n <= 5; ++n) {
        auto rows = v.kn_structure(n, "K" + std::to_string(n));
        CHECK(count_status(rows, CheckStatus::Fail) == 0);
        CHECK(count_status(rows, CheckStatus::Skip) == 0);
    }
    // n = 2 skips the range checks instead of asserting a false bound
    auto rows2 = v.kn_structure(2, "K2");
    CHECK(count_status(rows2, CheckStatus::Fail) == 0);
    CHECK(count_status(rows2, CheckStatus::Skip) == 2);
    CHECK_THROWS(v.kn_structure(7, "K7"));
}

TEST_CASE("formula check flags a wrong prediction as a real failure") {
    Verifier v;
    auto good = v.formula_check({Family::Path, 6}, "M(P6)");
    REQUIRE(good.size() == 1);
    CHECK(good[0].status == CheckStatus::Pass);
    CHECK(good[0].relation == "=");
    CHECK(good[0].lhs == 6);
    CHECK(good[0].rhs == 6);
}

TEST_CASE("certificate lemmas hold for optimal middle-graph certificates") {
    Verifier v;
    for (FamilySpec s : {FamilySpec{Family::Path, 6}, FamilySpec{Family::Cycle, 5},
                         FamilySpec{Family::Star, 4},
                         FamilySpec{Family::Complete, 4}}) {
        MiddleGraph mg = middle_graph(generate(s));
        const SolveReport& rep = v.solve("tdc", mg.graph, &mg);
        REQUIRE(rep.proven);
        REQUIRE(rep.tdc_certificate.has_value());
        auto rows = v.certificate_lemmas(mg, *rep.tdc_certificate, "x");
        CHECK(count_status(rows, CheckStatus::Pass) == (int)rows.size());
    }
}

TEST_CASE("ledger rendering is stable") {
    std::vector<BoundCheck> ledger{
        {"a-check", "M(P3)", 3, 3, "=", CheckStatus::Pass, ""},
        {"b-check", "M(P3)", 3, 5, "<=", CheckStatus::Skip, "why"},
    };
    CHECK(ledger_to_csv(ledger) ==
          "theorem,instance,lhs,relation,rhs,status\n"
          "a-check,M(P3),3,=,3,pass\n"
          "b-check,M(P3),3,<=,5,skip\n");
    nlohmann::json j = ledger_to_json(ledger);
    REQUIRE(j.size() == 2);
    CHECK(j[0]["status"] == "pass");
    CHECK(j[1]["note"] == "why");
    CHECK_FALSE(j[0].contains("note"));
}

TEST_CASE("campaign verify runs a whole range") {
    CampaignSpec spec;
    spec.family = Family::Path;
    spec.n_lo = 3;
    spec.n_hi = 6;
    spec.checks = {CheckKind::Formula, CheckKind::MiddleBounds};
    auto result = run_verify(spec);
    CHECK_FALSE(result.any_fail);
    CHECK_FALSE(result.any_budget);
    CHECK(result.ledger.size() == 4 * 8); // 1 formula + 7 middle rows per n
    CHECK(result.ledger[0].instance == "M(P3)");
}

TEST_CASE("campaign expands exhaustive trees into one instance per tree") {
    CampaignSpec spec;
    spec.family = Family::TreeExhaustive;
    spec.n_lo = 5;
    spec.n_hi = 5;
    spec.checks = {CheckKind::TreeTheorems};
    auto instances = campaign_instances(spec);
    REQUIRE(instances.size() == 3);
    CHECK(instances[0].name == "T5#0");
    CHECK(instances[2].name == "T5#2");
    auto result = run_verify(spec);
    CHECK_FALSE(result.any_fail);
}

TEST_CASE("campaign table marks matches") {
    CampaignSpec spec;
    spec.family = Family::Cycle;
    spec.n_lo = 3;
    spec.n_hi = 6;
    auto result = run_table(spec);
    CHECK_FALSE(result.any_mismatch);
    REQUIRE(result.rows.size() == 4);
    CHECK(result.rows[0].predicted == "4");
    CHECK(result.rows[0].solved == "4");
    CHECK(result.rows[0].match == "yes");
    CHECK(table_to_csv(result.rows).starts_with(
        "family,n,instance,predicted,solved,match\ncycle,3,M(C3),4,4,yes\n"));
}

TEST_CASE("campaign results are identical across workers") {
    CampaignSpec spec;
    spec.family = Family::TreeExhaustive;
    spec.n_lo = 6;
    spec.n_hi = 7;
    spec.checks = {CheckKind::Formula, CheckKind::MiddleBounds,
                   CheckKind::TreeTheorems};
    auto serial = run_verify(spec, 1);
    auto parallel = run_verify(spec, 4);
    CHECK(ledger_to_csv(serial.ledger) == ledger_to_csv(parallel.ledger));
}

TEST_CASE("check kind names") {
    CHECK(check_kind_from_name("kn_structure") == CheckKind::KnStructure);
    CHECK(check_kind_from_name("middle") == CheckKind::MiddleBounds);
    CHECK_FALSE(check_kind_from_name("bogus").has_value());
    CHECK(check_kind_name(CheckKind::TreeTheorems) == "tree_theorems");
}
