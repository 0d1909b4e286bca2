// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Run via ctest (test name "acceptance") or directly from the build dir.

#include "tdc/campaign.hpp"
#include "tdc/checks.hpp"
#include "tdc/families.hpp"
#include "tdc/middle.hpp"
#include "tdc/solvers.hpp"
#include "support/oracles.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

using namespace tdc;

namespace {

int failures = 0;

struct SolvedInstance {
    std::string name;
    MiddleGraph mg;
    TdcCertificate cert;
};

std::vector<SolvedInstance> solved; // accumulated by criteria 1-5

void report(int index, const std::string& name, bool pass, const std::string& detail,
            double seconds) {
    std::printf("criterion %d (%s): %s%s%s [%.1fs]\n", index, name.c_str(),
                pass ? "PASS" : "FAIL", detail.empty() ? "" : " - ",
                detail.c_str(), seconds);
    if (!pass) ++failures;
}

template <typename Body>
void criterion(int index, const std::string& name, Body body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool pass;
    try {
        pass = body(detail);
    } catch (const std::exception& e) {
        pass = false;
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                      .count();
    report(index, name, pass, detail, secs);
}

// Solve one family member's middle graph and compare with the expected
// value; on success the certificate is stashed for the later criteria.
bool expect_tdc(const FamilySpec& spec, const std::string& name, int expected,
                std::string& detail) {
    MiddleGraph mg = middle_graph(generate(spec));
    SolveReport rep = tdc_number(mg.graph, Budget{}, &mg);
    if (!rep.proven) {
        detail += name + ": budget exhausted; ";
        return false;
    }
    if (rep.optimum != expected) {
        detail += name + ": got " + std::to_string(rep.optimum) + ", expected " +
                  std::to_string(expected) + "; ";
        return false;
    }
    solved.push_back({name, std::move(mg), *rep.tdc_certificate});
    return true;
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

} // namespace

int main() {
    criterion(1, "path formula", [](std::string& detail) {
        bool ok = true;
        for (int n = 3; n <= 12; ++n) {
            int expected = n <= 7 ? n : (n == 8 ? 7 : ceil_div(2 * n, 3) + 2);
            ok &= expect_tdc({Family::Path, n}, "M(P" + std::to_string(n) + ")",
                             expected, detail);
        }
        return ok;
    });

    criterion(2, "cycle formula", [](std::string& detail) {
        bool ok = true;
        for (int n = 3; n <= 10; ++n) {
            int expected = n == 3 ? 4 : (n <= 5 ? n : ceil_div(2 * n, 3) + 2);
            ok &= expect_tdc({Family::Cycle, n}, "M(C" + std::to_string(n) + ")",
                             expected, detail);
        }
        return ok;
    });

    criterion(3, "star, double star, wheel, friendship formulas",
              [](std::string& detail) {
                  bool ok = true;
                  for (int n = 3; n <= 8; ++n)
                      ok &= expect_tdc({Family::Star, n},
                                       "M(S" + std::to_string(n) + ")", n + 1, detail);
                  for (int n = 1; n <= 4; ++n)
                      ok &= expect_tdc({Family::DoubleStar, n},
                                       "M(DS" + std::to_string(n) + ")", 2 * n + 1,
                                       detail);
                  for (int n = 4; n <= 7; ++n)
                      ok &= expect_tdc({Family::Wheel, n},
                                       "M(W" + std::to_string(n) + ")",
                                       n == 4 ? 5 : n + 2, detail);
                  for (int n = 2; n <= 3; ++n)
                      ok &= expect_tdc({Family::Friendship, n},
                                       "M(F" + std::to_string(n) + ")", 2 * n + 2,
                                       detail);
                  return ok;
              });

    criterion(4, "complete graphs", [](std::string& detail) {
        bool ok = true;
        for (int n = 2; n <= 6; ++n) {
            Graph kn = generate({Family::Complete, n});
            MiddleGraph mg = middle_graph(kn);
            SolveReport chi = chromatic_number(mg.graph);
            if (!chi.proven || chi.optimum != n) {
                ok = false;
                detail += "chi(M(K" + std::to_string(n) + ")) != " +
                          std::to_string(n) + "; ";
            }
        }
        for (int n = 2; n <= 7; ++n) {
            int expected = n % 2 == 0 ? n - 1 : n;
            SolveReport rep = edge_chromatic_number(generate({Family::Complete, n}));
            if (!rep.proven || rep.optimum != expected) {
                ok = false;
                detail += "edge-chromatic K" + std::to_string(n) + " wrong; ";
            }
        }
        for (int n = 3; n <= 6; ++n) {
            std::string name = "M(K" + std::to_string(n) + ")";
            MiddleGraph mg = middle_graph(generate({Family::Complete, n}));
            SolveReport rep = tdc_number(mg.graph, Budget{}, &mg);
            int lo = n + 1, hi = n + ceil_div(2 * n, 3) - 1;
            bool in_range = rep.proven
                                ? (lo <= rep.optimum && rep.optimum <= hi)
                                : (rep.lower_bound >= lo && rep.upper_bound <= hi);
            if (!in_range) {
                ok = false;
                detail += name + " outside [" + std::to_string(lo) + "," +
                          std::to_string(hi) + "]; ";
            }
            if (n == 3 && (!rep.proven || rep.optimum != 4 || lo != 4 || hi != 4)) {
                ok = false;
                detail += "M(K3) must equal 4 exactly; ";
            }
            if (rep.proven)
                solved.push_back({name, std::move(mg), *rep.tdc_certificate});
        }
        return ok;
    });

    criterion(5, "tree theorems over all trees up to order 8",
              [](std::string& detail) {
                  const int expected_counts[] = {1, 1, 2, 3, 6, 11, 23};
                  bool ok = true;
                  for (int n = 2; n <= 8; ++n) {
                      auto trees = enumerate_trees(n);
                      if ((int)trees.size() != expected_counts[n - 2]) {
                          ok = false;
                          detail += "tree count wrong at n=" + std::to_string(n) + "; ";
                          continue;
                      }
                      for (std::size_t i = 0; i < trees.size(); ++i) {
                          const Graph& t = trees[i];
                          std::string name = "M(T" + std::to_string(n) + "#" +
                                             std::to_string(i) + ")";
                          MiddleGraph mg = middle_graph(t);
                          SolveReport rep = tdc_number(mg.graph, Budget{}, &mg);
                          if (!rep.proven) {
                              ok = false;
                              detail += name + " unsolved; ";
                              continue;
                          }
                          int value = rep.optimum;
                          int nleaves = (int)leaves(t).size();
                          if (value > n) {
                              ok = false;
                              detail += name + " exceeds order; ";
                          }
                          if (n >= 3 && value < nleaves + 1) {
                              ok = false;
                              detail += name + " below leaf bound; ";
                          }
                          if (diameter(t).value() <= 3 && value != n) {
                              ok = false;
                              detail += name + " diam<=3 but value != n; ";
                          }
                          solved.push_back({name, std::move(mg),
                                            *rep.tdc_certificate});
                      }
                  }
                  return ok;
              });

    criterion(6, "structural lemmas on every optimal certificate",
              [](std::string& detail) {
                  Verifier v;
                  bool ok = true;
                  int checked = 0;
                  for (const auto& inst : solved) {
                      auto rows = v.certificate_lemmas(inst.mg, inst.cert, inst.name);
                      for (const auto& row : rows) {
                          ++checked;
                          if (row.status != CheckStatus::Pass) {
                              ok = false;
                              detail += inst.name + " " + row.theorem + "; ";
                          }
                      }
                  }
                  detail += std::to_string(checked) + " lemma checks over " +
                            std::to_string(solved.size()) + " certificates";
                  return ok;
              });

    criterion(7, "bound suite on every connected instance", [](std::string& detail) {
        Verifier v;
        bool ok = true;
        int rows_checked = 0;
        for (const auto& inst : solved) {
            if (inst.mg.base.order() < 3) continue;
            auto rows = v.middle_bounds(inst.mg, inst.name);
            auto general = v.general_bounds(inst.mg.graph, inst.name);
            rows.insert(rows.end(), general.begin(), general.end());
            for (const auto& row : rows) {
                ++rows_checked;
                if (row.status != CheckStatus::Pass) {
                    ok = false;
                    detail += inst.name + " " + row.theorem + " " +
                              check_status_name(row.status) + "; ";
                }
            }
        }
        detail += std::to_string(rows_checked) + " bound rows";
        return ok;
    });

    criterion(8, "oracle equivalence", [](std::string& detail) {
        bool ok = true;
        for (std::uint64_t seed = 1; seed <= 50; ++seed) {
            int n = 4 + (int)(seed % 5); // 4..8 vertices
            Graph g = oracle::random_connected_graph(n, seed);
            SolveReport rep = tdc_number(g);
            int expected = oracle::brute_force_tdc(g);
            if (!rep.proven || rep.optimum != expected) {
                ok = false;
                detail += "random seed " + std::to_string(seed) + ": got " +
                          std::to_string(rep.optimum) + ", oracle " +
                          std::to_string(expected) + "; ";
            }
        }
        int middles = 0;
        for (int n = 2; n <= 5; ++n) {
            for (const Graph& t : enumerate_trees(n)) {
                MiddleGraph mg = middle_graph(t);
                SolveReport rep = tdc_number(mg.graph, Budget{}, &mg);
                int expected = oracle::brute_force_tdc(mg.graph);
                ++middles;
                if (!rep.proven || rep.optimum != expected) {
                    ok = false;
                    detail += "middle tree n=" + std::to_string(n) + " mismatch; ";
                }
            }
        }
        detail += "50 random graphs + " + std::to_string(middles) + " tree middles";
        return ok;
    });

    criterion(9, "determinism", [](std::string& detail) {
        std::vector<CampaignSpec> campaigns;
        {
            CampaignSpec c;
            c.family = Family::Path;
            c.n_lo = 3;
            c.n_hi = 10;
            c.checks = {CheckKind::Formula, CheckKind::MiddleBounds,
                        CheckKind::GeneralBounds, CheckKind::TreeTheorems};
            campaigns.push_back(c);
        }
        {
            CampaignSpec c;
            c.family = Family::Complete;
            c.n_lo = 2;
            c.n_hi = 6;
            c.checks = {CheckKind::Formula, CheckKind::MiddleBounds,
                        CheckKind::KnStructure};
            campaigns.push_back(c);
        }
        {
            CampaignSpec c;
            c.family = Family::TreeExhaustive;
            c.n_lo = 2;
            c.n_hi = 7;
            c.checks = {CheckKind::MiddleBounds, CheckKind::TreeTheorems};
            campaigns.push_back(c);
        }

        for (int pass = 0; pass < 2; ++pass) {
            std::ostringstream ledgers, tables;
            for (const auto& c : campaigns) {
                ledgers << ledger_to_csv(run_verify(c, pass == 0 ? 1 : 3).ledger);
                tables << table_to_csv(run_table(c, pass == 0 ? 3 : 1).rows);
            }
            static std::string first_ledger, first_table;
            if (pass == 0) {
                first_ledger = ledgers.str();
                first_table = tables.str();
            } else {
                if (ledgers.str() != first_ledger) {
                    detail = "ledgers differ between runs";
                    return false;
                }
                if (tables.str() != first_table) {
                    detail = "tables differ between runs";
                    return false;
                }
            }
        }
        detail = "two runs (serial vs 3 workers) byte-identical";
        return true;
    });

    if (failures == 0)
        std::printf("acceptance: all 9 criteria PASS\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
