// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <atomic>
#include <string>
#include <vector>

#include "doctest.h"
#include "drsub/errors.hpp"
#include "drsub/profit.hpp"
#include "drsub/solvers.hpp"
#include "drsub/verify.hpp"
#include "test_helpers.hpp"

using namespace drsub;
using drsub::testing::tiny_chain_instance;

namespace {

LatticePoint pt(std::vector<int> v) { return LatticePoint(std::move(v)); }

BipartiteInstance spread_only(BipartiteInstance inst) {
  for (auto& s : inst.sources) s.unit_cost = 0.0;
  return inst;
}

}  // namespace

TEST_CASE("diminishing returns holds on the tiny chain") {
  const ProfitOracle oracle(tiny_chain_instance());
  const CheckReport report = check_dr(oracle, oracle.bound());
  CHECK(report.mode == CheckMode::exhaustive);
  CHECK(report.pass());
  CHECK(report.pairs_checked == 10);  // ordered comparable pairs incl. equal
}

TEST_CASE("diminishing returns fails for a convex objective") {
  const FunctionOracle convex(
      [](const LatticePoint& x) {
        return static_cast<double>(x[0]) * static_cast<double>(x[0]);
      },
      BoundVector({3}));
  const CheckReport report = check_dr(convex, convex.bound());
  CHECK_FALSE(report.pass());
  CHECK(report.violations.front().gap > 0.0);
}

TEST_CASE("diminishing returns holds with equality for modular objectives") {
  const FunctionOracle modular(
      [](const LatticePoint& x) { return 2.0 * x[0] - 0.7 * x[1]; },
      BoundVector({4, 4}));
  CHECK(check_dr(modular, modular.bound()).pass());
  CHECK(check_lattice_submodular(modular, modular.bound()).pass());
}

TEST_CASE("lattice submodularity catches a supermodular product") {
  const FunctionOracle product(
      [](const LatticePoint& x) {
        return static_cast<double>(x[0]) * static_cast<double>(x[1]);
      },
      BoundVector({1, 1}));
  const CheckReport report = check_lattice_submodular(product, product.bound());
  REQUIRE_FALSE(report.pass());
  const PairViolation& v = report.violations.front();
  const bool expected_pair = (v.x == pt({0, 1}) && v.y == pt({1, 0})) ||
                             (v.x == pt({1, 0}) && v.y == pt({0, 1}));
  CHECK(expected_pair);
}

TEST_CASE("DR-submodular implies lattice submodular on generated instances") {
  GeneratorParams params;
  params.n_sources = 3;
  params.n_targets = 5;
  params.cap_min = 2;
  params.cap_max = 4;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    RngStream rng(seed);
    const ProfitOracle oracle(generate_instance(params, rng));
    CHECK(check_dr(oracle, oracle.bound()).pass());
    CHECK(check_lattice_submodular(oracle, oracle.bound()).pass());
  }
}

TEST_CASE("sampled mode engages above the pair limit") {
  GeneratorParams params;
  params.n_sources = 6;
  params.n_targets = 8;
  params.cap_min = 8;
  params.cap_max = 12;
  RngStream rng(3);
  const ProfitOracle oracle(generate_instance(params, rng));
  CheckOptions opts;
  opts.sample_count = 2000;
  const CheckReport report = check_dr(oracle, oracle.bound(), opts);
  CHECK(report.mode == CheckMode::sampled);
  CHECK(report.pairs_checked == 2000);
  CHECK(report.pass());

  const CheckReport lattice =
      check_lattice_submodular(oracle, oracle.bound(), opts);
  CHECK(lattice.mode == CheckMode::sampled);
  CHECK(lattice.pass());

  const MonotoneReport mono = check_nonmonotone(oracle, oracle.bound(), opts);
  CHECK(mono.witness.has_value());  // default costs make the top hurt
}

TEST_CASE("non-monotonicity witness on the tiny chain") {
  const ProfitOracle oracle(tiny_chain_instance());
  const MonotoneReport report = check_nonmonotone(oracle, oracle.bound());
  REQUIRE(report.witness.has_value());
  CHECK(report.witness->lower == pt({2}));
  CHECK(report.witness->upper == pt({3}));
  CHECK(report.witness->value_lower > report.witness->value_upper);
}

TEST_CASE("spread alone is monotone") {
  const ProfitOracle oracle(spread_only(tiny_chain_instance()));
  const MonotoneReport report = check_nonmonotone(oracle, oracle.bound());
  CHECK_FALSE(report.witness.has_value());
  CHECK(report.min_value == 0.0);
}

TEST_CASE("zero objective has no witness") {
  const FunctionOracle zero([](const LatticePoint&) { return 0.0; },
                            BoundVector({3, 3}));
  CHECK_FALSE(check_nonmonotone(zero, zero.bound()).witness.has_value());
}

TEST_CASE("query budget matches the hand-computed values") {
  CHECK(query_budget(BoundVector({3})) == 22);
  CHECK(query_budget(BoundVector(std::vector<int>(10, 1))) == 82);
}

TEST_CASE("query audit passes halving runs and rejects unit-step runs") {
  const ProfitOracle oracle(tiny_chain_instance());
  const SolveResult res = binary_search_double_greedy(oracle, RngStream(4));
  const AuditReport audit = query_audit(res, oracle.bound());
  CHECK(audit.pass);
  CHECK(audit.budget == 22);
  CHECK(audit.observed <= 22);
  REQUIRE(audit.per_coordinate.size() == 1);
  CHECK(audit.per_coordinate[0].observed <= audit.per_coordinate[0].budget);

  // A long chain: the unit baseline spends ~2B ledger entries and busts the
  // logarithmic budget, which is exactly the speedup being audited.
  BipartiteInstance chain;
  SourceNode s;
  s.name = "s0";
  s.capacity = 1024;
  double p = 0.5;
  for (int i = 0; i < 1024; ++i) {
    s.probs.push_back(p);
    p *= 0.999;
  }
  s.unit_cost = 0.01;
  chain.sources.push_back(s);
  chain.targets = {"t0"};
  chain.influencers = {{0}};
  const ProfitOracle long_oracle(chain);

  const SolveResult unit = unit_double_greedy(long_oracle, RngStream(4));
  CHECK(unit.raw_queries >= 2 * 1024);
  CHECK(unit.raw_queries <= 2 * 1024 + 1);
  CHECK_FALSE(query_audit(unit, long_oracle.bound()).pass);

  const SolveResult fast = binary_search_double_greedy(long_oracle, RngStream(4));
  CHECK(query_audit(fast, long_oracle.bound()).pass);
  CHECK(fast.raw_equivalent() * 40 < unit.raw_equivalent());
}

TEST_CASE("ratio harness: small deterministic suite has no flags") {
  RatioHarnessParams params;
  params.instances = 10;
  params.runs_per_instance = 50;
  params.seed = 11;
  const RatioReport report = ratio_harness(params);
  CHECK(report.rows.size() == 10);
  CHECK(report.flag_count() == 0);
  CHECK(report.audits_pass);
  CHECK(report.skipped.empty());
  for (const RatioRow& row : report.rows) {
    if (row.opt_defined) {
      CHECK(row.ratio_bsdg >= 0.5 - 3.0 * row.stderr_bsdg / row.opt - 1e-9);
      CHECK(row.mean_bsdg <= row.opt + 1e-9);
      CHECK(row.min_bsdg <= row.mean_bsdg + 1e-12);
    }
    CHECK(row.queries_bsdg > 0.0);
  }

  const RatioReport again = ratio_harness(params);
  CHECK(report.to_csv() == again.to_csv());
}

TEST_CASE("ratio harness reports undefined ratios when the optimum is zero") {
  RatioHarnessParams params;
  params.instances = 3;
  params.runs_per_instance = 20;
  params.seed = 5;
  params.gen.p1_min = 0.0;
  params.gen.p1_max = 0.0;  // no influence, no cost, f == 0 everywhere
  const RatioReport report = ratio_harness(params);
  REQUIRE(report.rows.size() == 3);
  for (const RatioRow& row : report.rows) {
    CHECK_FALSE(row.opt_defined);
    CHECK_FALSE(row.flag);
    CHECK(row.opt == 0.0);
  }
  CHECK(report.to_csv().find("undefined") != std::string::npos);
}

TEST_CASE("csv header is stable") {
  RatioReport empty;
  CHECK(empty.to_csv() ==
        "instance_id,n,max_B,opt,mean_bsdg,min_bsdg,mean_unit,ratio_bsdg,"
        "ratio_unit,queries_bsdg,queries_unit,negativity_seen,flag\n");
}

TEST_CASE("query sweep fits an affine curve in log2 B") {
  SweepParams params;
  params.min_exp = 4;
  params.max_exp = 9;
  params.runs = 2;
  params.seed = 7;
  const SweepReport report = query_sweep(params);
  REQUIRE(report.points.size() == 6);
  for (std::size_t i = 1; i < report.points.size(); ++i) {
    CHECK(report.points[i].queries_bsdg > report.points[i - 1].queries_bsdg);
    CHECK(report.points[i].queries_unit > 1.5 * report.points[i - 1].queries_unit);
  }
  CHECK(report.bsdg_vs_log2b.max_residual_fraction() < 0.10);
  CHECK(report.unit_vs_b.max_residual_fraction() < 0.02);

  const std::string table = report.to_table();
  CHECK(table.find("# B log2B queries_bsdg") != std::string::npos);
  CHECK(query_sweep(params).to_table() == table);
}

TEST_CASE("affine fit recovers exact lines") {
  const AffineFit fit = affine_fit({1, 2, 3, 4}, {3, 5, 7, 9});
  CHECK(fit.slope == doctest::Approx(2.0));
  CHECK(fit.intercept == doctest::Approx(1.0));
  CHECK(fit.max_residual == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_THROWS_AS(affine_fit({1}, {2}), ConfigError);
}

TEST_CASE("parallel map visits every index once and propagates errors") {
  std::vector<int> hits(500, 0);
  parallel_for_indexed(hits.size(), [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) CHECK(h == 1);

  CHECK_THROWS_AS(
      parallel_for_indexed(10,
                           [](std::size_t i) {
                             if (i == 7) throw ConfigError("boom");
                           }),
      ConfigError);
}
