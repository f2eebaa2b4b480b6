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

// Executable structural checks (diminishing returns, lattice submodularity,
// monotonicity), the oracle-query auditor, and the empirical
// approximation-ratio and query-scaling harnesses.

#ifndef DRSUB_VERIFY_HPP
#define DRSUB_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "drsub/lattice.hpp"
#include "drsub/oracle.hpp"
#include "drsub/profit.hpp"
#include "drsub/solvers.hpp"

namespace drsub {

struct CheckOptions {
  double tol = 1e-9;
  std::uint64_t seed = 0;
  // Boxes whose comparable-pair count exceeds this are checked on sampled
  // pairs instead of exhaustively.
  std::uint64_t exhaustive_pair_limit = 1'000'000;
  std::uint64_t sample_count = 100'000;
};

enum class CheckMode { exhaustive, sampled };

struct PairViolation {
  LatticePoint x;
  LatticePoint y;
  CoordinateId coordinate = -1;  // -1 for the lattice (join/meet) check
  double gap = 0.0;              // amount by which the inequality failed
};

struct CheckReport {
  CheckMode mode = CheckMode::exhaustive;
  std::uint64_t pairs_checked = 0;
  std::vector<PairViolation> violations;

  bool pass() const { return violations.empty(); }
};

// Diminishing returns: f(x + chi_e) - f(x) >= f(y + chi_e) - f(y) for all
// comparable x <= y and every coordinate, up to tol.
CheckReport check_dr(const ObjectiveOracle& f, const BoundVector& bound,
                     const CheckOptions& opts = {});

// f(x) + f(y) >= f(x v y) + f(x ^ y) over (sampled) pairs of box points.
CheckReport check_lattice_submodular(const ObjectiveOracle& f,
                                     const BoundVector& bound,
                                     const CheckOptions& opts = {});

struct MonotoneWitness {
  LatticePoint lower;   // f(lower) > f(upper) + 1e-12 with lower <= upper
  LatticePoint upper;
  double value_lower = 0.0;
  double value_upper = 0.0;
};

// Scans unit steps of the box for a strict decrease; any comparable-pair
// decrease implies a unit-step decrease, so this is a complete witness
// search at box scale. Also reports the minimum value seen.
struct MonotoneReport {
  std::optional<MonotoneWitness> witness;
  double min_value = 0.0;
  LatticePoint min_point;
};

MonotoneReport check_nonmonotone(const ObjectiveOracle& f,
                                 const BoundVector& bound,
                                 const CheckOptions& opts = {});

// Budget from the logarithmic iteration structure: per coordinate, two cap
// searches cost at most 4 * ceil(log2(B+1)) raw-equivalent evaluations and
// the halving loop at most 4 * (ceil(log2 B) + 1); two more cover the final
// value recomputation.
std::uint64_t query_budget(const BoundVector& bound);

struct CoordBudgetLine {
  CoordinateId coordinate = 0;
  std::uint64_t observed = 0;
  std::uint64_t budget = 0;
};

struct AuditReport {
  bool pass = false;
  std::uint64_t observed = 0;  // raw-equivalent evaluations
  std::uint64_t budget = 0;
  std::vector<CoordBudgetLine> per_coordinate;
};

AuditReport query_audit(const SolveResult& result, const BoundVector& bound);

// ---------------------------------------------------------------------------
// Approximation-ratio harness

struct RatioHarnessParams {
  int instances = 100;
  int runs_per_instance = 200;
  std::uint64_t seed = 0;
  // Per-instance source/target counts are drawn from these ranges; the rest
  // of the generator setup comes from `gen` (its n_sources/n_targets fields
  // are overridden).
  int sources_min = 1;
  int sources_max = 4;
  int targets_min = 2;
  int targets_max = 8;
  GeneratorParams gen;
};

struct RatioRow {
  std::string instance_id;
  int n = 0;
  int max_b = 0;
  bool opt_defined = false;  // false when OPT == 0 (ratio undefined)
  double opt = 0.0;
  double mean_bsdg = 0.0;
  double min_bsdg = 0.0;
  double max_bsdg = 0.0;
  double stderr_bsdg = 0.0;
  double mean_unit = 0.0;
  double min_unit = 0.0;
  double max_unit = 0.0;
  double ratio_bsdg = 0.0;  // mean_bsdg / opt when defined
  double ratio_unit = 0.0;
  double queries_bsdg = 0.0;  // mean raw-equivalent evaluations per run
  double queries_unit = 0.0;
  bool negativity_seen = false;
  bool flag = false;  // mean ratio below 1/2 beyond the 3-sigma allowance
};

struct RatioReport {
  std::vector<RatioRow> rows;
  std::vector<std::string> skipped;  // "<id>: <reason>" guard log
  int max_coord_iterations = 0;      // worst per-coordinate loop count seen
  bool audits_pass = true;           // every run passed query_audit

  int flag_count() const;
  std::string to_csv() const;
};

// For each generated instance: OPT by exhaustive enumeration, then
// runs_per_instance seeded runs of each solver. Cells run on a deterministic
// parallel map; the report is byte-identical for a fixed seed.
RatioReport ratio_harness(const RatioHarnessParams& params);

// ---------------------------------------------------------------------------
// Query-count scaling sweep

struct SweepParams {
  int n_sources = 8;
  int n_targets = 12;
  int min_exp = 4;   // capacities B = 2^min_exp .. 2^max_exp
  int max_exp = 14;
  int runs = 3;
  std::uint64_t seed = 0;
};

struct SweepPoint {
  int cap = 0;  // B
  int log2_cap = 0;
  double queries_bsdg = 0.0;  // mean raw-equivalent per run
  double queries_unit = 0.0;
  std::uint64_t budget = 0;
};

struct AffineFit {
  double intercept = 0.0;
  double slope = 0.0;
  double max_residual = 0.0;
  double mean_value = 0.0;

  double max_residual_fraction() const {
    return mean_value > 0 ? max_residual / mean_value : 0.0;
  }
};

struct SweepReport {
  std::vector<SweepPoint> points;
  AffineFit bsdg_vs_log2b;  // queries_bsdg as a function of log2 B
  AffineFit unit_vs_b;      // queries_unit as a function of B

  std::string to_table() const;  // gnuplot-readable, '#' comments
};

// One fixed bipartite topology, capacities swept over powers of two.
SweepReport query_sweep(const SweepParams& params);

// Least-squares line through (xs, ys).
AffineFit affine_fit(const std::vector<double>& xs,
                     const std::vector<double>& ys);

// Deterministic parallel map: runs fn(i) for i in [0, count) on a few
// workers; any scheduling yields the same results because cells only write
// their own slot.
void parallel_for_indexed(std::size_t count,
                          const std::function<void(std::size_t)>& fn);

}  // namespace drsub

#endif  // DRSUB_VERIFY_HPP
