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

// Command-line front end: instance generation, solving, structural
// verification and benchmarking, all reproducible from a single --seed.
//
// Exit codes: 0 success, 1 verification failure, 2 input/config error,
// 3 resource guard.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "drsub/errors.hpp"
#include "drsub/instance_io.hpp"
#include "drsub/profit.hpp"
#include "drsub/solvers.hpp"
#include "drsub/verify.hpp"
#include "json.hpp"

namespace {

using namespace drsub;
using nlohmann::json;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResourceGuard = 3;

struct GenOptions {
  GeneratorParams params;
  std::uint64_t seed = 0;
  std::string output;
};

struct SolveOptions {
  std::string instance_path;
  std::string algorithm = "bsdg";
  std::uint64_t seed = 0;
  std::string output;
};

struct VerifyOptions {
  std::string instance_path;
  std::uint64_t seed = 0;
  std::uint64_t mc_trials = 100000;
};

struct BenchOptions {
  std::uint64_t seed = 0;
  int instances = 100;
  int runs = 200;
  std::string output;
  bool sweep = true;
  std::string sweep_output;
  int sweep_min_exp = 4;
  int sweep_max_exp = 14;
  int sweep_runs = 3;
};

std::string clamp_name(ClampKind clamp) {
  switch (clamp) {
    case ClampKind::upper_cap: return "u";
    case ClampKind::lower_cap: return "v";
    default: return "none";
  }
}

json trace_to_json(const std::vector<CoordTrace>& trace) {
  json arr = json::array();
  for (const CoordTrace& tr : trace) {
    arr.push_back({{"coordinate", tr.coordinate},
                   {"iterations", tr.iterations},
                   {"u_cap", tr.u_cap},
                   {"v_cap", tr.v_cap},
                   {"u_probes", tr.u_probes},
                   {"v_probes", tr.v_probes},
                   {"clamp_applied", clamp_name(tr.clamp)}});
  }
  return arr;
}

json levels_to_json(const BipartiteInstance& inst, const LatticePoint& m) {
  json levels = json::object();
  for (std::size_t s = 0; s < inst.n_sources(); ++s) {
    levels[inst.sources[s].name] = m[s];
  }
  return levels;
}

int run_gen(const GenOptions& opts) {
  RngStream rng = RngStream(opts.seed).substream("gen");
  const BipartiteInstance inst = generate_instance(opts.params, rng);
  write_text_file(opts.output, serialize_instance(inst));
  std::printf("sources=%zu targets=%zu edges=%zu max_capacity=%d\n",
              inst.n_sources(), inst.n_targets(), inst.n_edges(),
              inst.n_sources() ? inst.capacities().max_cap() : 0);
  return 0;
}

int run_solve(const SolveOptions& opts) {
  const BipartiteInstance inst = load_instance_file(opts.instance_path);
  const ProfitOracle oracle(inst);

  LatticePoint solution;
  double value = 0.0;
  std::uint64_t raw_queries = 0;
  std::uint64_t fused_queries = 0;
  json trace = json::array();

  if (opts.algorithm == "bsdg" || opts.algorithm == "unit") {
    const RngStream solver_rng = RngStream(opts.seed).substream("solve");
    const SolveResult res =
        opts.algorithm == "bsdg"
            ? binary_search_double_greedy(oracle, solver_rng)
            : unit_double_greedy(oracle, solver_rng);
    solution = res.solution;
    value = res.value;
    raw_queries = res.raw_queries;
    fused_queries = res.fused_queries;
    trace = trace_to_json(res.trace);
  } else if (opts.algorithm == "exhaustive") {
    const ExhaustiveResult res = exhaustive_optimum(oracle);
    solution = res.argmax;
    value = res.value;
    raw_queries = res.points_enumerated;
  } else {
    throw ConfigError("unknown algorithm: " + opts.algorithm);
  }

  if (!opts.output.empty()) {
    const json doc = {{"levels", levels_to_json(inst, solution)},
                      {"value", value},
                      {"raw_queries", raw_queries},
                      {"fused_queries", fused_queries},
                      {"raw_equivalent_queries", raw_queries + fused_queries},
                      {"seed", opts.seed},
                      {"trace", trace}};
    write_text_file(opts.output, doc.dump(2) + "\n");
  }
  std::printf("value=%.12g queries=%llu seed=%llu\n", value,
              static_cast<unsigned long long>(raw_queries),
              static_cast<unsigned long long>(opts.seed));
  return 0;
}

std::string point_string(const LatticePoint& x) {
  std::string out = "(";
  for (std::size_t e = 0; e < x.size(); ++e) {
    if (e) out += ",";
    out += std::to_string(x[e]);
  }
  return out + ")";
}

void print_violations(const CheckReport& report) {
  const std::size_t shown = std::min<std::size_t>(report.violations.size(), 5);
  for (std::size_t i = 0; i < shown; ++i) {
    const PairViolation& v = report.violations[i];
    if (v.coordinate >= 0) {
      std::printf("  violation: x=%s y=%s coordinate=%d gap=%.3g\n",
                  point_string(v.x).c_str(), point_string(v.y).c_str(),
                  v.coordinate, v.gap);
    } else {
      std::printf("  violation: x=%s y=%s gap=%.3g\n",
                  point_string(v.x).c_str(), point_string(v.y).c_str(), v.gap);
    }
  }
  if (report.violations.size() > shown) {
    std::printf("  ... %zu more\n", report.violations.size() - shown);
  }
}

int run_verify(const VerifyOptions& opts) {
  const BipartiteInstance inst = load_instance_file(opts.instance_path);
  const ProfitOracle oracle(inst);
  const BoundVector& bound = oracle.bound();
  bool ok = true;

  CheckOptions copts;
  copts.seed = opts.seed;

  const CheckReport dr = check_dr(oracle, bound, copts);
  std::printf("dr_check: %s (%s, %llu pairs, %zu violations)\n",
              dr.pass() ? "pass" : "FAIL",
              dr.mode == CheckMode::exhaustive ? "exhaustive" : "sampled",
              static_cast<unsigned long long>(dr.pairs_checked),
              dr.violations.size());
  print_violations(dr);
  ok = ok && dr.pass();

  const CheckReport lattice = check_lattice_submodular(oracle, bound, copts);
  std::printf("lattice_check: %s (%s, %llu pairs, %zu violations)\n",
              lattice.pass() ? "pass" : "FAIL",
              lattice.mode == CheckMode::exhaustive ? "exhaustive" : "sampled",
              static_cast<unsigned long long>(lattice.pairs_checked),
              lattice.violations.size());
  print_violations(lattice);
  ok = ok && lattice.pass();

  const MonotoneReport mono = check_nonmonotone(oracle, bound, copts);
  if (mono.witness.has_value()) {
    std::printf("nonmonotone: witness f%s=%.12g > f%s=%.12g\n",
                point_string(mono.witness->lower).c_str(),
                mono.witness->value_lower,
                point_string(mono.witness->upper).c_str(),
                mono.witness->value_upper);
  } else {
    std::printf("nonmonotone: no witness (objective monotone on this box)\n");
  }
  std::printf("negativity: min f = %.12g at %s%s\n", mono.min_value,
              point_string(mono.min_point).c_str(),
              mono.min_value < 0.0 ? " (negative values occur)" : "");

  // Closed-form spread vs simulation on a few strategies.
  RngStream mc_root = RngStream(opts.seed).substream("verify-mc");
  std::vector<LatticePoint> probes;
  LatticePoint half(bound.size());
  for (std::size_t e = 0; e < bound.size(); ++e) half[e] = bound[e] / 2;
  probes.push_back(half);
  for (int i = 0; i < 2; ++i) {
    LatticePoint m(bound.size());
    RngStream draw = mc_root.substream("point", static_cast<std::uint64_t>(i));
    for (std::size_t e = 0; e < bound.size(); ++e) {
      m[e] = draw.uniform_int(0, bound[e]);
    }
    probes.push_back(m);
  }
  for (std::size_t i = 0; i < probes.size(); ++i) {
    RngStream trial_rng = mc_root.substream("trials", static_cast<std::uint64_t>(i));
    const double closed = influence_spread(inst, probes[i]);
    const SpreadEstimate est =
        monte_carlo_spread(inst, probes[i], opts.mc_trials, trial_rng);
    const double diff = std::abs(est.mean - closed);
    const bool pass = diff <= 3.0 * est.std_error + 1e-12;
    std::printf("mc_spread: %s m=%s closed=%.12g mc=%.12g diff=%.3g 3se=%.3g\n",
                pass ? "pass" : "FAIL", point_string(probes[i]).c_str(), closed,
                est.mean, diff, 3.0 * est.std_error);
    ok = ok && pass;
  }

  std::printf("verify: %s\n", ok ? "PASS" : "FAIL");
  return ok ? 0 : kExitVerifyFailure;
}

int run_bench(const BenchOptions& opts) {
  RatioHarnessParams params;
  params.instances = opts.instances;
  params.runs_per_instance = opts.runs;
  params.seed = opts.seed;

  const RatioReport report = ratio_harness(params);
  write_text_file(opts.output, report.to_csv());
  for (const std::string& line : report.skipped) {
    std::printf("skipped %s\n", line.c_str());
  }
  std::printf("bench: instances=%zu flags=%d audits=%s max_iterations=%d\n",
              report.rows.size(), report.flag_count(),
              report.audits_pass ? "pass" : "FAIL",
              report.max_coord_iterations);

  if (opts.sweep) {
    SweepParams sp;
    sp.seed = opts.seed;
    sp.min_exp = opts.sweep_min_exp;
    sp.max_exp = opts.sweep_max_exp;
    sp.runs = opts.sweep_runs;
    const SweepReport sweep = query_sweep(sp);
    const std::string path =
        opts.sweep_output.empty() ? opts.output + ".sweep" : opts.sweep_output;
    write_text_file(path, sweep.to_table());
    std::printf(
        "sweep: points=%zu bsdg_residual_fraction=%.4g "
        "unit_slope_per_B=%.4g\n",
        sweep.points.size(), sweep.bsdg_vs_log2b.max_residual_fraction(),
        sweep.unit_vs_b.slope);
  }
  const bool ok = report.flag_count() == 0 && report.audits_pass;
  return ok ? 0 : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Profit-maximizing lattice optimization toolkit"};
  app.require_subcommand(1);

  GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand(
      "gen", "Generate a random bipartite profit instance");
  gen_cmd->add_option("--sources", gen.params.n_sources, "Number of sources");
  gen_cmd->add_option("--targets", gen.params.n_targets, "Number of targets");
  gen_cmd->add_option("--edge-prob", gen.params.edge_prob,
                      "Edge probability in [0,1]");
  gen_cmd->add_option("--cap-min", gen.params.cap_min, "Minimum capacity");
  gen_cmd->add_option("--cap-max", gen.params.cap_max, "Maximum capacity");
  gen_cmd->add_option("--p1-min", gen.params.p1_min, "Min first-trial prob");
  gen_cmd->add_option("--p1-max", gen.params.p1_max, "Max first-trial prob");
  gen_cmd->add_option("--decay-min", gen.params.decay_min, "Min decay factor");
  gen_cmd->add_option("--decay-max", gen.params.decay_max, "Max decay factor");
  gen_cmd->add_option("--cost-min", gen.params.cost_fraction_min,
                      "Min cost fraction");
  gen_cmd->add_option("--cost-max", gen.params.cost_fraction_max,
                      "Max cost fraction");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("-o,--output", gen.output, "Instance file to write")
      ->required();

  SolveOptions solve;
  CLI::App* solve_cmd =
      app.add_subcommand("solve", "Maximize the profit objective");
  solve_cmd->add_option("instance", solve.instance_path, "Instance file")
      ->required();
  solve_cmd
      ->add_option("--alg", solve.algorithm,
                   "Algorithm: bsdg, unit or exhaustive")
      ->check(CLI::IsMember({"bsdg", "unit", "exhaustive"}));
  solve_cmd->add_option("--seed", solve.seed, "Random seed");
  solve_cmd->add_option("-o,--output", solve.output, "Result file to write");

  VerifyOptions verify;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Check structural properties of an instance's objective");
  verify_cmd->add_option("instance", verify.instance_path, "Instance file")
      ->required();
  verify_cmd->add_option("--seed", verify.seed, "Random seed");
  verify_cmd->add_option("--mc-trials", verify.mc_trials,
                         "Monte-Carlo trials for the spread cross-check");

  BenchOptions bench;
  CLI::App* bench_cmd = app.add_subcommand(
      "bench", "Approximation-ratio and query-count benchmark");
  bench_cmd->add_option("--seed", bench.seed, "Random seed");
  bench_cmd->add_option("--instances", bench.instances, "Instance count");
  bench_cmd->add_option("--runs", bench.runs, "Solver runs per instance");
  bench_cmd->add_option("-o,--output", bench.output, "CSV report path")
      ->required();
  bench_cmd->add_flag("--sweep,!--no-sweep", bench.sweep,
                      "Run the query-vs-capacity sweep (default on)");
  bench_cmd->add_option("--sweep-output", bench.sweep_output,
                        "Sweep table path (default: <output>.sweep)");
  bench_cmd->add_option("--sweep-min-exp", bench.sweep_min_exp,
                        "Smallest capacity exponent");
  bench_cmd->add_option("--sweep-max-exp", bench.sweep_max_exp,
                        "Largest capacity exponent");
  bench_cmd->add_option("--sweep-runs", bench.sweep_runs,
                        "Runs per sweep point");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (gen_cmd->parsed()) return run_gen(gen);
    if (solve_cmd->parsed()) return run_solve(solve);
    if (verify_cmd->parsed()) return run_verify(verify);
    if (bench_cmd->parsed()) return run_bench(bench);
  } catch (const GuardError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitResourceGuard;
  } catch (const ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInputError;
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInputError;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitVerifyFailure;
  }
  return 0;
}
