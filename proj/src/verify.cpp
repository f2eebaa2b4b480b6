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

#include "drsub/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "drsub/errors.hpp"

namespace drsub {

namespace {

constexpr double kMonotoneTol = 1e-12;
constexpr std::uint64_t kSaturated = ~std::uint64_t{0};

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

// Number of ordered comparable pairs x <= y in the box (x == y included):
// prod_e (B_e + 1)(B_e + 2) / 2.
std::uint64_t comparable_pair_count(const BoundVector& bound) {
  std::uint64_t count = 1;
  for (std::size_t e = 0; e < bound.size(); ++e) {
    const std::uint64_t b = static_cast<std::uint64_t>(bound[e]);
    count = sat_mul(count, (b + 1) * (b + 2) / 2);
    if (count == kSaturated) return count;
  }
  return count;
}

std::uint64_t unordered_pair_count(const BoundVector& bound) {
  const std::uint64_t points = box_point_count(bound);
  if (points == kSaturated) return kSaturated;
  return sat_mul(points, points - 1) == kSaturated ? kSaturated
                                                   : points * (points - 1) / 2;
}

// Mixed-radix weights matching BoxEnumerator's rank order.
std::vector<std::uint64_t> rank_weights(const BoundVector& bound) {
  std::vector<std::uint64_t> w(bound.size(), 1);
  for (std::size_t e = bound.size(); e-- > 1;) {
    w[e - 1] = w[e] * (static_cast<std::uint64_t>(bound[e]) + 1);
  }
  return w;
}

std::vector<double> value_table(const ObjectiveOracle& f,
                                const BoundVector& bound) {
  std::vector<double> table;
  table.reserve(static_cast<std::size_t>(box_point_count(bound)));
  BoxEnumerator en(bound);
  table.push_back(f.evaluate(en.point()));
  while (en.advance()) table.push_back(f.evaluate(en.point()));
  return table;
}

std::uint64_t rank_of(const LatticePoint& x,
                      const std::vector<std::uint64_t>& weights) {
  std::uint64_t r = 0;
  for (std::size_t e = 0; e < x.size(); ++e) {
    r += static_cast<std::uint64_t>(x[e]) * weights[e];
  }
  return r;
}

LatticePoint random_box_point(const BoundVector& bound, RngStream& rng) {
  LatticePoint x(bound.size());
  for (std::size_t e = 0; e < bound.size(); ++e) {
    x[e] = rng.uniform_int(0, bound[e]);
  }
  return x;
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::string(buf);
}

}  // namespace

CheckReport check_dr(const ObjectiveOracle& f, const BoundVector& bound,
                     const CheckOptions& opts) {
  CheckReport report;
  const std::size_t n = bound.size();
  if (n == 0) return report;

  if (comparable_pair_count(bound) <= opts.exhaustive_pair_limit) {
    report.mode = CheckMode::exhaustive;
    const auto weights = rank_weights(bound);
    const auto table = value_table(f, bound);

    BoxEnumerator upper(bound);
    do {
      const LatticePoint& y = upper.point();
      const std::uint64_t ry = upper.rank();
      // Enumerate x <= y with its rank maintained directly.
      LatticePoint x(n);
      for (;;) {
        ++report.pairs_checked;
        const std::uint64_t rx = rank_of(x, weights);
        for (std::size_t e = 0; e < n; ++e) {
          if (y[e] >= bound[e]) continue;
          const double gain_low = table[rx + weights[e]] - table[rx];
          const double gain_high = table[ry + weights[e]] - table[ry];
          if (gain_low < gain_high - opts.tol) {
            report.violations.push_back(PairViolation{
                x, y, static_cast<CoordinateId>(e), gain_high - gain_low});
          }
        }
        std::size_t e = n;
        while (e-- > 0) {
          if (x[e] < y[e]) {
            ++x[e];
            for (std::size_t a = e + 1; a < n; ++a) x[a] = 0;
            break;
          }
          if (e == 0) goto next_upper;
        }
      }
    next_upper:;
    } while (upper.advance());
    return report;
  }

  report.mode = CheckMode::sampled;
  RngStream rng = RngStream(opts.seed).substream("check-dr");
  for (std::uint64_t i = 0; i < opts.sample_count; ++i) {
    LatticePoint y = random_box_point(bound, rng);
    LatticePoint x(n);
    for (std::size_t e = 0; e < n; ++e) x[e] = rng.uniform_int(0, y[e]);
    ++report.pairs_checked;
    const double fx = f.evaluate(x);
    const double fy = f.evaluate(y);
    for (std::size_t e = 0; e < n; ++e) {
      if (y[e] >= bound[e]) continue;
      const double gain_low =
          f.evaluate(add_units(x, static_cast<CoordinateId>(e), 1)) - fx;
      const double gain_high =
          f.evaluate(add_units(y, static_cast<CoordinateId>(e), 1)) - fy;
      if (gain_low < gain_high - opts.tol) {
        report.violations.push_back(PairViolation{
            x, y, static_cast<CoordinateId>(e), gain_high - gain_low});
      }
    }
  }
  return report;
}

CheckReport check_lattice_submodular(const ObjectiveOracle& f,
                                     const BoundVector& bound,
                                     const CheckOptions& opts) {
  CheckReport report;
  const std::size_t n = bound.size();
  if (n == 0) return report;

  if (unordered_pair_count(bound) <= opts.exhaustive_pair_limit) {
    report.mode = CheckMode::exhaustive;
    const auto weights = rank_weights(bound);
    const auto table = value_table(f, bound);

    BoxEnumerator first(bound);
    do {
      const LatticePoint& x = first.point();
      const std::uint64_t rx = first.rank();
      BoxEnumerator second(bound);
      // Start the inner walk just past x.
      while (second.rank() <= rx) {
        if (!second.advance()) goto done;
      }
      do {
        const LatticePoint& y = second.point();
        ++report.pairs_checked;
        std::uint64_t r_join = 0;
        std::uint64_t r_meet = 0;
        for (std::size_t e = 0; e < n; ++e) {
          r_join += static_cast<std::uint64_t>(std::max(x[e], y[e])) * weights[e];
          r_meet += static_cast<std::uint64_t>(std::min(x[e], y[e])) * weights[e];
        }
        const double lhs = table[rx] + table[second.rank()];
        const double rhs = table[r_join] + table[r_meet];
        if (lhs < rhs - opts.tol) {
          report.violations.push_back(PairViolation{x, y, -1, rhs - lhs});
        }
      } while (second.advance());
    } while (first.advance());
  done:
    return report;
  }

  report.mode = CheckMode::sampled;
  RngStream rng = RngStream(opts.seed).substream("check-lattice");
  for (std::uint64_t i = 0; i < opts.sample_count; ++i) {
    const LatticePoint x = random_box_point(bound, rng);
    const LatticePoint y = random_box_point(bound, rng);
    ++report.pairs_checked;
    const double lhs = f.evaluate(x) + f.evaluate(y);
    const double rhs = f.evaluate(join(x, y)) + f.evaluate(meet(x, y));
    if (lhs < rhs - opts.tol) {
      report.violations.push_back(PairViolation{x, y, -1, rhs - lhs});
    }
  }
  return report;
}

MonotoneReport check_nonmonotone(const ObjectiveOracle& f,
                                 const BoundVector& bound,
                                 const CheckOptions& opts) {
  MonotoneReport report;
  const std::size_t n = bound.size();
  const std::uint64_t points = box_point_count(bound);
  report.min_point = LatticePoint(n);
  report.min_value = f.evaluate(report.min_point);

  if (n == 0) return report;

  if (points <= opts.exhaustive_pair_limit) {
    // A decrease between any comparable pair implies a decrease on some unit
    // step of a chain between them, so scanning unit steps finds a witness
    // whenever one exists.
    const auto weights = rank_weights(bound);
    const auto table = value_table(f, bound);
    BoxEnumerator en(bound);
    do {
      const LatticePoint& x = en.point();
      const std::uint64_t rx = en.rank();
      if (table[rx] < report.min_value) {
        report.min_value = table[rx];
        report.min_point = x;
      }
      if (report.witness.has_value()) continue;
      for (std::size_t e = 0; e < n; ++e) {
        if (x[e] >= bound[e]) continue;
        const double fx = table[rx];
        const double fy = table[rx + weights[e]];
        if (fx > fy + kMonotoneTol) {
          report.witness = MonotoneWitness{
              x, add_units(x, static_cast<CoordinateId>(e), 1), fx, fy};
          break;
        }
      }
    } while (en.advance());
    return report;
  }

  RngStream rng = RngStream(opts.seed).substream("check-monotone");
  for (std::uint64_t i = 0; i < opts.sample_count; ++i) {
    const LatticePoint x = random_box_point(bound, rng);
    const double fx = f.evaluate(x);
    if (fx < report.min_value) {
      report.min_value = fx;
      report.min_point = x;
    }
    if (report.witness.has_value()) continue;
    const CoordinateId e = static_cast<CoordinateId>(rng.next_below(n));
    if (x[static_cast<std::size_t>(e)] >= bound[static_cast<std::size_t>(e)]) {
      continue;
    }
    const LatticePoint up = add_units(x, e, 1);
    const double fy = f.evaluate(up);
    if (fx > fy + kMonotoneTol) {
      report.witness = MonotoneWitness{x, up, fx, fy};
    }
  }
  return report;
}

std::uint64_t query_budget(const BoundVector& bound) {
  std::uint64_t total = 2;
  for (std::size_t e = 0; e < bound.size(); ++e) {
    const std::uint64_t b = static_cast<std::uint64_t>(bound[e]);
    total += 4 * static_cast<std::uint64_t>(ceil_log2(b + 1)) +
             4 * (static_cast<std::uint64_t>(ceil_log2(b)) + 1);
  }
  return total;
}

AuditReport query_audit(const SolveResult& result, const BoundVector& bound) {
  AuditReport report;
  report.observed = result.raw_equivalent();
  report.budget = query_budget(bound);
  report.pass = report.observed <= report.budget;
  report.per_coordinate.reserve(result.trace.size());
  for (const CoordTrace& tr : result.trace) {
    const std::uint64_t b =
        static_cast<std::uint64_t>(bound[static_cast<std::size_t>(tr.coordinate)]);
    CoordBudgetLine line;
    line.coordinate = tr.coordinate;
    line.observed = 2 * static_cast<std::uint64_t>(tr.u_probes + tr.v_probes) +
                    4 * static_cast<std::uint64_t>(tr.iterations);
    line.budget = 4 * static_cast<std::uint64_t>(ceil_log2(b + 1)) +
                  4 * (static_cast<std::uint64_t>(ceil_log2(b)) + 1);
    report.per_coordinate.push_back(line);
  }
  return report;
}

// ---------------------------------------------------------------------------

void parallel_for_indexed(std::size_t count,
                          const std::function<void(std::size_t)>& fn) {
  if (count == 0) return;
  const unsigned hw = std::thread::hardware_concurrency();
  const unsigned workers =
      std::max(1u, std::min<unsigned>(hw == 0 ? 1 : hw,
                                      static_cast<unsigned>(count)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

// ---------------------------------------------------------------------------

namespace {

struct RunStats {
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
  double std_error = 0.0;
  double mean_queries = 0.0;
};

}  // namespace

int RatioReport::flag_count() const {
  int flags = 0;
  for (const auto& row : rows) flags += row.flag ? 1 : 0;
  return flags;
}

std::string RatioReport::to_csv() const {
  std::ostringstream out;
  out << "instance_id,n,max_B,opt,mean_bsdg,min_bsdg,mean_unit,ratio_bsdg,"
         "ratio_unit,queries_bsdg,queries_unit,negativity_seen,flag\n";
  for (const auto& row : rows) {
    out << row.instance_id << ',' << row.n << ',' << row.max_b << ','
        << fmt_double(row.opt) << ',' << fmt_double(row.mean_bsdg) << ','
        << fmt_double(row.min_bsdg) << ',' << fmt_double(row.mean_unit) << ',';
    if (row.opt_defined) {
      out << fmt_double(row.ratio_bsdg) << ',' << fmt_double(row.ratio_unit);
    } else {
      out << "undefined,undefined";
    }
    out << ',' << fmt_double(row.queries_bsdg) << ','
        << fmt_double(row.queries_unit) << ',' << (row.negativity_seen ? 1 : 0)
        << ',' << (row.flag ? 1 : 0) << '\n';
  }
  return out.str();
}

RatioReport ratio_harness(const RatioHarnessParams& params) {
  if (params.instances < 0) throw ConfigError("harness: negative instance count");
  if (params.runs_per_instance < 1) {
    throw ConfigError("harness: runs_per_instance must be >= 1");
  }
  if (params.sources_min < 0 || params.sources_min > params.sources_max ||
      params.targets_min < 0 || params.targets_min > params.targets_max) {
    throw ConfigError("harness: invalid source/target count ranges");
  }

  struct Cell {
    bool skipped = false;
    std::string skip_reason;
    RatioRow row;
    int max_iterations = 0;
    bool audits_pass = true;
  };

  const std::size_t count = static_cast<std::size_t>(params.instances);
  std::vector<Cell> cells(count);
  const RngStream root(params.seed);

  parallel_for_indexed(count, [&](std::size_t i) {
    Cell& cell = cells[i];
    cell.row.instance_id = std::to_string(i);

    RngStream cell_rng = root.substream("instance", i);
    GeneratorParams gen = params.gen;
    gen.n_sources = cell_rng.uniform_int(params.sources_min, params.sources_max);
    gen.n_targets = cell_rng.uniform_int(params.targets_min, params.targets_max);
    const ProfitOracle oracle(generate_instance(gen, cell_rng));
    const BoundVector& bound = oracle.bound();

    cell.row.n = static_cast<int>(bound.size());
    cell.row.max_b = bound.max_cap();

    if (box_point_count(bound) > kExhaustiveBoxLimit) {
      cell.skipped = true;
      cell.skip_reason = "box has " + std::to_string(box_point_count(bound)) +
                         " points, exceeds the exhaustive limit";
      return;
    }

    const ExhaustiveResult opt = exhaustive_optimum(oracle, bound);
    cell.row.opt = opt.value;
    cell.row.opt_defined = opt.value > 0.0;
    cell.row.negativity_seen = opt.negativity_seen;

    const RngStream bsdg_rng = root.substream("bsdg", i);
    const RngStream unit_rng = root.substream("unit", i);
    const int runs = params.runs_per_instance;

    double sum = 0.0, sum_sq = 0.0, min_v = 0.0, max_v = 0.0, q_sum = 0.0;
    double unit_sum = 0.0, unit_min = 0.0, unit_max = 0.0, unit_q_sum = 0.0;
    double min_any = std::numeric_limits<double>::infinity();
    for (int r = 0; r < runs; ++r) {
      const SolveResult res = binary_search_double_greedy(
          oracle, bound, bsdg_rng.substream("run", static_cast<std::uint64_t>(r)));
      sum += res.value;
      sum_sq += res.value * res.value;
      if (r == 0 || res.value < min_v) min_v = res.value;
      if (r == 0 || res.value > max_v) max_v = res.value;
      q_sum += static_cast<double>(res.raw_equivalent());
      if (!query_audit(res, bound).pass) cell.audits_pass = false;
      for (const CoordTrace& tr : res.trace) {
        cell.max_iterations = std::max(cell.max_iterations, tr.iterations);
      }
      const SolveResult unit = unit_double_greedy(
          oracle, bound, unit_rng.substream("run", static_cast<std::uint64_t>(r)));
      unit_sum += unit.value;
      if (r == 0 || unit.value < unit_min) unit_min = unit.value;
      if (r == 0 || unit.value > unit_max) unit_max = unit.value;
      unit_q_sum += static_cast<double>(unit.raw_equivalent());
      min_any = std::min(min_any, std::min(res.value, unit.value));
    }

    const double n_runs = static_cast<double>(runs);
    cell.row.mean_bsdg = sum / n_runs;
    cell.row.min_bsdg = min_v;
    cell.row.max_bsdg = max_v;
    cell.row.mean_unit = unit_sum / n_runs;
    cell.row.min_unit = unit_min;
    cell.row.max_unit = unit_max;
    cell.row.queries_bsdg = q_sum / n_runs;
    cell.row.queries_unit = unit_q_sum / n_runs;
    if (runs > 1) {
      double var = (sum_sq - n_runs * cell.row.mean_bsdg * cell.row.mean_bsdg) /
                   (n_runs - 1.0);
      var = std::max(var, 0.0);
      cell.row.stderr_bsdg = std::sqrt(var / n_runs);
    }

    if (cell.row.opt_defined) {
      cell.row.ratio_bsdg = cell.row.mean_bsdg / cell.row.opt;
      cell.row.ratio_unit = cell.row.mean_unit / cell.row.opt;
      cell.row.flag = cell.row.mean_bsdg + 3.0 * cell.row.stderr_bsdg <
                      0.5 * cell.row.opt - 1e-9;
    } else {
      // OPT == 0: the ratio is undefined but no run may land below zero.
      cell.row.flag = min_any < -1e-9;
    }
  });

  RatioReport report;
  for (const Cell& cell : cells) {
    if (cell.skipped) {
      report.skipped.push_back(cell.row.instance_id + ": " + cell.skip_reason);
      continue;
    }
    report.rows.push_back(cell.row);
    report.max_coord_iterations =
        std::max(report.max_coord_iterations, cell.max_iterations);
    report.audits_pass = report.audits_pass && cell.audits_pass;
  }
  return report;
}

// ---------------------------------------------------------------------------

AffineFit affine_fit(const std::vector<double>& xs,
                     const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw ConfigError("affine_fit needs at least two points");
  }
  const double n = static_cast<double>(xs.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  AffineFit fit;
  const double denom = n * sxx - sx * sx;
  fit.slope = denom != 0.0 ? (n * sxy - sx * sy) / denom : 0.0;
  fit.intercept = (sy - fit.slope * sx) / n;
  fit.mean_value = sy / n;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    fit.max_residual = std::max(
        fit.max_residual, std::abs(ys[i] - (fit.intercept + fit.slope * xs[i])));
  }
  return fit;
}

std::string SweepReport::to_table() const {
  std::ostringstream out;
  out << "# query scaling vs capacity; one instance family, capacities "
         "swept over powers of two\n";
  out << "# B log2B queries_bsdg queries_unit budget ratio_bsdg_unit\n";
  for (const auto& p : points) {
    out << p.cap << ' ' << p.log2_cap << ' ' << fmt_double(p.queries_bsdg)
        << ' ' << fmt_double(p.queries_unit) << ' ' << p.budget << ' '
        << fmt_double(p.queries_unit > 0.0 ? p.queries_bsdg / p.queries_unit
                                           : 0.0)
        << '\n';
  }
  out << "# fit queries_bsdg ~ a + b*log2(B): a=" << fmt_double(bsdg_vs_log2b.intercept)
      << " b=" << fmt_double(bsdg_vs_log2b.slope) << " max_residual_fraction="
      << fmt_double(bsdg_vs_log2b.max_residual_fraction()) << '\n';
  out << "# fit queries_unit ~ a + b*B: a=" << fmt_double(unit_vs_b.intercept)
      << " b=" << fmt_double(unit_vs_b.slope) << " max_residual_fraction="
      << fmt_double(unit_vs_b.max_residual_fraction()) << '\n';
  return out.str();
}

SweepReport query_sweep(const SweepParams& params) {
  if (params.n_sources < 1 || params.n_targets < 0) {
    throw ConfigError("sweep: invalid node counts");
  }
  if (params.min_exp < 0 || params.min_exp > params.max_exp ||
      params.max_exp > 20) {
    throw ConfigError("sweep: exponents must satisfy 0 <= min <= max <= 20");
  }
  if (params.runs < 1) throw ConfigError("sweep: runs must be >= 1");

  const RngStream root(params.seed);
  RngStream family = root.substream("family");

  // One fixed family: per-source first-trial probability / decay / cost
  // fraction and the bipartite adjacency are drawn once; only the capacity
  // changes across sweep points.
  const int n = params.n_sources;
  std::vector<double> p1(static_cast<std::size_t>(n));
  std::vector<double> decay(static_cast<std::size_t>(n));
  std::vector<double> fraction(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    p1[static_cast<std::size_t>(s)] = family.uniform_real(0.2, 0.8);
    decay[static_cast<std::size_t>(s)] = family.uniform_real(0.5, 0.9);
    fraction[static_cast<std::size_t>(s)] = family.uniform_real(0.4, 1.0);
  }
  std::vector<std::vector<int>> influencers(
      static_cast<std::size_t>(params.n_targets));
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < params.n_targets; ++t) {
      if (family.bernoulli(0.5)) {
        influencers[static_cast<std::size_t>(t)].push_back(s);
        ++degree[static_cast<std::size_t>(s)];
      }
    }
  }

  const auto materialize = [&](int cap) {
    BipartiteInstance inst;
    for (int s = 0; s < n; ++s) {
      SourceNode node;
      node.name = "s" + std::to_string(s);
      node.capacity = cap;
      node.probs.resize(static_cast<std::size_t>(cap));
      double p = p1[static_cast<std::size_t>(s)];
      for (int i = 0; i < cap; ++i) {
        node.probs[static_cast<std::size_t>(i)] = p;
        p *= decay[static_cast<std::size_t>(s)];
      }
      node.unit_cost = fraction[static_cast<std::size_t>(s)] *
                       p1[static_cast<std::size_t>(s)] *
                       degree[static_cast<std::size_t>(s)];
      inst.sources.push_back(std::move(node));
    }
    for (int t = 0; t < params.n_targets; ++t) {
      inst.targets.push_back("t" + std::to_string(t));
    }
    inst.influencers = influencers;
    return inst;
  };

  const std::size_t n_points =
      static_cast<std::size_t>(params.max_exp - params.min_exp + 1);
  SweepReport report;
  report.points.resize(n_points);

  parallel_for_indexed(n_points, [&](std::size_t idx) {
    const int exp = params.min_exp + static_cast<int>(idx);
    const int cap = 1 << exp;
    const ProfitOracle oracle(materialize(cap));
    const BoundVector& bound = oracle.bound();
    const RngStream point_rng = root.substream("sweep", static_cast<std::uint64_t>(exp));

    double bsdg_q = 0.0;
    double unit_q = 0.0;
    for (int r = 0; r < params.runs; ++r) {
      const SolveResult res = binary_search_double_greedy(
          oracle, bound,
          point_rng.substream("bsdg", static_cast<std::uint64_t>(r)));
      bsdg_q += static_cast<double>(res.raw_equivalent());
      const SolveResult unit = unit_double_greedy(
          oracle, bound,
          point_rng.substream("unit", static_cast<std::uint64_t>(r)));
      unit_q += static_cast<double>(unit.raw_equivalent());
    }
    SweepPoint& point = report.points[idx];
    point.cap = cap;
    point.log2_cap = exp;
    point.queries_bsdg = bsdg_q / params.runs;
    point.queries_unit = unit_q / params.runs;
    point.budget = query_budget(bound);
  });

  std::vector<double> log2b, caps, bsdg, unit;
  for (const auto& p : report.points) {
    log2b.push_back(static_cast<double>(p.log2_cap));
    caps.push_back(static_cast<double>(p.cap));
    bsdg.push_back(p.queries_bsdg);
    unit.push_back(p.queries_unit);
  }
  report.bsdg_vs_log2b = affine_fit(log2b, bsdg);
  report.unit_vs_b = affine_fit(caps, unit);
  return report;
}

}  // namespace drsub
