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

#include "drsub/solvers.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "drsub/errors.hpp"

namespace drsub {

namespace {

constexpr double kDrTolerance = 1e-9;

void require_solvable_box(const ObjectiveOracle& f, const BoundVector& bound) {
  const BoundVector& domain = f.bound();
  if (bound.size() != domain.size()) {
    throw DimensionError("solve box has " + std::to_string(bound.size()) +
                         " coordinates, oracle domain has " +
                         std::to_string(domain.size()));
  }
  for (std::size_t e = 0; e < bound.size(); ++e) {
    if (bound[e] > domain[e]) {
      throw ConfigError("solve box exceeds oracle domain on coordinate " +
                        std::to_string(e));
    }
  }
}

[[noreturn]] void internal_violation(const char* what, CoordinateId e) {
  throw DrViolationError(std::string(what) + " on coordinate " +
                         std::to_string(e));
}

}  // namespace

int ceil_log2(std::uint64_t x) {
  if (x == 0) throw ConfigError("ceil_log2 requires x >= 1");
  return static_cast<int>(std::bit_width(x - 1));
}

int find_cap_u(const CountingOracle& oracle, const LatticePoint& x,
               CoordinateId e, const BoundVector& bound, int* probes) {
  const std::size_t se = static_cast<std::size_t>(e);
  LatticePoint probe = x;
  int lo = 0;
  int hi = bound[se];
  int used = 0;
  // phi(b) = f(chi_e | x + b*chi_e) is non-increasing for DR oracles, so the
  // first negative value is found by bisecting on its sign.
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    probe[se] = mid;
    ++used;
    if (oracle.marginal(probe, e, +1) < 0.0) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  if (probes) *probes = used;
  return lo;  // == B(e) when no increment ever hurts
}

int find_cap_v(const CountingOracle& oracle, const LatticePoint& y,
               CoordinateId e, const BoundVector& bound, int* probes) {
  const std::size_t se = static_cast<std::size_t>(e);
  const int cap = bound[se];
  LatticePoint probe = y;
  int lo = 0;
  int hi = cap;
  int used = 0;
  // psi(b) = f(-chi_e | y - b*chi_e); find the first removal that hurts.
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    probe[se] = cap - mid;
    ++used;
    if (oracle.marginal(probe, e, -1) < 0.0) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  if (probes) *probes = used;
  return cap - lo;  // == 0 when no removal ever hurts
}

namespace {

// Shared double greedy skeleton. Halving step and cap clamps are what make
// the binary-search variant; the unit baseline fixes step = 1 and skips both.
SolveResult double_greedy_impl(const ObjectiveOracle& f,
                               const BoundVector& bound, RngStream rng,
                               bool halving) {
  require_solvable_box(f, bound);
  const std::size_t n = bound.size();
  CountingOracle oracle(f);

  SolveResult result;
  result.seed = rng.seed();
  result.trace.reserve(n);

  LatticePoint x(n, 0);
  LatticePoint y(n, 0);
  for (std::size_t e = 0; e < n; ++e) y[e] = bound[e];

  for (std::size_t e = 0; e < n; ++e) {
    const CoordinateId coord = static_cast<CoordinateId>(e);
    CoordTrace tr;
    tr.coordinate = coord;

    if (halving) {
      tr.u_cap = find_cap_u(oracle, x, coord, bound, &tr.u_probes);
      tr.v_cap = find_cap_v(oracle, y, coord, bound, &tr.v_probes);
      if (tr.u_cap < tr.v_cap) internal_violation("cap inversion (u < v)", coord);
    } else {
      tr.u_cap = bound[e];
      tr.v_cap = 0;
    }

    const int max_iterations =
        halving ? ceil_log2(static_cast<std::uint64_t>(bound[e])) + 1
                : bound[e];

    while (x[e] < y[e]) {
      const int gap = y[e] - x[e];
      const int step = halving ? std::max(gap / 2, 1) : 1;
      const double alpha = oracle.marginal(x, coord, +step);
      const double beta = oracle.marginal(y, coord, -step);
      if (alpha + beta < -kDrTolerance) {
        internal_violation("DR violation witnessed (alpha + beta < 0)", coord);
      }
      ++tr.iterations;
      if (tr.iterations > max_iterations) {
        internal_violation("iteration bound exceeded", coord);
      }
      if (beta <= 0.0) {
        x[e] += step;
      } else if (alpha <= 0.0) {
        y[e] -= step;
      } else if (rng.next_double() < alpha / (alpha + beta)) {
        x[e] += step;
      } else {
        y[e] -= step;
      }
      if (x[e] < 0 || x[e] > y[e] || y[e] > bound[e]) {
        internal_violation("sandwich invariant violated", coord);
      }
    }

    if (halving) {
      if (x[e] >= tr.u_cap) {
        x[e] = tr.u_cap;
        y[e] = tr.u_cap;
        tr.clamp = ClampKind::upper_cap;
      }
      if (y[e] <= tr.v_cap) {
        x[e] = tr.v_cap;
        y[e] = tr.v_cap;
        if (tr.clamp == ClampKind::none) tr.clamp = ClampKind::lower_cap;
      }
    }
    result.trace.push_back(tr);
  }

  result.solution = x;
  result.value = oracle.evaluate(x);
  result.raw_queries = oracle.raw_count();
  result.fused_queries = oracle.fused_count();
  return result;
}

}  // namespace

SolveResult binary_search_double_greedy(const ObjectiveOracle& f,
                                        const BoundVector& bound,
                                        RngStream rng) {
  return double_greedy_impl(f, bound, rng, /*halving=*/true);
}

SolveResult binary_search_double_greedy(const ObjectiveOracle& f,
                                        RngStream rng) {
  return double_greedy_impl(f, f.bound(), rng, /*halving=*/true);
}

SolveResult unit_double_greedy(const ObjectiveOracle& f,
                               const BoundVector& bound, RngStream rng) {
  return double_greedy_impl(f, bound, rng, /*halving=*/false);
}

SolveResult unit_double_greedy(const ObjectiveOracle& f, RngStream rng) {
  return double_greedy_impl(f, f.bound(), rng, /*halving=*/false);
}

ExhaustiveResult exhaustive_optimum(const ObjectiveOracle& f,
                                    const BoundVector& bound) {
  require_solvable_box(f, bound);
  const std::uint64_t points = box_point_count(bound);
  if (points > kExhaustiveBoxLimit) {
    throw GuardError("box has " + std::to_string(points) +
                     " points, exceeds the exhaustive enumeration limit of " +
                     std::to_string(kExhaustiveBoxLimit));
  }

  CountingOracle oracle(f);
  BoxEnumerator en(bound);
  ExhaustiveResult result;
  result.argmax = en.point();
  result.value = oracle.evaluate(en.point());
  result.negativity_seen = result.value < 0.0;
  result.points_enumerated = 1;
  while (en.advance()) {
    const double v = oracle.evaluate(en.point());
    if (v < 0.0) result.negativity_seen = true;
    // Strict improvement keeps the lexicographically smallest maximizer.
    if (v > result.value) {
      result.value = v;
      result.argmax = en.point();
    }
    ++result.points_enumerated;
  }
  return result;
}

ExhaustiveResult exhaustive_optimum(const ObjectiveOracle& f) {
  return exhaustive_optimum(f, f.bound());
}

}  // namespace drsub
