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

// Double greedy solvers for non-monotone DR-submodular maximization over a
// bounded integer lattice, plus the exhaustive optimum finder used as the
// benchmarking reference.

#ifndef DRSUB_SOLVERS_HPP
#define DRSUB_SOLVERS_HPP

#include <cstdint>
#include <vector>

#include "drsub/lattice.hpp"
#include "drsub/oracle.hpp"
#include "drsub/rng.hpp"

namespace drsub {

enum class ClampKind { none, upper_cap, lower_cap };

struct CoordTrace {
  CoordinateId coordinate = 0;
  int iterations = 0;    // halving-loop iterations on this coordinate
  int u_cap = 0;         // highest level worth reaching from below
  int v_cap = 0;         // lowest level worth keeping from above
  int u_probes = 0;      // marginal probes spent locating u
  int v_probes = 0;      // marginal probes spent locating v
  ClampKind clamp = ClampKind::none;
};

struct SolveResult {
  LatticePoint solution;
  double value = 0.0;
  std::uint64_t raw_queries = 0;    // oracle ledger entries
  std::uint64_t fused_queries = 0;  // of which fused marginals
  std::uint64_t seed = 0;
  std::vector<CoordTrace> trace;

  // One fused marginal is worth two plain evaluations.
  std::uint64_t raw_equivalent() const {
    return raw_queries + fused_queries;
  }
};

// Largest level on coordinate e that is still worth reaching from below:
// with phi(b) = f(chi_e | x + b*chi_e) non-increasing in b, returns the
// smallest b in [0, B(e)) with phi(b) < 0, or B(e) when phi never goes
// negative. Binary search over the sign boundary; at most
// ceil(log2(B(e)+1)) probes. x must have x(e) == 0.
int find_cap_u(const CountingOracle& oracle, const LatticePoint& x,
               CoordinateId e, const BoundVector& bound, int* probes = nullptr);

// Mirror image from above: with psi(b) = f(-chi_e | y - b*chi_e), returns
// B(e) - min{b : psi(b) < 0}, or 0 when psi never goes negative. y must have
// y(e) == B(e).
int find_cap_v(const CountingOracle& oracle, const LatticePoint& y,
               CoordinateId e, const BoundVector& bound, int* probes = nullptr);

// Randomized double greedy with halving steps. Grows x from 0 and shrinks y
// from B; each coordinate needs at most ceil(log2 B(e)) + 1 iterations, and
// the per-coordinate caps (u, v) computed up front pin the meeting point to
// the beneficial range. Expected value is at least half the optimum for
// non-negative DR-submodular objectives.
//
// Throws DrViolationError when it witnesses behavior impossible under
// DR-submodularity (alpha + beta < -1e-9, or inverted caps u < v).
SolveResult binary_search_double_greedy(const ObjectiveOracle& f,
                                        const BoundVector& bound,
                                        RngStream rng);
SolveResult binary_search_double_greedy(const ObjectiveOracle& f,
                                        RngStream rng);

// Baseline with fixed unit steps and no caps; B(e) iterations per
// coordinate.
SolveResult unit_double_greedy(const ObjectiveOracle& f,
                               const BoundVector& bound, RngStream rng);
SolveResult unit_double_greedy(const ObjectiveOracle& f, RngStream rng);

struct ExhaustiveResult {
  LatticePoint argmax;
  double value = 0.0;
  std::uint64_t points_enumerated = 0;
  bool negativity_seen = false;  // some point had f < 0
};

inline constexpr std::uint64_t kExhaustiveBoxLimit = 10'000'000;

// Enumerates the whole box; ties broken toward the lexicographically
// smallest maximizer. Throws GuardError when the box exceeds
// kExhaustiveBoxLimit points.
ExhaustiveResult exhaustive_optimum(const ObjectiveOracle& f,
                                    const BoundVector& bound);
ExhaustiveResult exhaustive_optimum(const ObjectiveOracle& f);

// ceil(log2(x)) for x >= 1.
int ceil_log2(std::uint64_t x);

}  // namespace drsub

#endif  // DRSUB_SOLVERS_HPP
