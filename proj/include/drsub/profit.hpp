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

// Bipartite viral-marketing profit model.
//
// Sources (marketing channels) are connected to targets (potential
// customers). Source s may run up to c(s) influence trials; trial i of s
// activates each adjacent target independently with probability p_s^i, and
// the probabilities are non-increasing in i. For a strategy m (trial counts
// per source):
//
//   p_t(m)  = 1 - prod_{s in Gamma(t)} prod_{i<=m(s)} (1 - p_s^i)
//   sigma(m) = sum_t p_t(m)              expected activated targets
//   delta(m) = sum_s m(s) * delta_s      linear trial cost
//   f(m)     = sigma(m) - delta(m)       expected profit
//
// f(0) = 0; f is generally neither monotone nor non-negative away from 0.

#ifndef DRSUB_PROFIT_HPP
#define DRSUB_PROFIT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "drsub/lattice.hpp"
#include "drsub/oracle.hpp"
#include "drsub/rng.hpp"

namespace drsub {

struct SourceNode {
  std::string name;
  int capacity = 0;           // trial limit c(s), >= 1
  std::vector<double> probs;  // p_s^1..p_s^{c(s)}, in [0,1], non-increasing
  double unit_cost = 0.0;     // delta_s, >= 0
};

struct BipartiteInstance {
  std::vector<SourceNode> sources;
  std::vector<std::string> targets;
  // influencers[t] = indices of sources adjacent to target t, ascending.
  // May be empty; an isolated target never activates.
  std::vector<std::vector<int>> influencers;

  std::size_t n_sources() const { return sources.size(); }
  std::size_t n_targets() const { return targets.size(); }
  std::size_t n_edges() const;
  BoundVector capacities() const;

  // Throws ConfigError if any structural invariant is broken.
  void validate() const;
};

// Reference-route evaluations, computed by direct products over the edges.
double activation_probability(const BipartiteInstance& inst,
                              const LatticePoint& m, int target);
double influence_spread(const BipartiteInstance& inst, const LatticePoint& m);
double marketing_cost(const BipartiteInstance& inst, const LatticePoint& m);
double profit(const BipartiteInstance& inst, const LatticePoint& m);

// Evaluation oracle for f backed by per-source prefix products
// P_s[k] = prod_{i<=k} (1 - p_s^i), P_s[0] = 1, so that a full evaluation is
// one product per edge and the fused marginal touches only the neighborhood
// of the changed source.
class ProfitOracle final : public ObjectiveOracle {
 public:
  explicit ProfitOracle(BipartiteInstance instance);

  const BipartiteInstance& instance() const { return instance_; }
  const BoundVector& bound() const override { return bound_; }

  double evaluate(const LatticePoint& m) const override;

  bool has_fused_marginal() const override { return true; }
  // f(base + k*chi_e) - f(base) without evaluating f twice: for each target t
  // adjacent to source e, dp_t = q_t(base) * (1 - R) with
  // q_t(base) = prod_{s in Gamma(t)} P_s[base(s)] and
  // R = P_e[base(e)+k] / P_e[base(e)]; the cost term contributes -k*delta_e.
  // When P_e[base(e)] is 0 the e factor is taken out of the product instead,
  // which avoids 0/0.
  double fused_marginal(const LatticePoint& base, CoordinateId e,
                        int k) const override;

  // P_s[k] for tests and verifiers.
  double prefix_product(int source, int k) const {
    return prefix_[source][static_cast<std::size_t>(k)];
  }

 private:
  BipartiteInstance instance_;
  BoundVector bound_;
  std::vector<std::vector<double>> prefix_;     // per source, length c(s)+1
  std::vector<std::vector<int>> audience_;      // per source, adjacent targets
};

struct SpreadEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // sample stddev / sqrt(trials); 0 when trials == 1
  std::uint64_t trials = 0;
};

// Simulates the trial process: per trial, target t activates iff any of the
// m(s) independent Bernoulli(p_s^i) draws of its influencers succeeds.
SpreadEstimate monte_carlo_spread(const BipartiteInstance& inst,
                                  const LatticePoint& m, std::uint64_t trials,
                                  RngStream& rng);

struct GeneratorParams {
  int n_sources = 3;
  int n_targets = 5;
  double edge_prob = 0.5;
  int cap_min = 2;
  int cap_max = 6;
  double p1_min = 0.2;
  double p1_max = 0.8;
  double decay_min = 0.5;   // decay range must lie in (0, 1]
  double decay_max = 0.9;
  double cost_fraction_min = 0.4;
  double cost_fraction_max = 1.0;

  void validate() const;  // throws ConfigError
};

// Random instance: capacity ~ U[cap_min, cap_max]; p_s^i = p1 * decay^(i-1)
// (non-increasing by construction); each edge present with edge_prob;
// delta_s = cost_fraction * p_s^1 * deg(s), which keeps optima interior and
// the objective non-trivially non-monotone. Deterministic given the stream.
BipartiteInstance generate_instance(const GeneratorParams& params,
                                    RngStream& rng);

}  // namespace drsub

#endif  // DRSUB_PROFIT_HPP
