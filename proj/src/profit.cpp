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

#include "drsub/profit.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "drsub/errors.hpp"

namespace drsub {

namespace {

void require_in_box(const BipartiteInstance& inst, const LatticePoint& m) {
  if (m.size() != inst.n_sources()) {
    throw DimensionError("strategy has " + std::to_string(m.size()) +
                         " levels for " + std::to_string(inst.n_sources()) +
                         " sources");
  }
  for (std::size_t s = 0; s < m.size(); ++s) {
    if (m[s] < 0 || m[s] > inst.sources[s].capacity) {
      throw BoundsError("strategy level " + std::to_string(m[s]) +
                        " outside [0, " +
                        std::to_string(inst.sources[s].capacity) +
                        "] for source " + inst.sources[s].name);
    }
  }
}

}  // namespace

std::size_t BipartiteInstance::n_edges() const {
  std::size_t count = 0;
  for (const auto& gamma : influencers) count += gamma.size();
  return count;
}

BoundVector BipartiteInstance::capacities() const {
  std::vector<int> caps;
  caps.reserve(sources.size());
  for (const auto& s : sources) caps.push_back(s.capacity);
  return BoundVector(std::move(caps));
}

void BipartiteInstance::validate() const {
  for (const auto& s : sources) {
    if (s.capacity < 1) {
      throw ConfigError("source " + s.name + ": capacity must be >= 1");
    }
    if (s.probs.size() != static_cast<std::size_t>(s.capacity)) {
      throw ConfigError("source " + s.name + ": probs length " +
                        std::to_string(s.probs.size()) +
                        " does not match capacity " +
                        std::to_string(s.capacity));
    }
    for (std::size_t i = 0; i < s.probs.size(); ++i) {
      if (!(s.probs[i] >= 0.0 && s.probs[i] <= 1.0)) {
        throw ConfigError("source " + s.name + ": prob at i=" +
                          std::to_string(i + 1) + " outside [0,1]");
      }
      if (i > 0 && s.probs[i] > s.probs[i - 1]) {
        throw ConfigError("source " + s.name +
                          ": probs not non-increasing at i=" +
                          std::to_string(i + 1));
      }
    }
    if (s.unit_cost < 0.0) {
      throw ConfigError("source " + s.name + ": unit_cost must be >= 0");
    }
  }
  if (influencers.size() != targets.size()) {
    throw ConfigError("adjacency has " + std::to_string(influencers.size()) +
                      " entries for " + std::to_string(targets.size()) +
                      " targets");
  }
  for (std::size_t t = 0; t < influencers.size(); ++t) {
    for (int s : influencers[t]) {
      if (s < 0 || static_cast<std::size_t>(s) >= sources.size()) {
        throw ConfigError("target " + targets[t] +
                          ": influencer index out of range");
      }
    }
  }
}

double activation_probability(const BipartiteInstance& inst,
                              const LatticePoint& m, int target) {
  if (target < 0 || static_cast<std::size_t>(target) >= inst.n_targets()) {
    throw DimensionError("target index " + std::to_string(target) +
                         " out of range");
  }
  require_in_box(inst, m);
  double survive = 1.0;
  for (int s : inst.influencers[static_cast<std::size_t>(target)]) {
    const auto& probs = inst.sources[static_cast<std::size_t>(s)].probs;
    for (int i = 0; i < m[static_cast<std::size_t>(s)]; ++i) {
      survive *= 1.0 - probs[static_cast<std::size_t>(i)];
    }
  }
  return 1.0 - survive;
}

double influence_spread(const BipartiteInstance& inst, const LatticePoint& m) {
  require_in_box(inst, m);
  double total = 0.0;
  for (std::size_t t = 0; t < inst.n_targets(); ++t) {
    total += activation_probability(inst, m, static_cast<int>(t));
  }
  return total;
}

double marketing_cost(const BipartiteInstance& inst, const LatticePoint& m) {
  require_in_box(inst, m);
  double total = 0.0;
  for (std::size_t s = 0; s < inst.n_sources(); ++s) {
    total += m[s] * inst.sources[s].unit_cost;
  }
  return total;
}

double profit(const BipartiteInstance& inst, const LatticePoint& m) {
  return influence_spread(inst, m) - marketing_cost(inst, m);
}

ProfitOracle::ProfitOracle(BipartiteInstance instance)
    : instance_(std::move(instance)) {
  instance_.validate();
  bound_ = instance_.capacities();

  prefix_.resize(instance_.n_sources());
  for (std::size_t s = 0; s < instance_.n_sources(); ++s) {
    const auto& probs = instance_.sources[s].probs;
    auto& pre = prefix_[s];
    pre.resize(probs.size() + 1);
    pre[0] = 1.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
      pre[i + 1] = pre[i] * (1.0 - probs[i]);
    }
  }

  audience_.resize(instance_.n_sources());
  for (std::size_t t = 0; t < instance_.n_targets(); ++t) {
    for (int s : instance_.influencers[t]) {
      audience_[static_cast<std::size_t>(s)].push_back(static_cast<int>(t));
    }
  }
}

double ProfitOracle::evaluate(const LatticePoint& m) const {
  require_in_box(instance_, m);
  double spread = 0.0;
  for (std::size_t t = 0; t < instance_.n_targets(); ++t) {
    double survive = 1.0;
    for (int s : instance_.influencers[t]) {
      survive *= prefix_[static_cast<std::size_t>(s)]
                        [static_cast<std::size_t>(m[static_cast<std::size_t>(s)])];
    }
    spread += 1.0 - survive;
  }
  double cost = 0.0;
  for (std::size_t s = 0; s < instance_.n_sources(); ++s) {
    cost += m[s] * instance_.sources[s].unit_cost;
  }
  return spread - cost;
}

double ProfitOracle::fused_marginal(const LatticePoint& base, CoordinateId e,
                                    int k) const {
  require_in_box(instance_, base);
  if (e < 0 || static_cast<std::size_t>(e) >= instance_.n_sources()) {
    throw DimensionError("source index " + std::to_string(e) +
                         " out of range");
  }
  const std::size_t se = static_cast<std::size_t>(e);
  const int from = base[se];
  const int to = from + k;
  if (to < 0 || to > bound_[se]) {
    throw BoundsError("marginal step leaves the box on source " +
                      instance_.sources[se].name);
  }
  if (k == 0) return 0.0;

  const double pre_from = prefix_[se][static_cast<std::size_t>(from)];
  const double pre_to = prefix_[se][static_cast<std::size_t>(to)];
  double delta_spread = 0.0;
  if (pre_from > 0.0) {
    const double ratio = pre_to / pre_from;
    for (int t : audience_[se]) {
      double q = 1.0;
      for (int s : instance_.influencers[static_cast<std::size_t>(t)]) {
        q *= prefix_[static_cast<std::size_t>(s)][static_cast<std::size_t>(
            base[static_cast<std::size_t>(s)])];
      }
      delta_spread += q * (1.0 - ratio);
    }
  } else {
    // A certain trial (p == 1) at or below the base level zeroed the prefix,
    // so the survival ratio would be 0/0. Factoring source e out of the
    // product gives the change exactly without any division.
    for (int t : audience_[se]) {
      double q_rest = 1.0;
      for (int s : instance_.influencers[static_cast<std::size_t>(t)]) {
        if (s == e) continue;
        q_rest *= prefix_[static_cast<std::size_t>(s)][static_cast<std::size_t>(
            base[static_cast<std::size_t>(s)])];
      }
      delta_spread += q_rest * (pre_from - pre_to);
    }
  }
  return delta_spread - k * instance_.sources[se].unit_cost;
}

SpreadEstimate monte_carlo_spread(const BipartiteInstance& inst,
                                  const LatticePoint& m, std::uint64_t trials,
                                  RngStream& rng) {
  if (trials < 1) throw ConfigError("monte_carlo_spread requires trials >= 1");
  require_in_box(inst, m);

  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    int activated = 0;
    for (std::size_t t = 0; t < inst.n_targets(); ++t) {
      bool hit = false;
      for (int s : inst.influencers[t]) {
        const auto& probs = inst.sources[static_cast<std::size_t>(s)].probs;
        for (int i = 0; i < m[static_cast<std::size_t>(s)] && !hit; ++i) {
          hit = rng.bernoulli(probs[static_cast<std::size_t>(i)]);
        }
        if (hit) break;
      }
      if (hit) ++activated;
    }
    sum += activated;
    sum_sq += static_cast<double>(activated) * activated;
  }

  SpreadEstimate est;
  est.trials = trials;
  est.mean = sum / static_cast<double>(trials);
  if (trials > 1) {
    const double n = static_cast<double>(trials);
    double var = (sum_sq - n * est.mean * est.mean) / (n - 1.0);
    var = std::max(var, 0.0);
    est.std_error = std::sqrt(var / n);
  }
  return est;
}

void GeneratorParams::validate() const {
  if (n_sources < 0 || n_targets < 0) {
    throw ConfigError("generator: negative node counts");
  }
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) {
    throw ConfigError("generator: edge_prob outside [0,1]");
  }
  if (cap_min < 1 || cap_min > cap_max) {
    throw ConfigError("generator: invalid capacity range");
  }
  if (!(p1_min >= 0.0 && p1_min <= p1_max && p1_max <= 1.0)) {
    throw ConfigError("generator: invalid p1 range");
  }
  if (!(decay_min > 0.0 && decay_min <= decay_max && decay_max <= 1.0)) {
    throw ConfigError("generator: decay range must lie in (0,1]");
  }
  if (!(cost_fraction_min >= 0.0 && cost_fraction_min <= cost_fraction_max)) {
    throw ConfigError("generator: invalid cost fraction range");
  }
}

BipartiteInstance generate_instance(const GeneratorParams& params,
                                    RngStream& rng) {
  params.validate();

  // Zero-padded names keep name order equal to generation order, so a
  // serialize/parse round trip preserves coordinate indices.
  const auto padded = [](char prefix, int i, int count) {
    const std::string digits = std::to_string(i);
    const std::size_t width = std::to_string(count > 1 ? count - 1 : 0).size();
    std::string out(1, prefix);
    if (digits.size() < width) out.append(width - digits.size(), '0');
    return out + digits;
  };

  BipartiteInstance inst;
  std::vector<double> cost_fraction(static_cast<std::size_t>(params.n_sources));
  for (int s = 0; s < params.n_sources; ++s) {
    SourceNode node;
    node.name = padded('s', s, params.n_sources);
    node.capacity = rng.uniform_int(params.cap_min, params.cap_max);
    const double p1 = rng.uniform_real(params.p1_min, params.p1_max);
    const double decay = rng.uniform_real(params.decay_min, params.decay_max);
    cost_fraction[static_cast<std::size_t>(s)] =
        rng.uniform_real(params.cost_fraction_min, params.cost_fraction_max);
    node.probs.resize(static_cast<std::size_t>(node.capacity));
    double p = p1;
    for (int i = 0; i < node.capacity; ++i) {
      node.probs[static_cast<std::size_t>(i)] = p;
      p *= decay;
    }
    inst.sources.push_back(std::move(node));
  }

  inst.targets.reserve(static_cast<std::size_t>(params.n_targets));
  for (int t = 0; t < params.n_targets; ++t) {
    inst.targets.push_back(padded('t', t, params.n_targets));
  }

  inst.influencers.assign(static_cast<std::size_t>(params.n_targets), {});
  std::vector<int> degree(static_cast<std::size_t>(params.n_sources), 0);
  for (int s = 0; s < params.n_sources; ++s) {
    for (int t = 0; t < params.n_targets; ++t) {
      if (rng.bernoulli(params.edge_prob)) {
        inst.influencers[static_cast<std::size_t>(t)].push_back(s);
        ++degree[static_cast<std::size_t>(s)];
      }
    }
  }

  // Costs scale with the first-trial gain over the whole audience; isolated
  // sources get cost 0 and an indifferent coordinate.
  for (int s = 0; s < params.n_sources; ++s) {
    auto& node = inst.sources[static_cast<std::size_t>(s)];
    const double p1 = node.probs.empty() ? 0.0 : node.probs[0];
    node.unit_cost = cost_fraction[static_cast<std::size_t>(s)] * p1 *
                     degree[static_cast<std::size_t>(s)];
  }

  inst.validate();
  return inst;
}

}  // namespace drsub
