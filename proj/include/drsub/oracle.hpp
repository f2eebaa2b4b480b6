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

// Evaluation-oracle contract and the query-counting wrapper every solver and
// verifier goes through.

#ifndef DRSUB_ORACLE_HPP
#define DRSUB_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <utility>

#include "drsub/lattice.hpp"

namespace drsub {

// A deterministic objective f on the box [0, bound]. Implementations must be
// immutable after construction; concurrent read-only evaluation is safe.
class ObjectiveOracle {
 public:
  virtual ~ObjectiveOracle() = default;

  virtual double evaluate(const LatticePoint& x) const = 0;
  virtual const BoundVector& bound() const = 0;

  // Optional incremental path for f(base + k*chi_e) - f(base). An oracle that
  // can compute the difference cheaper than two full evaluations overrides
  // both members.
  virtual bool has_fused_marginal() const { return false; }
  virtual double fused_marginal(const LatticePoint& base, CoordinateId e,
                                int k) const;
};

// Objective defined by a callable; used for synthetic oracles in tests and
// verifiers.
class FunctionOracle final : public ObjectiveOracle {
 public:
  FunctionOracle(std::function<double(const LatticePoint&)> fn,
                 BoundVector bound)
      : fn_(std::move(fn)), bound_(std::move(bound)) {}

  double evaluate(const LatticePoint& x) const override { return fn_(x); }
  const BoundVector& bound() const override { return bound_; }

 private:
  std::function<double(const LatticePoint&)> fn_;
  BoundVector bound_;
};

// Counts oracle traffic. Each evaluate() adds one entry to the raw ledger;
// each fused marginal adds one raw entry plus one fused mark and is accounted
// as two raw-equivalent evaluations, so the totals stay comparable to a
// black-box oracle that can only be evaluated pointwise.
//
// Counters are plain (non-atomic); concurrent workers each take their own
// wrapper and sum the ledgers afterwards.
class CountingOracle final : public ObjectiveOracle {
 public:
  explicit CountingOracle(const ObjectiveOracle& inner) : inner_(&inner) {}

  double evaluate(const LatticePoint& x) const override {
    ++raw_evals_;
    return inner_->evaluate(x);
  }

  const BoundVector& bound() const override { return inner_->bound(); }

  // Universal marginal access path: f(base + k*chi_e) - f(base). Dispatches
  // to the inner oracle's fused path when it has one, otherwise spends two
  // raw evaluations.
  double marginal(const LatticePoint& base, CoordinateId e, int k) const;

  // Counters only ever grow; take a fresh wrapper for a fresh ledger.
  std::uint64_t raw_count() const { return raw_evals_ + fused_marginals_; }
  std::uint64_t fused_count() const { return fused_marginals_; }
  std::uint64_t raw_equivalent() const {
    return raw_evals_ + 2 * fused_marginals_;
  }

 private:
  const ObjectiveOracle* inner_;
  mutable std::uint64_t raw_evals_ = 0;
  mutable std::uint64_t fused_marginals_ = 0;
};

}  // namespace drsub

#endif  // DRSUB_ORACLE_HPP
