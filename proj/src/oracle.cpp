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

#include "drsub/oracle.hpp"

#include "drsub/errors.hpp"

namespace drsub {

double ObjectiveOracle::fused_marginal(const LatticePoint& /*base*/,
                                       CoordinateId /*e*/, int /*k*/) const {
  throw Error("oracle has no fused marginal path");
}

double CountingOracle::marginal(const LatticePoint& base, CoordinateId e,
                                int k) const {
  if (inner_->has_fused_marginal()) {
    ++fused_marginals_;
    return inner_->fused_marginal(base, e, k);
  }
  const double before = evaluate(base);
  const double after = evaluate(add_units(base, e, k, inner_->bound()));
  return after - before;
}

}  // namespace drsub
