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

#ifndef DRSUB_RNG_HPP
#define DRSUB_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace drsub {

// Seeded deterministic random stream. Identical seeds produce identical draw
// sequences on every platform; all distributions are hand-rolled on top of
// mt19937_64 so no implementation-defined std::*_distribution is involved.
//
// Sub-streams are derived from the stored seed (not the generator state), so
// deriving them is order-independent and safe from const contexts.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }

  // Independent stream for a named task, e.g. substream("bsdg", run_index).
  RngStream substream(std::string_view name, std::uint64_t index = 0) const;

  std::uint64_t next_u64();
  double next_double();                       // uniform in [0, 1)
  std::uint64_t next_below(std::uint64_t n);  // uniform in [0, n), n >= 1
  int uniform_int(int lo, int hi);            // uniform in [lo, hi] inclusive
  double uniform_real(double lo, double hi);  // uniform in [lo, hi)
  bool bernoulli(double p);

 private:
  std::uint64_t seed_;
  std::mt19937_64 gen_;
};

}  // namespace drsub

#endif  // DRSUB_RNG_HPP
