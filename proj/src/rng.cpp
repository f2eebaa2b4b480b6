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

#include "drsub/rng.hpp"

#include <limits>

#include "drsub/errors.hpp"

namespace drsub {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

RngStream::RngStream(std::uint64_t seed) : seed_(seed), gen_(seed) {}

RngStream RngStream::substream(std::string_view name,
                               std::uint64_t index) const {
  std::uint64_t derived = splitmix64(seed_ ^ fnv1a64(name));
  derived = splitmix64(derived + index);
  return RngStream(derived);
}

std::uint64_t RngStream::next_u64() { return gen_(); }

double RngStream::next_double() {
  // 53 uniform mantissa bits; value in [0, 1).
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t RngStream::next_below(std::uint64_t n) {
  if (n == 0) throw ConfigError("next_below requires n >= 1");
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t v;
  do {
    v = next_u64();
  } while (v >= limit);
  return v % n;
}

int RngStream::uniform_int(int lo, int hi) {
  if (lo > hi) throw ConfigError("uniform_int: empty range");
  const std::uint64_t span =
      static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  return lo + static_cast<int>(next_below(span));
}

double RngStream::uniform_real(double lo, double hi) {
  if (lo > hi) throw ConfigError("uniform_real: empty range");
  return lo + (hi - lo) * next_double();
}

bool RngStream::bernoulli(double p) { return next_double() < p; }

}  // namespace drsub
