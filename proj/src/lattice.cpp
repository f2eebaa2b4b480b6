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

#include "drsub/lattice.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "drsub/errors.hpp"

namespace drsub {

namespace {

void require_same_size(const LatticePoint& x, const LatticePoint& y) {
  if (x.size() != y.size()) {
    throw DimensionError("lattice points have different lengths: " +
                         std::to_string(x.size()) + " vs " +
                         std::to_string(y.size()));
  }
}

}  // namespace

LatticePoint::LatticePoint(std::size_t n, int fill) : levels_(n, fill) {
  if (fill < 0) throw BoundsError("lattice point level must be non-negative");
}

LatticePoint::LatticePoint(std::vector<int> levels)
    : levels_(std::move(levels)) {
  for (int v : levels_) {
    if (v < 0) throw BoundsError("lattice point level must be non-negative");
  }
}

BoundVector::BoundVector(std::vector<int> caps) : caps_(std::move(caps)) {
  for (int c : caps_) {
    if (c < 1) throw ConfigError("bound capacities must be >= 1");
  }
}

int BoundVector::max_cap() const {
  int m = 0;
  for (int c : caps_) m = std::max(m, c);
  return m;
}

LatticePoint join(const LatticePoint& x, const LatticePoint& y) {
  require_same_size(x, y);
  std::vector<int> out(x.size());
  for (std::size_t e = 0; e < x.size(); ++e) out[e] = std::max(x[e], y[e]);
  return LatticePoint(std::move(out));
}

LatticePoint meet(const LatticePoint& x, const LatticePoint& y) {
  require_same_size(x, y);
  std::vector<int> out(x.size());
  for (std::size_t e = 0; e < x.size(); ++e) out[e] = std::min(x[e], y[e]);
  return LatticePoint(std::move(out));
}

LatticePoint add_units(const LatticePoint& x, CoordinateId e, int k) {
  if (e < 0 || static_cast<std::size_t>(e) >= x.size()) {
    throw DimensionError("coordinate " + std::to_string(e) +
                         " out of range for ground set of size " +
                         std::to_string(x.size()));
  }
  const int level = x[static_cast<std::size_t>(e)] + k;
  if (level < 0) {
    throw BoundsError("step leaves the box: coordinate " + std::to_string(e) +
                      " would reach level " + std::to_string(level));
  }
  LatticePoint out = x;
  out[static_cast<std::size_t>(e)] = level;
  return out;
}

LatticePoint add_units(const LatticePoint& x, CoordinateId e, int k,
                       const BoundVector& bound) {
  LatticePoint out = add_units(x, e, k);
  if (out[static_cast<std::size_t>(e)] > bound[static_cast<std::size_t>(e)]) {
    throw BoundsError("step leaves the box: coordinate " + std::to_string(e) +
                      " would reach level " +
                      std::to_string(out[static_cast<std::size_t>(e)]) +
                      " > cap " +
                      std::to_string(bound[static_cast<std::size_t>(e)]));
  }
  return out;
}

bool leq(const LatticePoint& x, const LatticePoint& y) {
  require_same_size(x, y);
  for (std::size_t e = 0; e < x.size(); ++e) {
    if (x[e] > y[e]) return false;
  }
  return true;
}

bool in_box(const LatticePoint& x, const BoundVector& bound) {
  if (x.size() != bound.size()) {
    throw DimensionError("point length " + std::to_string(x.size()) +
                         " does not match bound length " +
                         std::to_string(bound.size()));
  }
  for (std::size_t e = 0; e < x.size(); ++e) {
    if (x[e] < 0 || x[e] > bound[e]) return false;
  }
  return true;
}

std::uint64_t box_point_count(const BoundVector& bound) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t count = 1;
  for (std::size_t e = 0; e < bound.size(); ++e) {
    const std::uint64_t factor = static_cast<std::uint64_t>(bound[e]) + 1;
    if (count > kMax / factor) return kMax;
    count *= factor;
  }
  return count;
}

BoxEnumerator::BoxEnumerator(const BoundVector& bound)
    : bound_(bound), point_(bound.size()) {}

bool BoxEnumerator::advance() {
  // Odometer with the last coordinate fastest, which is lexicographic order
  // with coordinate 0 most significant.
  for (std::size_t e = point_.size(); e-- > 0;) {
    if (point_[e] < bound_[e]) {
      ++point_[e];
      for (std::size_t a = e + 1; a < point_.size(); ++a) point_[a] = 0;
      ++rank_;
      return true;
    }
  }
  return false;
}

}  // namespace drsub
