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

// Points and boxes on the non-negative integer lattice. A LatticePoint holds
// one level per coordinate of a fixed ground set; a BoundVector holds the
// per-coordinate capacities that define the feasible box [0, B].

#ifndef DRSUB_LATTICE_HPP
#define DRSUB_LATTICE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace drsub {

// Dense index into the ground set, fixed per instance.
using CoordinateId = int;

class LatticePoint {
 public:
  LatticePoint() = default;
  explicit LatticePoint(std::size_t n, int fill = 0);
  explicit LatticePoint(std::vector<int> levels);  // levels must be >= 0

  std::size_t size() const { return levels_.size(); }
  int operator[](std::size_t e) const { return levels_[e]; }
  int& operator[](std::size_t e) { return levels_[e]; }
  const std::vector<int>& levels() const { return levels_; }

  bool operator==(const LatticePoint&) const = default;

 private:
  std::vector<int> levels_;
};

class BoundVector {
 public:
  BoundVector() = default;
  explicit BoundVector(std::vector<int> caps);  // caps must be >= 1

  std::size_t size() const { return caps_.size(); }
  int operator[](std::size_t e) const { return caps_[e]; }
  const std::vector<int>& caps() const { return caps_; }
  int max_cap() const;

  bool operator==(const BoundVector&) const = default;

 private:
  std::vector<int> caps_;
};

// Coordinate-wise maximum / minimum. Lengths must match.
LatticePoint join(const LatticePoint& x, const LatticePoint& y);
LatticePoint meet(const LatticePoint& x, const LatticePoint& y);

// x + k units on coordinate e, other coordinates untouched; the input is not
// mutated. The result level must stay >= 0, and <= bound(e) when a bound is
// given.
LatticePoint add_units(const LatticePoint& x, CoordinateId e, int k);
LatticePoint add_units(const LatticePoint& x, CoordinateId e, int k,
                       const BoundVector& bound);

// Componentwise x <= y.
bool leq(const LatticePoint& x, const LatticePoint& y);

// 0 <= x <= bound componentwise.
bool in_box(const LatticePoint& x, const BoundVector& bound);

// Number of lattice points in [0, bound], saturating at UINT64_MAX.
std::uint64_t box_point_count(const BoundVector& bound);

// Walks every point of [0, bound] in lexicographic order (coordinate 0 most
// significant, last coordinate fastest). rank() is the position in that
// order, so consecutive advance() calls see ranks 0, 1, 2, ...
class BoxEnumerator {
 public:
  explicit BoxEnumerator(const BoundVector& bound);

  const LatticePoint& point() const { return point_; }
  std::uint64_t rank() const { return rank_; }
  bool advance();  // false once past the last point

 private:
  BoundVector bound_;
  LatticePoint point_;
  std::uint64_t rank_ = 0;
};

}  // namespace drsub

#endif  // DRSUB_LATTICE_HPP
