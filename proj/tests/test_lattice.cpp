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

#include <set>
#include <vector>

#include "doctest.h"
#include "drsub/errors.hpp"
#include "drsub/lattice.hpp"
#include "drsub/oracle.hpp"
#include "drsub/profit.hpp"
#include "drsub/rng.hpp"
#include "test_helpers.hpp"

using namespace drsub;
using drsub::testing::tiny_chain_instance;

namespace {

LatticePoint pt(std::vector<int> v) { return LatticePoint(std::move(v)); }

LatticePoint random_point(const BoundVector& bound, RngStream& rng) {
  LatticePoint x(bound.size());
  for (std::size_t e = 0; e < bound.size(); ++e) {
    x[e] = rng.uniform_int(0, bound[e]);
  }
  return x;
}

}  // namespace

TEST_CASE("join and meet are componentwise max and min") {
  const LatticePoint x = pt({2, 1, 0});
  const LatticePoint y = pt({1, 3, 0});
  CHECK(join(x, y) == pt({2, 3, 0}));
  CHECK(meet(x, y) == pt({1, 1, 0}));

  CHECK(join(x, x) == x);
  CHECK(meet(x, x) == x);

  const LatticePoint zero(3);
  CHECK(join(zero, y) == y);

  const LatticePoint top = pt({9, 9, 9});
  CHECK(meet(top, y) == y);
}

TEST_CASE("join and meet reject mismatched lengths") {
  CHECK_THROWS_AS(join(pt({1}), pt({1, 2})), DimensionError);
  CHECK_THROWS_AS(meet(pt({1}), pt({1, 2})), DimensionError);
}

TEST_CASE("join/meet algebra on random points") {
  RngStream rng(7);
  const BoundVector bound({4, 6, 2, 5});
  for (int i = 0; i < 200; ++i) {
    const LatticePoint x = random_point(bound, rng);
    const LatticePoint y = random_point(bound, rng);
    const LatticePoint z = random_point(bound, rng);
    CHECK(join(x, y) == join(y, x));
    CHECK(meet(x, y) == meet(y, x));
    CHECK(join(join(x, y), z) == join(x, join(y, z)));
    CHECK(meet(meet(x, y), z) == meet(x, meet(y, z)));
    CHECK(leq(meet(x, y), x));
    CHECK(leq(x, join(x, y)));
  }
}

TEST_CASE("add_units steps one coordinate and leaves the input alone") {
  const LatticePoint origin(2);
  const LatticePoint moved = add_units(origin, 0, 3);
  CHECK(moved == pt({3, 0}));
  CHECK(origin == LatticePoint(2));

  CHECK(add_units(moved, 1, 0) == moved);
  CHECK(add_units(moved, 0, -3) == origin);
}

TEST_CASE("add_units enforces the box") {
  const BoundVector bound({3, 3});
  CHECK_THROWS_AS(add_units(pt({0, 0}), 0, -1), BoundsError);
  CHECK_THROWS_AS(add_units(pt({3, 0}), 0, 1, bound), BoundsError);
  CHECK(add_units(pt({2, 0}), 0, 1, bound) == pt({3, 0}));
}

TEST_CASE("counting oracle ledgers evaluations and marginals") {
  int spy_evals = 0;
  const FunctionOracle f(
      [&spy_evals](const LatticePoint& x) {
        ++spy_evals;
        return static_cast<double>(x[0] + x[1]);
      },
      BoundVector({5, 5}));
  CountingOracle counted(f);

  counted.evaluate(pt({1, 1}));
  CHECK(counted.raw_count() == 1);
  CHECK(counted.fused_count() == 0);

  // No fused path: a marginal costs two raw evaluations.
  const double gain = counted.marginal(pt({1, 1}), 0, 2);
  CHECK(gain == doctest::Approx(2.0));
  CHECK(counted.raw_count() == 3);
  CHECK(counted.raw_equivalent() == 3);
  CHECK(spy_evals == 3);
}

TEST_CASE("counting oracle uses the fused path when available") {
  const ProfitOracle oracle(tiny_chain_instance());
  CountingOracle counted(oracle);

  const double up = counted.marginal(LatticePoint(1), 0, 1);
  CHECK(up == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(counted.raw_count() == 1);
  CHECK(counted.fused_count() == 1);
  CHECK(counted.raw_equivalent() == 2);

  const double down = counted.marginal(pt({3}), 0, -1);
  CHECK(down == doctest::Approx(0.053125).epsilon(1e-12));
  CHECK(counted.raw_equivalent() == 4);

  CHECK(counted.marginal(pt({2}), 0, 0) == 0.0);
  CHECK_THROWS_AS(counted.marginal(pt({3}), 0, 1), BoundsError);
}

TEST_CASE("box enumeration is lexicographic and complete") {
  const BoundVector bound({1, 2});
  BoxEnumerator en(bound);
  std::vector<LatticePoint> seen;
  seen.push_back(en.point());
  while (en.advance()) seen.push_back(en.point());

  CHECK(seen.size() == box_point_count(bound));
  const std::vector<LatticePoint> expected = {pt({0, 0}), pt({0, 1}),
                                              pt({0, 2}), pt({1, 0}),
                                              pt({1, 1}), pt({1, 2})};
  CHECK(seen == expected);
}

TEST_CASE("box point count saturates instead of overflowing") {
  const BoundVector huge(std::vector<int>(16, 1 << 14));
  CHECK(box_point_count(huge) == ~std::uint64_t{0});
}

TEST_CASE("rng streams are reproducible and substreams are independent") {
  RngStream a(42);
  RngStream b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

  RngStream root(42);
  RngStream s1 = root.substream("gen");
  RngStream s2 = root.substream("gen");
  RngStream s3 = root.substream("solve");
  CHECK(s1.next_u64() == s2.next_u64());
  CHECK(root.substream("run", 0).next_u64() != root.substream("run", 1).next_u64());
  CHECK(s1.seed() != s3.seed());
}

TEST_CASE("rng draws respect their ranges") {
  RngStream rng(3);
  for (int i = 0; i < 1000; ++i) {
    const double d = rng.next_double();
    CHECK(d >= 0.0);
    CHECK(d < 1.0);
    const int v = rng.uniform_int(-3, 5);
    CHECK(v >= -3);
    CHECK(v <= 5);
    CHECK(rng.next_below(7) < 7);
  }
  CHECK_FALSE(rng.bernoulli(0.0));
  CHECK(rng.bernoulli(1.0));
}
