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

#include <string>

#include "doctest.h"
#include "drsub/errors.hpp"
#include "drsub/instance_io.hpp"
#include "drsub/rng.hpp"
#include "test_helpers.hpp"

using namespace drsub;
using drsub::testing::tiny_chain_instance;

namespace {

bool structurally_equal(const BipartiteInstance& a, const BipartiteInstance& b) {
  if (a.n_sources() != b.n_sources() || a.targets != b.targets ||
      a.influencers != b.influencers) {
    return false;
  }
  for (std::size_t s = 0; s < a.n_sources(); ++s) {
    if (a.sources[s].name != b.sources[s].name ||
        a.sources[s].capacity != b.sources[s].capacity ||
        a.sources[s].probs != b.sources[s].probs ||
        a.sources[s].unit_cost != b.sources[s].unit_cost) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("instance round trip preserves structure") {
  const BipartiteInstance inst = tiny_chain_instance();
  const std::string text = serialize_instance(inst);
  const BipartiteInstance back = parse_instance(text);
  CHECK(structurally_equal(inst, back));
  // Serialization is canonical: a second round trip is byte-identical.
  CHECK(serialize_instance(back) == text);
}

TEST_CASE("generated instances round trip") {
  GeneratorParams params;
  params.n_sources = 12;  // wide enough to need zero-padded names
  params.n_targets = 11;
  RngStream rng(4);
  const BipartiteInstance inst = generate_instance(params, rng);
  const BipartiteInstance back = parse_instance(serialize_instance(inst));
  CHECK(structurally_equal(inst, back));
}

TEST_CASE("parse maps names to indices in name order") {
  const std::string text = R"({
    "sources": [
      {"name": "zeta", "capacity": 1, "probs": [0.5], "unit_cost": 0.0},
      {"name": "alpha", "capacity": 2, "probs": [0.4, 0.2], "unit_cost": 0.1}
    ],
    "targets": ["t2", "t1"],
    "edges": [["zeta", "t1"], ["alpha", "t2"]]
  })";
  const BipartiteInstance inst = parse_instance(text);
  REQUIRE(inst.n_sources() == 2);
  CHECK(inst.sources[0].name == "alpha");
  CHECK(inst.sources[1].name == "zeta");
  CHECK(inst.targets == std::vector<std::string>{"t1", "t2"});
  // t1 <- zeta (index 1), t2 <- alpha (index 0)
  CHECK(inst.influencers[0] == std::vector<int>{1});
  CHECK(inst.influencers[1] == std::vector<int>{0});
}

TEST_CASE("parse rejects schema violations with precise messages") {
  const auto expect_error = [](const std::string& text, const std::string& needle) {
    try {
      parse_instance(text);
      FAIL_CHECK("expected ParseError for: " << needle);
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };

  expect_error(R"({"sources": [], "targets": []})", "missing field \"edges\"");
  expect_error(
      R"({"sources": [{"name": "s1", "capacity": 2, "probs": [0.2, 0.5],
          "unit_cost": 0}], "targets": [], "edges": []})",
      "probs not non-increasing at i=2");
  expect_error(
      R"({"sources": [{"name": "s1", "capacity": 3, "probs": [0.5],
          "unit_cost": 0}], "targets": [], "edges": []})",
      "source s1: probs length 1 does not match capacity 3");
  expect_error(
      R"({"sources": [{"name": "s1", "capacity": 1, "probs": [1.5],
          "unit_cost": 0}], "targets": [], "edges": []})",
      "outside [0,1]");
  expect_error(
      R"({"sources": [{"name": "s1", "capacity": 1, "probs": [0.5],
          "unit_cost": -1}], "targets": [], "edges": []})",
      "unit_cost");
  expect_error(
      R"({"sources": [{"name": "s1", "capacity": 1, "probs": [0.5],
          "unit_cost": 0}], "targets": ["t1"], "edges": [["s9", "t1"]]})",
      "unknown source s9");
  expect_error(
      R"({"sources": [{"name": "s1", "capacity": 1, "probs": [0.5],
          "unit_cost": 0}], "targets": ["t1"],
          "edges": [["s1", "t1"], ["s1", "t1"]]})",
      "duplicate edge");
  expect_error(
      R"({"sources": [
            {"name": "s1", "capacity": 1, "probs": [0.5], "unit_cost": 0},
            {"name": "s1", "capacity": 1, "probs": [0.5], "unit_cost": 0}],
          "targets": [], "edges": []})",
      "duplicate source name");
  expect_error("not json at all", "invalid JSON");
}

TEST_CASE("strategy round trip and validation") {
  const BipartiteInstance inst = tiny_chain_instance();
  LatticePoint m(1);
  m[0] = 2;
  const std::string text = serialize_strategy(inst, m);
  CHECK(parse_strategy(text, inst) == m);

  // Missing sources default to level 0.
  CHECK(parse_strategy(R"({"levels": {}})", inst) == LatticePoint(1));

  CHECK_THROWS_AS(parse_strategy(R"({"levels": {"nope": 1}})", inst),
                  ParseError);
  CHECK_THROWS_AS(parse_strategy(R"({"levels": {"s1": 7}})", inst),
                  ParseError);
  CHECK_THROWS_AS(parse_strategy(R"({"levels": {"s1": -1}})", inst),
                  ParseError);
  CHECK_THROWS_AS(parse_strategy(R"({"nope": {}})", inst), ParseError);
}
