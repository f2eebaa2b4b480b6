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

#include "drsub/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "drsub/errors.hpp"
#include "json.hpp"

namespace drsub {

namespace {

using nlohmann::json;

const json& require_field(const json& obj, const char* field,
                          const std::string& context) {
  auto it = obj.find(field);
  if (it == obj.end()) {
    throw ParseError(context + ": missing field \"" + field + "\"");
  }
  return *it;
}

std::string require_string(const json& value, const std::string& context) {
  if (!value.is_string()) throw ParseError(context + ": expected a string");
  return value.get<std::string>();
}

}  // namespace

BipartiteInstance parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("instance: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("instance: top level must be an object");

  const json& sources = require_field(doc, "sources", "instance");
  const json& targets = require_field(doc, "targets", "instance");
  const json& edges = require_field(doc, "edges", "instance");
  if (!sources.is_array()) throw ParseError("instance: \"sources\" must be an array");
  if (!targets.is_array()) throw ParseError("instance: \"targets\" must be an array");
  if (!edges.is_array()) throw ParseError("instance: \"edges\" must be an array");

  BipartiteInstance inst;
  for (const json& s : sources) {
    if (!s.is_object()) throw ParseError("instance: each source must be an object");
    SourceNode node;
    node.name = require_string(require_field(s, "name", "source"), "source name");
    const std::string ctx = "source " + node.name;
    const json& capacity = require_field(s, "capacity", ctx);
    if (!capacity.is_number_integer() || capacity.get<long long>() < 1) {
      throw ParseError(ctx + ": capacity must be a positive integer");
    }
    node.capacity = capacity.get<int>();
    const json& probs = require_field(s, "probs", ctx);
    if (!probs.is_array()) throw ParseError(ctx + ": probs must be an array");
    if (probs.size() != static_cast<std::size_t>(node.capacity)) {
      throw ParseError(ctx + ": probs length " + std::to_string(probs.size()) +
                       " does not match capacity " +
                       std::to_string(node.capacity));
    }
    node.probs.reserve(probs.size());
    for (std::size_t i = 0; i < probs.size(); ++i) {
      if (!probs[i].is_number()) {
        throw ParseError(ctx + ": prob at i=" + std::to_string(i + 1) +
                         " must be a number");
      }
      const double p = probs[i].get<double>();
      if (!(p >= 0.0 && p <= 1.0)) {
        throw ParseError(ctx + ": prob at i=" + std::to_string(i + 1) +
                         " outside [0,1]");
      }
      if (i > 0 && p > node.probs.back()) {
        throw ParseError(ctx + ": probs not non-increasing at i=" +
                         std::to_string(i + 1));
      }
      node.probs.push_back(p);
    }
    const json& cost = require_field(s, "unit_cost", ctx);
    if (!cost.is_number() || cost.get<double>() < 0.0) {
      throw ParseError(ctx + ": unit_cost must be a non-negative number");
    }
    node.unit_cost = cost.get<double>();
    inst.sources.push_back(std::move(node));
  }

  // Names become dense indices in name order.
  std::sort(inst.sources.begin(), inst.sources.end(),
            [](const SourceNode& a, const SourceNode& b) {
              return a.name < b.name;
            });
  std::map<std::string, int> source_index;
  for (std::size_t s = 0; s < inst.sources.size(); ++s) {
    if (!source_index.emplace(inst.sources[s].name, static_cast<int>(s)).second) {
      throw ParseError("instance: duplicate source name " +
                       inst.sources[s].name);
    }
  }

  for (const json& t : targets) {
    inst.targets.push_back(require_string(t, "target name"));
  }
  std::sort(inst.targets.begin(), inst.targets.end());
  std::map<std::string, int> target_index;
  for (std::size_t t = 0; t < inst.targets.size(); ++t) {
    if (!target_index.emplace(inst.targets[t], static_cast<int>(t)).second) {
      throw ParseError("instance: duplicate target name " + inst.targets[t]);
    }
  }

  inst.influencers.assign(inst.targets.size(), {});
  std::set<std::pair<int, int>> seen;
  for (const json& edge : edges) {
    if (!edge.is_array() || edge.size() != 2) {
      throw ParseError("instance: each edge must be [source_name, target_name]");
    }
    const std::string sname = require_string(edge[0], "edge source");
    const std::string tname = require_string(edge[1], "edge target");
    auto sit = source_index.find(sname);
    if (sit == source_index.end()) {
      throw ParseError("edge [" + sname + ", " + tname +
                       "]: unknown source " + sname);
    }
    auto tit = target_index.find(tname);
    if (tit == target_index.end()) {
      throw ParseError("edge [" + sname + ", " + tname +
                       "]: unknown target " + tname);
    }
    if (!seen.emplace(sit->second, tit->second).second) {
      throw ParseError("edge [" + sname + ", " + tname + "]: duplicate edge");
    }
    inst.influencers[static_cast<std::size_t>(tit->second)].push_back(
        sit->second);
  }
  for (auto& gamma : inst.influencers) std::sort(gamma.begin(), gamma.end());

  inst.validate();
  return inst;
}

std::string serialize_instance(const BipartiteInstance& inst) {
  json sources = json::array();
  for (const auto& s : inst.sources) {
    sources.push_back({{"name", s.name},
                       {"capacity", s.capacity},
                       {"probs", s.probs},
                       {"unit_cost", s.unit_cost}});
  }
  json edges = json::array();
  for (std::size_t t = 0; t < inst.n_targets(); ++t) {
    for (int s : inst.influencers[t]) {
      edges.push_back(json::array(
          {inst.sources[static_cast<std::size_t>(s)].name, inst.targets[t]}));
    }
  }
  const json doc = {
      {"sources", sources}, {"targets", inst.targets}, {"edges", edges}};
  return doc.dump(2) + "\n";
}

LatticePoint parse_strategy(const std::string& text,
                            const BipartiteInstance& inst) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("strategy: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("strategy: top level must be an object");
  const json& levels = require_field(doc, "levels", "strategy");
  if (!levels.is_object()) throw ParseError("strategy: \"levels\" must be an object");

  LatticePoint m(inst.n_sources());
  for (auto it = levels.begin(); it != levels.end(); ++it) {
    int index = -1;
    for (std::size_t s = 0; s < inst.n_sources(); ++s) {
      if (inst.sources[s].name == it.key()) {
        index = static_cast<int>(s);
        break;
      }
    }
    if (index < 0) {
      throw ParseError("strategy: unknown source " + it.key());
    }
    if (!it.value().is_number_integer()) {
      throw ParseError("strategy: level for " + it.key() +
                       " must be an integer");
    }
    const long long level = it.value().get<long long>();
    const int cap = inst.sources[static_cast<std::size_t>(index)].capacity;
    if (level < 0 || level > cap) {
      throw ParseError("strategy: level " + std::to_string(level) + " for " +
                       it.key() + " outside [0, " + std::to_string(cap) + "]");
    }
    m[static_cast<std::size_t>(index)] = static_cast<int>(level);
  }
  return m;
}

std::string serialize_strategy(const BipartiteInstance& inst,
                               const LatticePoint& levels) {
  if (levels.size() != inst.n_sources()) {
    throw DimensionError("strategy has " + std::to_string(levels.size()) +
                         " levels for " + std::to_string(inst.n_sources()) +
                         " sources");
  }
  json out;
  for (std::size_t s = 0; s < inst.n_sources(); ++s) {
    out[inst.sources[s].name] = levels[s];
  }
  const json doc = {{"levels", out.is_null() ? json::object() : out}};
  return doc.dump(2) + "\n";
}

BipartiteInstance load_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot open output file: " + path);
  out << content;
  if (!out) throw ConfigError("failed writing output file: " + path);
}

}  // namespace drsub
