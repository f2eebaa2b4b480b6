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

// JSON schemas for instance and strategy documents.
//
// Instance:
//   {"sources": [{"name": ..., "capacity": ..., "probs": [...],
//                 "unit_cost": ...}, ...],
//    "targets": [name, ...],
//    "edges": [[source_name, target_name], ...]}
//
// Strategy:
//   {"levels": {source_name: integer, ...}}
//
// Parsing maps names to dense indices: sources and targets are sorted by
// name, so the on-disk name order is the coordinate order. All schema and
// model invariants are enforced; violations throw ParseError naming the
// field and rule.

#ifndef DRSUB_INSTANCE_IO_HPP
#define DRSUB_INSTANCE_IO_HPP

#include <string>

#include "drsub/profit.hpp"

namespace drsub {

BipartiteInstance parse_instance(const std::string& text);
std::string serialize_instance(const BipartiteInstance& inst);

// Strategy levels keyed by source name; sources absent from the document get
// level 0, unknown names are rejected.
LatticePoint parse_strategy(const std::string& text,
                            const BipartiteInstance& inst);
std::string serialize_strategy(const BipartiteInstance& inst,
                               const LatticePoint& levels);

BipartiteInstance load_instance_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace drsub

#endif  // DRSUB_INSTANCE_IO_HPP
