// Copyright 2026 The foldtree Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "foldtree/canonical.h"
#include "foldtree/gluing_tree.h"

namespace foldtree {

struct VertexSeed {
  int vertex = 0;
  bool operator==(const VertexSeed&) const = default;
};
// A fold-point leaf on the edge with a fresh parameter 0 < t < length.
struct FoldSeed {
  int edge = 0;
  bool operator==(const FoldSeed&) const = default;
};
using SeedChoice = std::variant<VertexSeed, FoldSeed>;

std::vector<SeedChoice> all_seeds(const PolygonSpec& p);

struct EnumerateOptions {
  int max_parameters = 2;
  // Most polygon vertices glued at one node; 0 means n, which never binds.
  int max_node_degree = 0;
  std::uint64_t state_budget = 10'000'000;
  int threads = 0;  // 0 reads FOLDTREE_THREADS, defaulting to 1
  std::optional<std::vector<SeedChoice>> seeds;
  double epsilon = kDefaultEpsilon;
  // Re-checks region feasibility on entry to every search state.
  bool verify_regions = false;
};

struct SearchProfile {
  std::uint64_t states = 0;
  std::uint64_t completions = 0;
  std::uint64_t duplicates = 0;
  std::uint64_t infeasible_branches = 0;
  std::uint64_t angle_pruned = 0;
  std::uint64_t parameter_pruned = 0;
  std::uint64_t degree_pruned = 0;
  std::uint64_t infeasible_descendants = 0;  // only with verify_regions
  std::string to_string() const;
};

struct EnumerationResult {
  std::vector<GluingTree> trees;   // sorted by key
  std::vector<CanonicalKey> keys;  // parallel to trees
  bool exhaustive = true;
  SearchProfile profile;
};

// Exhaustive zip search. Requires exact edge lengths.
EnumerationResult enumerate_gluings(const PolygonSpec& p,
                                    const EnumerateOptions& opts = {});

int resolve_thread_count(int requested);

}  // namespace foldtree
