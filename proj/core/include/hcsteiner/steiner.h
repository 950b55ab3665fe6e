// Copyright 2026 The hcsteiner Authors.
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

#ifndef HCSTEINER_STEINER_H_
#define HCSTEINER_STEINER_H_

#include <span>
#include <string>
#include <vector>

#include "hcsteiner/budget.h"
#include "hcsteiner/cube.h"

namespace hcsteiner {

// A terminal set of Q_n. Always non-empty.
class SteinerInstance {
 public:
  // Throws Error(kPrecondition) if `terminals` is empty.
  explicit SteinerInstance(VertexSet terminals);

  Dimension dim() const { return terminals_.dim(); }
  const VertexSet& terminals() const { return terminals_; }

 private:
  VertexSet terminals_;
};

// Subgraph of Q_n given by its edge set. `vertices()` is the set of edge
// endpoints together with any extra vertices supplied at construction (so a
// single-vertex tree has no edges and one vertex).
class SteinerTree {
 public:
  SteinerTree(Dimension dim, std::vector<Edge> edges,
              const VertexSet& extra_vertices);

  Dimension dim() const { return vertices_.dim(); }
  std::span<const Edge> edges() const { return edges_; }
  const VertexSet& vertices() const { return vertices_; }
  int size() const { return static_cast<int>(edges_.size()); }

 private:
  std::vector<Edge> edges_;
  VertexSet vertices_;
};

struct TreeCheck {
  bool ok = true;
  std::string reason;
};

// Checks that `tree` is connected, acyclic, spans `terminals`, and (when
// `require_terminal_leaves`) that every leaf is a terminal.
TreeCheck CheckSteinerTree(const SteinerTree& tree, const VertexSet& terminals,
                           bool require_terminal_leaves = true);

// Repeatedly strips leaves that are not terminals.
SteinerTree PruneNonTerminalLeaves(const SteinerTree& tree,
                                   const VertexSet& terminals);

struct SteinerResult {
  int distance = 0;
  SteinerTree tree;
};

// Exact Steiner distance by Dreyfus-Wagner over the implicit cube, with a
// witness tree of exactly `distance` edges. The guard compares 3^k * 2^n
// against budget.max_dp_states and 2^(k-1) * 2^n against
// budget.max_table_entries; BudgetExceeded carries the projection.
SteinerResult SteinerExact(const SteinerInstance& instance,
                           const Budget& budget = {});

// Independent oracle: the least |W| - 1 over W containing the terminals with
// Q_n[W] connected, found by trying supersets in order of added vertices.
// Requires n <= 6.
int SteinerBruteOracle(const SteinerInstance& instance,
                       const Budget& budget = {});

// Path of HammingDistance(u, v) edges flipping the differing coordinates in
// increasing order.
std::vector<Edge> ShortestPath(Vertex u, Vertex v);

}  // namespace hcsteiner

#endif  // HCSTEINER_STEINER_H_
