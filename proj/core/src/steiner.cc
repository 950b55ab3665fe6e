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

#include "hcsteiner/steiner.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "hcsteiner/error.h"

namespace hcsteiner {

SteinerInstance::SteinerInstance(VertexSet terminals)
    : terminals_(std::move(terminals)) {
  if (terminals_.empty()) {
    throw Error(ErrorCategory::kPrecondition,
                "a Steiner instance needs at least one terminal");
  }
}

namespace {

VertexSet EndpointSet(Dimension dim, const std::vector<Edge>& edges,
                      const VertexSet& extra) {
  std::vector<Vertex> vertices(extra.begin(), extra.end());
  for (const Edge& e : edges) {
    vertices.push_back(e.even_end());
    vertices.push_back(e.odd_end());
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return VertexSet::FromVertices(dim, std::move(vertices));
}

std::vector<Edge> SortedUnique(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

}  // namespace

SteinerTree::SteinerTree(Dimension dim, std::vector<Edge> edges,
                         const VertexSet& extra_vertices)
    : edges_(SortedUnique(std::move(edges))),
      vertices_(EndpointSet(dim, edges_, extra_vertices)) {
  for (const Edge& e : edges_) {
    if (e.dim() != dim) {
      throw Error(ErrorCategory::kDimensionMismatch,
                  "tree edge from a different cube");
    }
  }
}

namespace {

// Tree degree of every vertex, keyed by vertex word.
std::map<Word, int> Degrees(const SteinerTree& tree) {
  std::map<Word, int> degree;
  for (const Vertex& v : tree.vertices()) degree[v.bits()] = 0;
  for (const Edge& e : tree.edges()) {
    ++degree[e.even_end().bits()];
    ++degree[e.odd_end().bits()];
  }
  return degree;
}

// Union-find over vertex indices of tree.vertices().
class Components {
 public:
  explicit Components(std::size_t n) : parent_(n) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
  }
  std::size_t Find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool Unite(std::size_t a, std::size_t b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

TreeCheck CheckSteinerTree(const SteinerTree& tree, const VertexSet& terminals,
                           bool require_terminal_leaves) {
  const VertexSet& vertices = tree.vertices();
  if (terminals.dim() != tree.dim()) {
    return {false, "terminals and tree live in different cubes"};
  }
  if (!terminals.IsSubsetOf(vertices)) {
    return {false, "tree does not contain every terminal"};
  }
  if (tree.edges().size() + 1 != vertices.size()) {
    return {false, "edge count is not vertex count minus one"};
  }
  auto index = [&](Vertex v) {
    return static_cast<std::size_t>(
        std::lower_bound(vertices.begin(), vertices.end(), v) -
        vertices.begin());
  };
  Components components(vertices.size());
  for (const Edge& e : tree.edges()) {
    if (!components.Unite(index(e.even_end()), index(e.odd_end()))) {
      return {false, "tree contains a cycle through " + FormatEdge(e)};
    }
  }
  if (require_terminal_leaves && vertices.size() > 1) {
    for (const auto& [bits, degree] : Degrees(tree)) {
      if (degree == 1 && !terminals.Contains(bits)) {
        return {false, "leaf " + FormatVertex(Vertex(tree.dim(), bits)) +
                           " is not a terminal"};
      }
    }
  }
  return {};
}

SteinerTree PruneNonTerminalLeaves(const SteinerTree& tree,
                                   const VertexSet& terminals) {
  const std::span<const Edge> edges = tree.edges();
  std::map<Word, std::vector<std::size_t>> incident;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    incident[edges[i].even_end().bits()].push_back(i);
    incident[edges[i].odd_end().bits()].push_back(i);
  }
  std::map<Word, int> degree;
  std::vector<Word> leaves;
  for (const auto& [bits, list] : incident) {
    degree[bits] = static_cast<int>(list.size());
    if (list.size() == 1 && !terminals.Contains(bits)) leaves.push_back(bits);
  }
  std::vector<bool> alive(edges.size(), true);
  while (!leaves.empty()) {
    const Word v = leaves.back();
    leaves.pop_back();
    if (degree[v] != 1) continue;
    for (std::size_t i : incident[v]) {
      if (!alive[i]) continue;
      alive[i] = false;
      --degree[v];
      const Word w = edges[i].even_end().bits() == v
                         ? edges[i].odd_end().bits()
                         : edges[i].even_end().bits();
      if (--degree[w] == 1 && !terminals.Contains(w)) leaves.push_back(w);
      break;
    }
  }
  std::vector<Edge> kept;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (alive[i]) kept.push_back(edges[i]);
  }
  return SteinerTree(tree.dim(), std::move(kept), terminals);
}

std::vector<Edge> ShortestPath(Vertex u, Vertex v) {
  const int length = HammingDistance(u, v);
  std::vector<Edge> path;
  path.reserve(length);
  Vertex at = u;
  const Word diff = u.bits() ^ v.bits();
  for (int i = 0; i < u.dim().value(); ++i) {
    if (((diff >> i) & 1) == 0) continue;
    path.emplace_back(at, i);
    at = at.Flip(i);
  }
  return path;
}

namespace {

constexpr std::uint32_t kInfinity = std::numeric_limits<std::uint32_t>::max();

// Parent tags of DP states. The low bits hold the flipped coordinate (grow)
// or the sub-mask taken in the split.
constexpr std::uint32_t kTagBase = 0u << 30;
constexpr std::uint32_t kTagGrow = 1u << 30;
constexpr std::uint32_t kTagSplit = 2u << 30;
constexpr std::uint32_t kTagMask = 3u << 30;

class DreyfusWagner {
 public:
  DreyfusWagner(Dimension dim, std::vector<Word> terminals, int subset_bits)
      : dim_(dim),
        n_(dim.value()),
        vertices_(dim.vertex_count()),
        terminals_(std::move(terminals)),
        subset_bits_(subset_bits),
        cost_((std::size_t{1} << subset_bits) * vertices_, kInfinity),
        parent_(cost_.size(), kTagBase) {}

  void Run() {
    const std::uint32_t subsets = 1u << subset_bits_;
    for (std::uint32_t mask = 1; mask < subsets; ++mask) {
      if (std::has_single_bit(mask)) {
        const int t = std::countr_zero(mask);
        Cost(mask)[terminals_[t]] = 0;
      } else {
        Split(mask);
      }
      Grow(mask);
    }
  }

  std::uint32_t Value(std::uint32_t mask, Word v) { return Cost(mask)[v]; }

  std::vector<Edge> Reconstruct(std::uint32_t mask, Word root) const {
    std::vector<Edge> edges;
    std::vector<std::pair<std::uint32_t, Word>> stack{{mask, root}};
    while (!stack.empty()) {
      auto [m, v] = stack.back();
      stack.pop_back();
      const std::uint32_t tag = parent_[Index(m, v)];
      switch (tag & kTagMask) {
        case kTagGrow: {
          const int bit = static_cast<int>(tag & ~kTagMask);
          edges.emplace_back(Vertex(dim_, v), bit);
          stack.emplace_back(m, v ^ (Word{1} << bit));
          break;
        }
        case kTagSplit: {
          const std::uint32_t sub = tag & ~kTagMask;
          stack.emplace_back(sub, v);
          stack.emplace_back(m ^ sub, v);
          break;
        }
        default:
          break;
      }
    }
    return edges;
  }

 private:
  std::size_t Index(std::uint32_t mask, Word v) const {
    return static_cast<std::size_t>(mask) * vertices_ + v;
  }
  std::uint32_t* Cost(std::uint32_t mask) { return &cost_[Index(mask, 0)]; }
  std::uint32_t* Parent(std::uint32_t mask) {
    return &parent_[Index(mask, 0)];
  }

  // cost[mask][v] = min over sub-masks holding the lowest terminal of mask of
  // cost[sub][v] + cost[mask ^ sub][v]. Increasing sub order with strict
  // improvement keeps the smallest sub on ties.
  void Split(std::uint32_t mask) {
    std::uint32_t* cost = Cost(mask);
    std::uint32_t* parent = Parent(mask);
    const std::uint32_t low = mask & (~mask + 1);
    for (std::uint32_t sub = (0 - mask) & mask; sub != 0 && sub != mask;
         sub = (sub - mask) & mask) {
      if ((sub & low) == 0) continue;
      const std::uint32_t* a = Cost(sub);
      const std::uint32_t* b = Cost(mask ^ sub);
      for (Word v = 0; v < vertices_; ++v) {
        const std::uint32_t c = a[v] + b[v];
        if (c < cost[v]) {
          cost[v] = c;
          parent[v] = kTagSplit | sub;
        }
      }
    }
  }

  // Unit-weight relaxation cost[v] = min(cost[v], cost[u] + 1) over the cube
  // edges, done as a bucketed BFS from all finite entries at once.
  void Grow(std::uint32_t mask) {
    std::uint32_t* cost = Cost(mask);
    std::uint32_t* parent = Parent(mask);
    std::uint32_t top = 0;
    for (Word v = 0; v < vertices_; ++v) {
      if (cost[v] != kInfinity) top = std::max(top, cost[v]);
    }
    std::vector<std::vector<Word>> buckets(static_cast<std::size_t>(top) + 2);
    for (Word v = 0; v < vertices_; ++v) {
      if (cost[v] != kInfinity) buckets[cost[v]].push_back(v);
    }
    for (std::size_t c = 0; c < buckets.size(); ++c) {
      // Buckets may grow while iterating: a vertex relaxed to c + 1 is
      // appended to bucket c + 1.
      for (std::size_t i = 0; i < buckets[c].size(); ++i) {
        const Word v = buckets[c][i];
        if (cost[v] != c) continue;
        for (int bit = 0; bit < n_; ++bit) {
          const Word u = v ^ (Word{1} << bit);
          if (cost[u] > c + 1) {
            cost[u] = static_cast<std::uint32_t>(c + 1);
            parent[u] = kTagGrow | static_cast<std::uint32_t>(bit);
            if (c + 1 >= buckets.size()) buckets.emplace_back();
            buckets[c + 1].push_back(u);
          }
        }
      }
    }
  }

  Dimension dim_;
  int n_;
  Word vertices_;
  std::vector<Word> terminals_;
  int subset_bits_;
  std::vector<std::uint32_t> cost_;
  std::vector<std::uint32_t> parent_;
};

}  // namespace

SteinerResult SteinerExact(const SteinerInstance& instance,
                           const Budget& budget) {
  const Dimension dim = instance.dim();
  const VertexSet& terminals = instance.terminals();
  const int k = static_cast<int>(terminals.size());
  if (k == 1) {
    return {0, SteinerTree(dim, {}, terminals)};
  }
  CheckBudget("Steiner DP states (3^k * 2^n)",
              std::pow(3.0, k) * std::ldexp(1.0, dim.value()),
              budget.max_dp_states);
  CheckBudget("Steiner DP table (2^(k-1) * 2^n)",
              std::ldexp(1.0, k - 1 + dim.value()), budget.max_table_entries);

  // Sub-masks range over the first k - 1 terminals; the last one is the root.
  std::vector<Word> words;
  for (const Vertex& v : terminals) words.push_back(v.bits());
  const Word root = words.back();
  words.pop_back();
  DreyfusWagner dp(dim, words, k - 1);
  dp.Run();
  const std::uint32_t full = (1u << (k - 1)) - 1;
  const int distance = static_cast<int>(dp.Value(full, root));
  SteinerTree tree(dim, dp.Reconstruct(full, root), terminals);
  if (tree.size() != distance) {
    throw std::logic_error("Steiner witness has " +
                           std::to_string(tree.size()) + " edges, expected " +
                           std::to_string(distance));
  }
  return {distance, std::move(tree)};
}

int SteinerBruteOracle(const SteinerInstance& instance, const Budget& budget) {
  const Dimension dim = instance.dim();
  const int n = dim.value();
  if (n > 6) {
    throw Error(ErrorCategory::kPrecondition,
                "brute-force oracle supports n <= 6");
  }
  const int size = static_cast<int>(dim.vertex_count());
  std::vector<std::uint64_t> closed(size);
  for (int v = 0; v < size; ++v) {
    std::uint64_t m = std::uint64_t{1} << v;
    for (int i = 0; i < n; ++i) m |= std::uint64_t{1} << (v ^ (1 << i));
    closed[v] = m;
  }
  auto connected = [&](std::uint64_t set) {
    std::uint64_t reached = set & (~set + 1);
    while (true) {
      std::uint64_t next = reached;
      for (std::uint64_t r = reached; r != 0; r &= r - 1) {
        next |= closed[std::countr_zero(r)];
      }
      next &= set;
      if (next == reached) return reached == set;
      reached = next;
    }
  };

  std::uint64_t base = 0;
  for (const Vertex& v : instance.terminals()) base |= std::uint64_t{1} << v.bits();
  std::vector<int> pool;
  for (int v = 0; v < size; ++v) {
    if (((base >> v) & 1) == 0) pool.push_back(v);
  }
  const int k = static_cast<int>(instance.terminals().size());

  std::uint64_t examined = 0;
  for (int added = 0; added <= static_cast<int>(pool.size()); ++added) {
    // Lexicographic combinations of `added` pool positions.
    std::vector<int> pick(added);
    for (int i = 0; i < added; ++i) pick[i] = i;
    while (true) {
      if (++examined > budget.max_search_nodes) {
        throw BudgetExceeded("brute-force Steiner oracle",
                             static_cast<double>(examined),
                             static_cast<double>(budget.max_search_nodes));
      }
      std::uint64_t set = base;
      for (int p : pick) set |= std::uint64_t{1} << pool[p];
      if (connected(set)) return k + added - 1;
      int i = added - 1;
      while (i >= 0 && pick[i] == static_cast<int>(pool.size()) - added + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < added; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw std::logic_error("Q_n is connected; oracle must terminate earlier");
}

}  // namespace hcsteiner
