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

#ifndef HCSTEINER_CUBE_H_
#define HCSTEINER_CUBE_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hcsteiner/budget.h"

namespace hcsteiner {

// Packed coordinate word. Bit i holds coordinate v_i of the string
// v_0 v_1 ... v_{n-1}; every module relies on this convention.
using Word = std::uint64_t;

// Largest supported n. 2^n must be representable in a Word.
inline constexpr int kMaxDimension = 63;

class Dimension {
 public:
  // Throws Error(kPrecondition) unless 1 <= n <= kMaxDimension.
  explicit Dimension(int n);

  int value() const { return n_; }
  // 2^n.
  Word vertex_count() const { return Word{1} << n_; }
  // n * 2^(n-1).
  Word edge_count() const { return static_cast<Word>(n_) << (n_ - 1); }
  // Word with the low n bits set.
  Word full_mask() const { return vertex_count() - 1; }

  friend auto operator<=>(const Dimension&, const Dimension&) = default;

 private:
  int n_;
};

class Vertex {
 public:
  // Throws Error(kPrecondition) if bits >= 2^n.
  Vertex(Dimension dim, Word bits);

  Dimension dim() const { return dim_; }
  Word bits() const { return bits_; }
  // 0 for members of the even class, 1 for the odd class.
  int parity() const;
  bool coordinate(int i) const { return ((bits_ >> i) & 1) != 0; }
  Vertex Flip(int i) const;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;

 private:
  Dimension dim_;
  Word bits_;
};

// Undirected edge stored canonically as (even endpoint, flipped coordinate).
class Edge {
 public:
  // Edge joining `endpoint` and `endpoint` with coordinate `bit_index`
  // flipped; either endpoint may be passed.
  Edge(Vertex endpoint, int bit_index);

  // Throws Error(kPrecondition) if u and v are not adjacent, and
  // Error(kDimensionMismatch) if they live in different cubes.
  static Edge Between(Vertex u, Vertex v);

  Dimension dim() const { return even_end_.dim(); }
  Vertex even_end() const { return even_end_; }
  Vertex odd_end() const { return even_end_.Flip(bit_index_); }
  int bit_index() const { return bit_index_; }

  // Dense-ish integer key in [0, n * 2^n); only meaningful for small n.
  Word key() const {
    return even_end_.bits() * static_cast<Word>(dim().value()) + bit_index_;
  }

  friend auto operator<=>(const Edge&, const Edge&) = default;

 private:
  Vertex even_end_;
  int bit_index_;
};

// Immutable, duplicate-free, sorted set of vertices of one cube. For
// n <= kMaskMaxDimension a 2^n-bit membership mask is kept alongside.
class VertexSet {
 public:
  static constexpr int kMaskMaxDimension = 24;

  explicit VertexSet(Dimension dim) : VertexSet(dim, {}) {}

  // Throws Error(kPrecondition) on duplicates and Error(kDimensionMismatch)
  // on vertices from another cube.
  static VertexSet FromVertices(Dimension dim, std::vector<Vertex> vertices);
  static VertexSet FromBits(Dimension dim, std::vector<Word> bits);

  Dimension dim() const { return dim_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  std::span<const Vertex> members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  const Vertex& operator[](std::size_t i) const { return members_[i]; }

  bool Contains(Word bits) const;
  bool Contains(Vertex v) const;

  VertexSet Union(const VertexSet& other) const;
  VertexSet Difference(const VertexSet& other) const;
  bool IsSubsetOf(const VertexSet& other) const;

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.dim_ == b.dim_ && a.members_ == b.members_;
  }

 private:
  VertexSet(Dimension dim, std::vector<Vertex> sorted_unique);

  Dimension dim_;
  std::vector<Vertex> members_;
  std::vector<std::uint64_t> mask_;
};

// Graph distance in Q_n. Throws Error(kDimensionMismatch).
int HammingDistance(Vertex u, Vertex v);

// The n neighbours of v, ordered by flipped coordinate.
std::vector<Vertex> Neighbors(Vertex v);

// All n * 2^(n-1) edges sorted by (even endpoint, coordinate).
std::vector<Edge> AllEdges(Dimension dim, const Budget& budget = {});

// The 2^(n-1) vertices of the given parity (0 = even, 1 = odd).
VertexSet ParityClass(Dimension dim, int parity, const Budget& budget = {});

VertexSet AllVertices(Dimension dim, const Budget& budget = {});

// Connected components of the subgraph of Q_n induced by `set`, each sorted,
// ordered by smallest member.
std::vector<VertexSet> InducedComponents(const VertexSet& set);

bool IsInducedConnected(const VertexSet& set);

// Coordinate string "v_0 v_1 ... v_{n-1}" (no separators).
std::string FormatVertex(Vertex v);
std::string FormatEdge(const Edge& e);
std::string FormatVertexSet(const VertexSet& set);

// Parses a coordinate string. n defaults to the string length; when `dim` is
// given the length must match (Error(kDimensionMismatch) otherwise).
Vertex ParseVertex(std::string_view text,
                   std::optional<Dimension> dim = std::nullopt);

}  // namespace hcsteiner

#endif  // HCSTEINER_CUBE_H_
