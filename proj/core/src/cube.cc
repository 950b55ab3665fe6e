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

#include "hcsteiner/cube.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <string>
#include <utility>

#include "hcsteiner/error.h"

namespace hcsteiner {

namespace {

void RequireSameDimension(Dimension a, Dimension b, const char* where) {
  if (a != b) {
    throw Error(ErrorCategory::kDimensionMismatch,
                std::string(where) + ": dimension " +
                    std::to_string(a.value()) + " vs " +
                    std::to_string(b.value()));
  }
}

}  // namespace

Dimension::Dimension(int n) : n_(n) {
  if (n < 1 || n > kMaxDimension) {
    throw Error(ErrorCategory::kPrecondition,
                "dimension must be in [1, " + std::to_string(kMaxDimension) +
                    "], got " + std::to_string(n));
  }
}

Vertex::Vertex(Dimension dim, Word bits) : dim_(dim), bits_(bits) {
  if (bits >= dim.vertex_count()) {
    throw Error(ErrorCategory::kPrecondition,
                "vertex word " + std::to_string(bits) + " out of range for n=" +
                    std::to_string(dim.value()));
  }
}

int Vertex::parity() const { return std::popcount(bits_) & 1; }

Vertex Vertex::Flip(int i) const {
  return Vertex(dim_, bits_ ^ (Word{1} << i));
}

Edge::Edge(Vertex endpoint, int bit_index)
    : even_end_(endpoint), bit_index_(bit_index) {
  if (bit_index < 0 || bit_index >= endpoint.dim().value()) {
    throw Error(ErrorCategory::kPrecondition,
                "edge coordinate " + std::to_string(bit_index) +
                    " out of range");
  }
  if (endpoint.parity() != 0) even_end_ = endpoint.Flip(bit_index);
}

Edge Edge::Between(Vertex u, Vertex v) {
  RequireSameDimension(u.dim(), v.dim(), "Edge::Between");
  const Word diff = u.bits() ^ v.bits();
  if (std::popcount(diff) != 1) {
    throw Error(ErrorCategory::kPrecondition,
                "vertices " + FormatVertex(u) + " and " + FormatVertex(v) +
                    " are not adjacent");
  }
  return Edge(u, std::countr_zero(diff));
}

VertexSet::VertexSet(Dimension dim, std::vector<Vertex> sorted_unique)
    : dim_(dim), members_(std::move(sorted_unique)) {
  if (dim.value() <= kMaskMaxDimension) {
    mask_.assign((dim.vertex_count() + 63) / 64, 0);
    for (const Vertex& v : members_) {
      mask_[v.bits() >> 6] |= std::uint64_t{1} << (v.bits() & 63);
    }
  }
}

VertexSet VertexSet::FromVertices(Dimension dim, std::vector<Vertex> vertices) {
  for (const Vertex& v : vertices) {
    RequireSameDimension(dim, v.dim(), "VertexSet");
  }
  std::sort(vertices.begin(), vertices.end());
  auto dup = std::adjacent_find(vertices.begin(), vertices.end());
  if (dup != vertices.end()) {
    throw Error(ErrorCategory::kPrecondition,
                "duplicate vertex " + FormatVertex(*dup));
  }
  return VertexSet(dim, std::move(vertices));
}

VertexSet VertexSet::FromBits(Dimension dim, std::vector<Word> bits) {
  std::vector<Vertex> vertices;
  vertices.reserve(bits.size());
  for (Word b : bits) vertices.emplace_back(dim, b);
  return FromVertices(dim, std::move(vertices));
}

bool VertexSet::Contains(Word bits) const {
  if (bits >= dim_.vertex_count()) return false;
  if (!mask_.empty()) return ((mask_[bits >> 6] >> (bits & 63)) & 1) != 0;
  return std::binary_search(members_.begin(), members_.end(),
                            Vertex(dim_, bits));
}

bool VertexSet::Contains(Vertex v) const {
  return v.dim() == dim_ && Contains(v.bits());
}

VertexSet VertexSet::Union(const VertexSet& other) const {
  RequireSameDimension(dim_, other.dim_, "VertexSet::Union");
  std::vector<Vertex> out;
  out.reserve(size() + other.size());
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(out));
  return VertexSet(dim_, std::move(out));
}

VertexSet VertexSet::Difference(const VertexSet& other) const {
  RequireSameDimension(dim_, other.dim_, "VertexSet::Difference");
  std::vector<Vertex> out;
  std::set_difference(members_.begin(), members_.end(),
                      other.members_.begin(), other.members_.end(),
                      std::back_inserter(out));
  return VertexSet(dim_, std::move(out));
}

bool VertexSet::IsSubsetOf(const VertexSet& other) const {
  if (dim_ != other.dim_) return false;
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

int HammingDistance(Vertex u, Vertex v) {
  RequireSameDimension(u.dim(), v.dim(), "HammingDistance");
  return std::popcount(u.bits() ^ v.bits());
}

std::vector<Vertex> Neighbors(Vertex v) {
  std::vector<Vertex> out;
  out.reserve(v.dim().value());
  for (int i = 0; i < v.dim().value(); ++i) out.push_back(v.Flip(i));
  return out;
}

std::vector<Edge> AllEdges(Dimension dim, const Budget& budget) {
  CheckBudget("edge enumeration", static_cast<double>(dim.value()) *
                                      std::ldexp(1.0, dim.value() - 1),
              budget.max_enumeration);
  std::vector<Edge> edges;
  edges.reserve(dim.edge_count());
  for (Word bits = 0; bits < dim.vertex_count(); ++bits) {
    if (std::popcount(bits) & 1) continue;
    for (int i = 0; i < dim.value(); ++i) edges.emplace_back(Vertex(dim, bits), i);
  }
  return edges;
}

VertexSet ParityClass(Dimension dim, int parity, const Budget& budget) {
  if (parity != 0 && parity != 1) {
    throw Error(ErrorCategory::kPrecondition, "parity must be 0 or 1");
  }
  CheckBudget("parity class enumeration", std::ldexp(1.0, dim.value() - 1),
              budget.max_enumeration);
  std::vector<Word> bits;
  bits.reserve(dim.vertex_count() / 2);
  for (Word b = 0; b < dim.vertex_count(); ++b) {
    if ((std::popcount(b) & 1) == parity) bits.push_back(b);
  }
  return VertexSet::FromBits(dim, std::move(bits));
}

VertexSet AllVertices(Dimension dim, const Budget& budget) {
  CheckBudget("vertex enumeration", std::ldexp(1.0, dim.value()),
              budget.max_enumeration);
  std::vector<Word> bits(dim.vertex_count());
  for (Word b = 0; b < dim.vertex_count(); ++b) bits[b] = b;
  return VertexSet::FromBits(dim, std::move(bits));
}

std::vector<VertexSet> InducedComponents(const VertexSet& set) {
  const Dimension dim = set.dim();
  std::vector<VertexSet> components;
  std::vector<bool> seen(set.size(), false);
  auto index_of = [&](Word bits) -> std::ptrdiff_t {
    auto it = std::lower_bound(set.begin(), set.end(), Vertex(dim, bits));
    if (it == set.end() || it->bits() != bits) return -1;
    return it - set.begin();
  };
  for (std::size_t start = 0; start < set.size(); ++start) {
    if (seen[start]) continue;
    std::vector<Vertex> component;
    std::deque<std::size_t> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
      const Vertex v = set[queue.front()];
      queue.pop_front();
      component.push_back(v);
      for (int i = 0; i < dim.value(); ++i) {
        const Word w = v.bits() ^ (Word{1} << i);
        if (!set.Contains(w)) continue;
        const auto j = static_cast<std::size_t>(index_of(w));
        if (!seen[j]) {
          seen[j] = true;
          queue.push_back(j);
        }
      }
    }
    components.push_back(VertexSet::FromVertices(dim, std::move(component)));
  }
  return components;
}

bool IsInducedConnected(const VertexSet& set) {
  return InducedComponents(set).size() <= 1;
}

std::string FormatVertex(Vertex v) {
  std::string out(v.dim().value(), '0');
  for (int i = 0; i < v.dim().value(); ++i) {
    if (v.coordinate(i)) out[i] = '1';
  }
  return out;
}

std::string FormatEdge(const Edge& e) {
  return FormatVertex(e.even_end()) + "-" + FormatVertex(e.odd_end());
}

std::string FormatVertexSet(const VertexSet& set) {
  std::string out;
  for (const Vertex& v : set) {
    if (!out.empty()) out += ' ';
    out += FormatVertex(v);
  }
  return out;
}

Vertex ParseVertex(std::string_view text, std::optional<Dimension> dim) {
  if (text.empty()) {
    throw Error(ErrorCategory::kParse, "empty vertex string");
  }
  if (text.size() > static_cast<std::size_t>(kMaxDimension)) {
    throw Error(ErrorCategory::kParse,
                "vertex string longer than " + std::to_string(kMaxDimension));
  }
  const Dimension d = dim.value_or(Dimension(static_cast<int>(text.size())));
  if (static_cast<int>(text.size()) != d.value()) {
    throw Error(ErrorCategory::kDimensionMismatch,
                "vertex '" + std::string(text) + "' has length " +
                    std::to_string(text.size()) + ", expected n=" +
                    std::to_string(d.value()));
  }
  Word bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      bits |= Word{1} << i;
    } else if (text[i] != '0') {
      throw Error(ErrorCategory::kParse,
                  "invalid character in vertex '" + std::string(text) + "'");
    }
  }
  return Vertex(d, bits);
}

}  // namespace hcsteiner
