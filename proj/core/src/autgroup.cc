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

#include "hcsteiner/autgroup.h"

#include <bit>
#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include "hcsteiner/error.h"

namespace hcsteiner {

Word RotateCoordinates(Word bits, int shift, Dimension dim) {
  const int n = dim.value();
  shift %= n;
  if (shift < 0) shift += n;
  if (shift == 0) return bits;
  const Word mask = dim.full_mask();
  return ((bits >> shift) | (bits << (n - shift))) & mask;
}

GammaElement::GammaElement(Dimension dim, int shift, Word flip_mask)
    : dim_(dim), shift_(shift), flip_mask_(flip_mask) {
  if (shift < 0 || shift >= dim.value()) {
    throw Error(ErrorCategory::kPrecondition,
                "shift " + std::to_string(shift) + " outside [0, n)");
  }
  if (flip_mask > dim.full_mask()) {
    throw Error(ErrorCategory::kPrecondition, "flip mask out of range");
  }
  if (std::popcount(flip_mask) % 2 != 0) {
    throw Error(ErrorCategory::kPrecondition,
                "flip mask must flip an even number of coordinates");
  }
}

GammaElement GammaElement::DoubleFlip(Dimension dim, int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= dim.value() || j >= dim.value()) {
    throw Error(ErrorCategory::kPrecondition,
                "double flip needs two distinct coordinates in [0, n)");
  }
  return {dim, 0, (Word{1} << i) | (Word{1} << j)};
}

Vertex GammaElement::Apply(Vertex v) const {
  if (v.dim() != dim_) {
    throw Error(ErrorCategory::kDimensionMismatch,
                "group element and vertex from different cubes");
  }
  return Vertex(dim_, ApplyBits(v.bits()));
}

Edge GammaElement::Apply(const Edge& e) const {
  // The image of the even endpoint stays even, so only the coordinate index
  // moves: coordinate b of the input lands at (b - shift) mod n.
  const Vertex even = Apply(e.even_end());
  const int n = dim_.value();
  return Edge(even, ((e.bit_index() - shift_) % n + n) % n);
}

GammaElement Compose(const GammaElement& outer, const GammaElement& inner) {
  if (outer.dim() != inner.dim()) {
    throw Error(ErrorCategory::kDimensionMismatch,
                "composing elements from different cubes");
  }
  const Dimension dim = outer.dim();
  return GammaElement(
      dim, (outer.shift() + inner.shift()) % dim.value(),
      RotateCoordinates(inner.flip_mask(), outer.shift(), dim) ^
          outer.flip_mask());
}

GammaElement Inverse(const GammaElement& g) {
  const Dimension dim = g.dim();
  const int back = (dim.value() - g.shift()) % dim.value();
  return GammaElement(dim, back, RotateCoordinates(g.flip_mask(), back, dim));
}

std::vector<GammaElement> EnumerateGroup(Dimension dim, const Budget& budget) {
  CheckBudget("group enumeration",
              static_cast<double>(dim.value()) *
                  std::ldexp(1.0, dim.value() - 1),
              budget.max_enumeration);
  std::vector<GammaElement> out;
  out.reserve(dim.edge_count());
  for (int shift = 0; shift < dim.value(); ++shift) {
    for (Word mask = 0; mask < dim.vertex_count(); ++mask) {
      if (std::popcount(mask) % 2 == 0) out.emplace_back(dim, shift, mask);
    }
  }
  return out;
}

GammaElement SampleUniform(Dimension dim, Rng& rng) {
  const int n = dim.value();
  std::uniform_int_distribution<int> shift_dist(0, n - 1);
  const int shift = shift_dist(rng);
  Word mask = 0;
  if (n > 1) {
    // mt19937_64 yields 64 uniform bits per draw; n - 1 <= 62 fit in one.
    mask = rng() & ((Word{1} << (n - 1)) - 1);
    if (std::popcount(mask) % 2 != 0) mask |= Word{1} << (n - 1);
  }
  return GammaElement(dim, shift, mask);
}

TransitivityReport VerifySharpEdgeTransitivity(Dimension dim,
                                               const Budget& budget) {
  const double order =
      static_cast<double>(dim.value()) * std::ldexp(1.0, dim.value() - 1);
  CheckBudget("edge transitivity sweep", order * order,
              budget.max_group_pairs);
  const std::vector<GammaElement> group = EnumerateGroup(dim, budget);
  const std::vector<Edge> edges = AllEdges(dim, budget);

  TransitivityReport report;
  report.group_order = group.size();
  report.edge_count = edges.size();
  report.ordered_pairs = edges.size() * edges.size();

  // key() spans [0, n * 2^n), small at the sizes this is used for.
  std::vector<std::size_t> index_of_key(dim.vertex_count() * dim.value(), 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    index_of_key[edges[i].key()] = i;
  }
  std::vector<std::uint64_t> hits(edges.size());
  for (const Edge& source : edges) {
    std::fill(hits.begin(), hits.end(), 0);
    for (const GammaElement& g : group) {
      ++hits[index_of_key[g.Apply(source).key()]];
    }
    for (std::size_t t = 0; t < edges.size(); ++t) {
      if (hits[t] != 1) {
        report.ok = false;
        if (!report.counterexample) {
          report.counterexample.emplace(source, edges[t]);
          report.counterexample_count = hits[t];
        }
      }
    }
  }
  return report;
}

std::string FormatGammaElement(const GammaElement& g) {
  return "s=" + std::to_string(g.shift()) +
         ";m=" + FormatVertex(Vertex(g.dim(), g.flip_mask()));
}

GammaElement ParseGammaElement(std::string_view text) {
  auto fail = [&]() -> Error {
    return Error(ErrorCategory::kParse,
                 "malformed group element '" + std::string(text) + "'");
  };
  if (!text.starts_with("s=")) throw fail();
  const std::size_t sep = text.find(";m=");
  if (sep == std::string_view::npos) throw fail();
  int shift = 0;
  const std::string_view shift_text = text.substr(2, sep - 2);
  auto [ptr, ec] = std::from_chars(shift_text.data(),
                                   shift_text.data() + shift_text.size(), shift);
  if (ec != std::errc() || ptr != shift_text.data() + shift_text.size()) {
    throw fail();
  }
  const Vertex mask = ParseVertex(text.substr(sep + 3));
  return GammaElement(mask.dim(), shift, mask.bits());
}

}  // namespace hcsteiner
