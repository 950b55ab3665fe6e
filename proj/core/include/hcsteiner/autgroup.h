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

#ifndef HCSTEINER_AUTGROUP_H_
#define HCSTEINER_AUTGROUP_H_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hcsteiner/budget.h"
#include "hcsteiner/cube.h"

namespace hcsteiner {

// Random source used throughout; owned by the caller.
using Rng = std::mt19937_64;

// Rotates the low n bits so that bit i of the result is bit (i + shift) mod n
// of the input, i.e. `shift` applications of the left coordinate shift
// v_0 v_1 ... v_{n-1} -> v_1 ... v_{n-1} v_0.
Word RotateCoordinates(Word bits, int shift, Dimension dim);

// Element of the parity-preserving subgroup generated by the coordinate
// rotation and all double flips. Normal form: rotate by `shift`, then XOR
// with `flip_mask` (which always has even popcount).
class GammaElement {
 public:
  static GammaElement Identity(Dimension dim) { return {dim, 0, 0}; }
  // The rotation generator.
  static GammaElement Rotation(Dimension dim) { return {dim, dim.value() == 1 ? 0 : 1, 0}; }
  // The generator flipping coordinates i and j (i != j).
  static GammaElement DoubleFlip(Dimension dim, int i, int j);

  // Throws Error(kPrecondition) if shift is outside [0, n), the mask is out of
  // range, or its popcount is odd.
  GammaElement(Dimension dim, int shift, Word flip_mask);

  Dimension dim() const { return dim_; }
  int shift() const { return shift_; }
  Word flip_mask() const { return flip_mask_; }

  Word ApplyBits(Word bits) const {
    return RotateCoordinates(bits, shift_, dim_) ^ flip_mask_;
  }
  Vertex Apply(Vertex v) const;
  Edge Apply(const Edge& e) const;

  friend auto operator<=>(const GammaElement&, const GammaElement&) = default;

 private:
  Dimension dim_;
  int shift_;
  Word flip_mask_;
};

// h with h(v) = outer(inner(v)). Throws Error(kDimensionMismatch).
GammaElement Compose(const GammaElement& outer, const GammaElement& inner);
GammaElement Inverse(const GammaElement& g);

// All n * 2^(n-1) elements ordered by (shift, flip_mask).
std::vector<GammaElement> EnumerateGroup(Dimension dim,
                                         const Budget& budget = {});

// Uniform element: uniform shift, n-1 fair bits for coordinates 0..n-2 and
// the last coordinate fixed to make the flip count even.
GammaElement SampleUniform(Dimension dim, Rng& rng);

struct TransitivityReport {
  bool ok = true;
  std::uint64_t group_order = 0;
  std::uint64_t edge_count = 0;
  std::uint64_t ordered_pairs = 0;
  // First (source, target) pair whose number of mapping elements is not 1.
  std::optional<std::pair<Edge, Edge>> counterexample;
  std::uint64_t counterexample_count = 0;
};

// Exhaustively counts, for every ordered edge pair (e1, e2), the elements
// mapping e1 onto e2.
TransitivityReport VerifySharpEdgeTransitivity(Dimension dim,
                                               const Budget& budget = {});

// "s=<shift>;m=<mask as coordinate string>".
std::string FormatGammaElement(const GammaElement& g);
GammaElement ParseGammaElement(std::string_view text);

}  // namespace hcsteiner

#endif  // HCSTEINER_AUTGROUP_H_
