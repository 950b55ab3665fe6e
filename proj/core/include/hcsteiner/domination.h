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

#ifndef HCSTEINER_DOMINATION_H_
#define HCSTEINER_DOMINATION_H_

#include <string>
#include <string_view>
#include <vector>

#include "hcsteiner/budget.h"
#include "hcsteiner/cube.h"

namespace hcsteiner {

enum class DominationMethod { kGreedy, kHammingCode, kExact, kSteinerized };

std::string_view MethodName(DominationMethod method);

// A dominating set of Q_n whose properties were checked directly against the
// cube when the certificate was built; nothing is taken on trust from the
// construction that produced the set.
class DominatingSetCertificate {
 public:
  // Throws Error(kPrecondition) if `set` does not dominate Q_n, or if
  // `require_connected` is set and Q_n[set] is disconnected.
  static DominatingSetCertificate Certify(VertexSet set,
                                          DominationMethod method,
                                          bool require_connected = false);

  const VertexSet& set() const { return set_; }
  bool connected() const { return connected_; }
  std::size_t size() const { return set_.size(); }
  DominationMethod method() const { return method_; }

 private:
  DominatingSetCertificate(VertexSet set, bool connected,
                           DominationMethod method)
      : set_(std::move(set)), connected_(connected), method_(method) {}

  VertexSet set_;
  bool connected_;
  DominationMethod method_;
};

// Number of members of `set` in the closed neighbourhood of each vertex,
// indexed by vertex word.
std::vector<int> CoverageCounts(const VertexSet& set);

bool IsDominating(const VertexSet& set);

// Greedy: repeatedly take the vertex covering the most uncovered vertices,
// smallest word on ties.
DominatingSetCertificate GreedyDominatingSet(Dimension dim,
                                             const Budget& budget = {});

// Hamming code of length n = 2^m - 1: words whose syndrome, the XOR of
// (i + 1) over set coordinates i, is zero. A perfect code, hence a perfect
// dominating set of size 2^n / (n + 1). Throws Error(kPrecondition) for
// other n.
DominatingSetCertificate HammingCodeDominatingSet(Dimension dim,
                                                  const Budget& budget = {});

// Connects a dominating set: while several components of Q_n[set] remain,
// joins the two at least Hamming distance (smallest vertex pair on ties) by
// the interior of ShortestPath. Throws Error(kPrecondition) if `set` is not
// dominating.
DominatingSetCertificate Steinerize(const VertexSet& set);

// Exact minima by search, n <= 5. Vertex-transitivity lets the search fix
// vertex 0 as a member.
int ExactDominationNumber(Dimension dim, const Budget& budget = {});
DominatingSetCertificate ExactConnectedDominatingSet(Dimension dim,
                                                     const Budget& budget = {});
int ExactConnectedDominationNumber(Dimension dim, const Budget& budget = {});

// Smallest connected dominating set among the constructions above that fit
// the budget: exact (n <= 4), steinerized Hamming code (n = 2^m - 1), and
// steinerized greedy.
DominatingSetCertificate BestConnectedDominatingSet(Dimension dim,
                                                    const Budget& budget = {});

// Text block:
//   method: <name>
//   size: <int>
//   connected: true|false
//   vertices: <coordinate strings separated by spaces>
std::string FormatCertificate(const DominatingSetCertificate& cert);

}  // namespace hcsteiner

#endif  // HCSTEINER_DOMINATION_H_
