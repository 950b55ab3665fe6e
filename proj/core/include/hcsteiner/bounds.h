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

#ifndef HCSTEINER_BOUNDS_H_
#define HCSTEINER_BOUNDS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <boost/rational.hpp>

#include "hcsteiner/autgroup.h"
#include "hcsteiner/budget.h"
#include "hcsteiner/cube.h"
#include "hcsteiner/domination.h"
#include "hcsteiner/steiner.h"

namespace hcsteiner {

using Rational = boost::rational<std::int64_t>;

// "p/q" with q > 0, also for integers ("8/1").
std::string FormatRational(const Rational& r);
std::int64_t Ceil(const Rational& r);

// Flips coordinate v_0 of every member. Swaps the parity classes.
VertexSet MirrorSet(const VertexSet& set);

// s + s^2 / (n 2^n) - (n + 1) / 2 for a set of s even vertices.
// Throws Error(kPrecondition) unless 1 <= s <= 2^(n-1).
Rational LowerBoundEven(Dimension dim, std::int64_t s);

// Lower bound for an arbitrary set: the even-set bound applied to the larger
// of S ∩ E_n and S ∩ O_n (the odd part is mapped onto even vertices by
// MirrorSet), since d is monotone under inclusion.
Rational LowerBoundForSet(const VertexSet& set);

// Trivial floor: |S| - 1, raised to |S| when |S| >= 2 and S lies in one
// parity class (each class is independent, so a tree on S alone is
// impossible).
int LowerFloor(const VertexSet& set);

// max(ceil(LowerBoundForSet), LowerFloor), except that the formula is skipped
// for a single vertex of Q_1, the one case where it exceeds d(S) (it gives
// 1/2 while d = 0). Elsewhere with d(S) <= |S| the majority class forces a
// star of at most n leaves, on which the formula stays below d.
int CertifiedLowerBound(const VertexSet& set);

struct UpperBoundTree {
  // After pruning non-terminal leaves; a tree spanning S.
  SteinerTree tree;
  int edge_count = 0;
  // Spanning tree of the dominating set plus one attachment edge per terminal
  // outside it, before pruning.
  int unpruned_edge_count = 0;
};

// Spanning tree of Q_n[cds] (BFS from its smallest vertex, neighbours in
// coordinate order), plus for each terminal outside cds an edge to its
// smallest neighbour in cds; non-terminal leaves are then pruned.
// Throws Error(kPrecondition) if cds is not connected.
UpperBoundTree BuildUpperBoundTree(const VertexSet& terminals,
                                   const DominatingSetCertificate& cds);

struct BoundsReport {
  Dimension dim;
  std::size_t set_size = 0;
  Rational lower;
  int lower_floor = 0;
  // max(ceil(lower), lower_floor).
  int certified_lower = 0;
  int upper = 0;
  std::optional<int> exact;
  std::string exact_omitted_reason;
  DominatingSetCertificate cds;
  SteinerTree upper_tree;
  std::optional<SteinerTree> exact_tree;
};

// Lower bounds, the constructive upper bound from `cds`, and d(S) when the
// exact solver fits the budget (otherwise exact_omitted_reason = "budget").
BoundsReport ComputeBounds(const VertexSet& terminals,
                           const DominatingSetCertificate& cds,
                           const Budget& budget = {}, bool try_exact = true);

// S (all even), an optimal tree T for S and an optimal tree for MirrorSet(S).
class IntersectionExperiment {
 public:
  // Solves both instances with SteinerExact.
  static IntersectionExperiment ForEvenSet(const VertexSet& set,
                                           const Budget& budget = {});

  // Throws Error(kPrecondition) if S is empty or not all even, the trees do
  // not span S and its mirror, or their sizes differ.
  IntersectionExperiment(VertexSet set, SteinerTree tree,
                         SteinerTree mirror_tree);

  Dimension dim() const { return set_.dim(); }
  const VertexSet& set() const { return set_; }
  const VertexSet& mirror() const { return mirror_; }
  const SteinerTree& tree() const { return tree_; }
  const SteinerTree& mirror_tree() const { return mirror_tree_; }
  int distance() const { return tree_.size(); }

 private:
  VertexSet set_;
  VertexSet mirror_;
  SteinerTree tree_;
  SteinerTree mirror_tree_;
};

struct Exhaustive {};
struct Sampled {
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
};
using ExperimentMode = std::variant<Exhaustive, Sampled>;

struct IntersectionSample {
  GammaElement first;
  GammaElement second;
  int overlap = 0;
};

struct IntersectionSummary {
  bool exhaustive = false;
  std::uint64_t pairs = 0;
  // Mean of X = |E(l1(T)) ∩ E(l2(T'))| over the pairs.
  Rational mean;
  // |E(T)| |E(T')| / (n 2^(n-1)); the exhaustive mean equals this.
  Rational predicted_mean;
  int max = 0;
  // min over pairs of 2 d(S) - X, and the right-hand side 2|S| - (n + 1).
  int min_lhs = 0;
  int rhs = 0;
  double standard_error = 0.0;
  // Only filled when requested.
  std::vector<IntersectionSample> transcript;
};

// Exhaustive mode walks Γ x Γ in (shift, mask) order; sampled mode draws
// independent uniform pairs from one mt19937_64 seeded with `seed`.
IntersectionSummary RunIntersectionExperiment(
    const IntersectionExperiment& experiment, const ExperimentMode& mode,
    const Budget& budget = {}, bool record_transcript = false);

struct MirrorUnionCheck {
  int union_edges = 0;
  int connector_edges = 0;
  // union_edges + connector_edges; an upper bound on d(S ∪ mirror(S)).
  int connected_edge_count = 0;
  // 2|S| - 1.
  int naive_floor = 0;
  bool connected = false;
};

// Joins T and T' by ShortestPath between their smallest vertices and checks
// the result is a connected subgraph containing S ∪ mirror(S).
MirrorUnionCheck ConnectTreeWithMirror(const IntersectionExperiment& experiment);

struct BootstrapCheck {
  // 2d - d^2 / (n 2^(n-1)) >= 2s - (n + 1).
  bool premise = false;
  // x = d - s > 0.
  bool assumption = false;
  // x >= s^2 / (n 2^n) - (n + 1) / 2.
  bool conclusion = false;
  // premise && assumption => conclusion.
  bool holds = true;
  // The implication held only because premise or assumption failed.
  bool vacuous = false;
  Rational premise_lhs;
  Rational premise_rhs;
  Rational conclusion_rhs;
};

// Exact evaluation of the algebra turning the averaged inequality into the
// lower bound. Throws Error(kPrecondition) unless d >= s - 1 and s >= 1.
BootstrapCheck VerifyBootstrap(Dimension dim, std::int64_t s, std::int64_t d);

struct SdiamReport {
  Dimension dim;
  int k = 0;
  std::uint64_t seed = 0;
  // Even-set bound for min(k, 2^(n-1)) vertices.
  Rational lower;
  int certified_lower = 0;
  // k + |cds| - 1, valid for every k-set.
  int upper = 0;
  // BuildUpperBoundTree on the witness set.
  int witness_upper = 0;
  VertexSet witness;
  std::optional<int> exact;
  std::optional<VertexSet> exact_argmax;
  std::string exact_omitted_reason;
  DominatingSetCertificate cds;
};

// Witness: the k smallest even vertices when k <= 2^(n-1); otherwise all
// even vertices plus k - 2^(n-1) odd ones drawn uniformly without
// replacement using `seed`. `exact` is the maximum of SteinerExact over all
// k-subsets, computed only when C(2^n, k) <= budget.max_subsets and the DP
// fits. Throws Error(kPrecondition) unless 2 <= k <= 2^n.
SdiamReport SdiamSandwich(Dimension dim, int k, const Budget& budget = {},
                          std::uint64_t seed = 0);

}  // namespace hcsteiner

#endif  // HCSTEINER_BOUNDS_H_
