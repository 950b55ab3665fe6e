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

#include "hcsteiner/bounds.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <iterator>
#include <map>
#include <numeric>
#include <optional>
#include <utility>

#include "hcsteiner/error.h"

namespace hcsteiner {

std::string FormatRational(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::int64_t Ceil(const Rational& r) {
  const std::int64_t p = r.numerator();
  const std::int64_t q = r.denominator();
  return p >= 0 ? (p + q - 1) / q : -((-p) / q);
}

VertexSet MirrorSet(const VertexSet& set) {
  std::vector<Vertex> out;
  out.reserve(set.size());
  for (const Vertex& v : set) out.push_back(v.Flip(0));
  return VertexSet::FromVertices(set.dim(), std::move(out));
}

namespace {

std::int64_t CubeEdgeCount(Dimension dim) {
  if (dim.value() > 40) {
    throw Error(ErrorCategory::kPrecondition,
                "exact bound arithmetic supports n <= 40");
  }
  return static_cast<std::int64_t>(dim.edge_count());
}

}  // namespace

Rational LowerBoundEven(Dimension dim, std::int64_t s) {
  const std::int64_t half = CubeEdgeCount(dim) / dim.value();  // 2^(n-1)
  if (s < 1 || s > half) {
    throw Error(ErrorCategory::kPrecondition,
                "even set size " + std::to_string(s) + " outside [1, 2^(n-1)]");
  }
  const std::int64_t n = dim.value();
  return Rational(s) + Rational(s * s, 2 * CubeEdgeCount(dim)) -
         Rational(n + 1, 2);
}

Rational LowerBoundForSet(const VertexSet& set) {
  std::int64_t even = 0;
  for (const Vertex& v : set) even += v.parity() == 0;
  const std::int64_t odd = static_cast<std::int64_t>(set.size()) - even;
  return LowerBoundEven(set.dim(), std::max(even, odd));
}

int LowerFloor(const VertexSet& set) {
  const int size = static_cast<int>(set.size());
  if (size < 2) return 0;
  const bool one_class =
      std::all_of(set.begin(), set.end(), [&](const Vertex& v) {
        return v.parity() == set[0].parity();
      });
  return one_class ? size : size - 1;
}

int CertifiedLowerBound(const VertexSet& set) {
  const int floor = LowerFloor(set);
  std::int64_t even = 0;
  for (const Vertex& v : set) even += v.parity() == 0;
  const std::int64_t majority =
      std::max(even, static_cast<std::int64_t>(set.size()) - even);
  if (majority == 1 && set.dim().value() == 1) return floor;
  return static_cast<int>(
      std::max<std::int64_t>(Ceil(LowerBoundForSet(set)), floor));
}

UpperBoundTree BuildUpperBoundTree(const VertexSet& terminals,
                                   const DominatingSetCertificate& cds) {
  if (!cds.connected()) {
    throw Error(ErrorCategory::kPrecondition,
                "upper bound tree needs a connected dominating set");
  }
  const VertexSet& core = cds.set();
  if (core.dim() != terminals.dim()) {
    throw Error(ErrorCategory::kDimensionMismatch,
                "terminals and dominating set from different cubes");
  }
  const Dimension dim = core.dim();
  std::vector<Edge> edges;
  std::map<Word, bool> seen;
  std::deque<Vertex> queue{core[0]};
  seen[core[0].bits()] = true;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (int i = 0; i < dim.value(); ++i) {
      const Vertex w = v.Flip(i);
      if (!core.Contains(w) || seen[w.bits()]) continue;
      seen[w.bits()] = true;
      edges.emplace_back(v, i);
      queue.push_back(w);
    }
  }
  for (const Vertex& t : terminals) {
    if (core.Contains(t)) continue;
    std::optional<int> best;
    for (int i = 0; i < dim.value(); ++i) {
      const Vertex w = t.Flip(i);
      if (core.Contains(w) && (!best || w < t.Flip(*best))) best = i;
    }
    if (!best) {
      throw Error(ErrorCategory::kPrecondition,
                  "terminal " + FormatVertex(t) + " is not dominated");
    }
    edges.emplace_back(t, *best);
  }
  const int unpruned = static_cast<int>(edges.size());
  SteinerTree full(dim, std::move(edges), terminals);
  SteinerTree pruned = PruneNonTerminalLeaves(full, terminals);
  const int count = pruned.size();
  return {std::move(pruned), count, unpruned};
}

BoundsReport ComputeBounds(const VertexSet& terminals,
                           const DominatingSetCertificate& cds,
                           const Budget& budget, bool try_exact) {
  UpperBoundTree upper = BuildUpperBoundTree(terminals, cds);
  const Rational lower = LowerBoundForSet(terminals);
  const int floor = LowerFloor(terminals);
  BoundsReport report{
      .dim = terminals.dim(),
      .set_size = terminals.size(),
      .lower = lower,
      .lower_floor = floor,
      .certified_lower = CertifiedLowerBound(terminals),
      .upper = upper.edge_count,
      .exact = std::nullopt,
      .exact_omitted_reason = try_exact ? "" : "not requested",
      .cds = cds,
      .upper_tree = std::move(upper.tree),
      .exact_tree = std::nullopt,
  };
  if (try_exact) {
    try {
      SteinerResult result = SteinerExact(SteinerInstance(terminals), budget);
      report.exact = result.distance;
      report.exact_tree = std::move(result.tree);
    } catch (const BudgetExceeded&) {
      report.exact_omitted_reason = "budget";
    }
  }
  return report;
}

IntersectionExperiment IntersectionExperiment::ForEvenSet(
    const VertexSet& set, const Budget& budget) {
  SteinerResult tree = SteinerExact(SteinerInstance(set), budget);
  SteinerResult mirror = SteinerExact(SteinerInstance(MirrorSet(set)), budget);
  return IntersectionExperiment(set, std::move(tree.tree),
                                std::move(mirror.tree));
}

IntersectionExperiment::IntersectionExperiment(VertexSet set, SteinerTree tree,
                                               SteinerTree mirror_tree)
    : set_(std::move(set)),
      mirror_(MirrorSet(set_)),
      tree_(std::move(tree)),
      mirror_tree_(std::move(mirror_tree)) {
  if (set_.empty()) {
    throw Error(ErrorCategory::kPrecondition, "experiment needs terminals");
  }
  for (const Vertex& v : set_) {
    if (v.parity() != 0) {
      throw Error(ErrorCategory::kPrecondition,
                  "experiment set must be all even; " + FormatVertex(v) +
                      " is odd");
    }
  }
  if (tree_.dim() != set_.dim() || mirror_tree_.dim() != set_.dim()) {
    throw Error(ErrorCategory::kDimensionMismatch,
                "experiment trees from a different cube");
  }
  if (const TreeCheck c = CheckSteinerTree(tree_, set_, false); !c.ok) {
    throw Error(ErrorCategory::kPrecondition, "tree for S: " + c.reason);
  }
  if (const TreeCheck c = CheckSteinerTree(mirror_tree_, mirror_, false);
      !c.ok) {
    throw Error(ErrorCategory::kPrecondition, "tree for mirror: " + c.reason);
  }
  if (tree_.size() != mirror_tree_.size()) {
    throw Error(ErrorCategory::kPrecondition,
                "trees for S and its mirror differ in size");
  }
}

namespace {

std::vector<Word> EdgeKeys(const SteinerTree& tree, const GammaElement& g) {
  std::vector<Word> keys;
  keys.reserve(tree.size());
  for (const Edge& e : tree.edges()) keys.push_back(g.Apply(e).key());
  return keys;
}

}  // namespace

IntersectionSummary RunIntersectionExperiment(
    const IntersectionExperiment& experiment, const ExperimentMode& mode,
    const Budget& budget, bool record_transcript) {
  const Dimension dim = experiment.dim();
  const std::int64_t edge_count = CubeEdgeCount(dim);
  const int d = experiment.distance();

  IntersectionSummary summary;
  summary.predicted_mean =
      Rational(static_cast<std::int64_t>(experiment.tree().size()) *
                   experiment.mirror_tree().size(),
               edge_count);
  summary.rhs = 2 * static_cast<int>(experiment.set().size()) -
                (dim.value() + 1);
  summary.min_lhs = 2 * d;

  std::int64_t total = 0;
  // Σ X^2, for the standard error of sampled runs.
  double total_squares = 0.0;
  auto record = [&](const GammaElement& a, const GammaElement& b, int x) {
    total += x;
    total_squares += static_cast<double>(x) * x;
    summary.max = std::max(summary.max, x);
    summary.min_lhs = std::min(summary.min_lhs, 2 * d - x);
    if (record_transcript) summary.transcript.push_back({a, b, x});
  };

  if (std::holds_alternative<Exhaustive>(mode)) {
    const double order = static_cast<double>(edge_count);
    CheckBudget("exhaustive pair sweep", order * order,
                budget.max_group_pairs);
    const std::vector<GammaElement> group = EnumerateGroup(dim, budget);
    std::vector<std::vector<Word>> mirror_images;
    mirror_images.reserve(group.size());
    for (const GammaElement& g : group) {
      mirror_images.push_back(EdgeKeys(experiment.mirror_tree(), g));
    }
    std::vector<bool> marked(dim.vertex_count() * dim.value(), false);
    for (const GammaElement& first : group) {
      const std::vector<Word> image = EdgeKeys(experiment.tree(), first);
      for (Word key : image) marked[key] = true;
      for (std::size_t j = 0; j < group.size(); ++j) {
        int x = 0;
        for (Word key : mirror_images[j]) x += marked[key];
        record(first, group[j], x);
      }
      for (Word key : image) marked[key] = false;
    }
    summary.exhaustive = true;
    summary.pairs = group.size() * group.size();
  } else {
    const Sampled& sampled = std::get<Sampled>(mode);
    if (sampled.count == 0) {
      throw Error(ErrorCategory::kPrecondition, "sample count must be > 0");
    }
    CheckBudget("sampled pairs", static_cast<double>(sampled.count),
                budget.max_group_pairs);
    Rng rng(sampled.seed);
    for (std::uint64_t i = 0; i < sampled.count; ++i) {
      const GammaElement first = SampleUniform(dim, rng);
      const GammaElement second = SampleUniform(dim, rng);
      std::vector<Word> a = EdgeKeys(experiment.tree(), first);
      std::vector<Word> b = EdgeKeys(experiment.mirror_tree(), second);
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      std::vector<Word> common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                            std::back_inserter(common));
      record(first, second, static_cast<int>(common.size()));
    }
    summary.pairs = sampled.count;
  }
  const auto pairs = static_cast<std::int64_t>(summary.pairs);
  summary.mean = Rational(total, pairs);
  const double mean = static_cast<double>(total) / static_cast<double>(pairs);
  if (pairs > 1) {
    const double variance =
        (total_squares - static_cast<double>(pairs) * mean * mean) /
        static_cast<double>(pairs - 1);
    summary.standard_error =
        std::sqrt(std::max(variance, 0.0) / static_cast<double>(pairs));
  }
  return summary;
}

MirrorUnionCheck ConnectTreeWithMirror(
    const IntersectionExperiment& experiment) {
  const SteinerTree& tree = experiment.tree();
  const SteinerTree& mirror = experiment.mirror_tree();
  std::vector<Edge> edges(tree.edges().begin(), tree.edges().end());
  edges.insert(edges.end(), mirror.edges().begin(), mirror.edges().end());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  MirrorUnionCheck check;
  check.union_edges = static_cast<int>(edges.size());
  const std::vector<Edge> connector =
      ShortestPath(tree.vertices()[0], mirror.vertices()[0]);
  check.connector_edges = static_cast<int>(connector.size());
  check.connected_edge_count = check.union_edges + check.connector_edges;
  check.naive_floor = 2 * static_cast<int>(experiment.set().size()) - 1;

  edges.insert(edges.end(), connector.begin(), connector.end());
  const VertexSet terminals = experiment.set().Union(experiment.mirror());
  const SteinerTree joined(experiment.dim(), std::move(edges), terminals);
  // Union-find over the joined edge list.
  const VertexSet& vertices = joined.vertices();
  std::vector<std::size_t> parent(vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto index = [&](Vertex v) {
    return static_cast<std::size_t>(
        std::lower_bound(vertices.begin(), vertices.end(), v) -
        vertices.begin());
  };
  std::size_t components = vertices.size();
  for (const Edge& e : joined.edges()) {
    const std::size_t a = find(index(e.even_end()));
    const std::size_t b = find(index(e.odd_end()));
    if (a != b) {
      parent[std::max(a, b)] = std::min(a, b);
      --components;
    }
  }
  check.connected = components == 1 && terminals.IsSubsetOf(vertices);
  return check;
}

BootstrapCheck VerifyBootstrap(Dimension dim, std::int64_t s, std::int64_t d) {
  if (s < 1 || d < s - 1) {
    throw Error(ErrorCategory::kPrecondition,
                "bootstrap needs s >= 1 and d >= s - 1");
  }
  const std::int64_t edges = CubeEdgeCount(dim);  // n 2^(n-1)
  const std::int64_t n = dim.value();
  BootstrapCheck check;
  check.premise_lhs = Rational(2 * d) - Rational(d * d, edges);
  check.premise_rhs = Rational(2 * s - (n + 1));
  check.premise = check.premise_lhs >= check.premise_rhs;
  check.assumption = d - s > 0;
  check.conclusion_rhs = Rational(s * s, 2 * edges) - Rational(n + 1, 2);
  check.conclusion = Rational(d - s) >= check.conclusion_rhs;
  check.vacuous = !(check.premise && check.assumption);
  check.holds = check.vacuous || check.conclusion;
  return check;
}

namespace {

// C(n, k) as a double, enough to compare against budgets.
double Binomial(double n, double k) {
  return std::exp(std::lgamma(n + 1) - std::lgamma(k + 1) -
                  std::lgamma(n - k + 1));
}

}  // namespace

SdiamReport SdiamSandwich(Dimension dim, int k, const Budget& budget,
                          std::uint64_t seed) {
  CheckBudget("sdiam vertex enumeration", std::ldexp(1.0, dim.value()),
              budget.max_enumeration);
  const std::int64_t vertex_count = static_cast<std::int64_t>(dim.vertex_count());
  const std::int64_t half = vertex_count / 2;
  if (k < 2 || k > vertex_count) {
    throw Error(ErrorCategory::kPrecondition,
                "k must lie in [2, 2^n], got " + std::to_string(k));
  }

  const VertexSet even = ParityClass(dim, 0, budget);
  std::vector<Vertex> witness;
  if (k <= half) {
    witness.assign(even.begin(), even.begin() + k);
  } else {
    witness.assign(even.begin(), even.end());
    const VertexSet odd = ParityClass(dim, 1, budget);
    Rng rng(seed);
    std::sample(odd.begin(), odd.end(), std::back_inserter(witness), k - half,
                rng);
  }
  VertexSet witness_set = VertexSet::FromVertices(dim, std::move(witness));

  DominatingSetCertificate cds = BestConnectedDominatingSet(dim, budget);
  const Rational lower = LowerBoundEven(dim, std::min<std::int64_t>(k, half));
  const int witness_upper = BuildUpperBoundTree(witness_set, cds).edge_count;
  SdiamReport report{
      .dim = dim,
      .k = k,
      .seed = seed,
      .lower = lower,
      .certified_lower = CertifiedLowerBound(witness_set),
      .upper = k + static_cast<int>(cds.size()) - 1,
      .witness_upper = witness_upper,
      .witness = std::move(witness_set),
      .exact = std::nullopt,
      .exact_argmax = std::nullopt,
      .exact_omitted_reason = "",
      .cds = std::move(cds),
  };

  const double subsets =
      Binomial(static_cast<double>(vertex_count), static_cast<double>(k));
  const double dp_states = std::pow(3.0, k) * std::ldexp(1.0, dim.value());
  if (subsets > static_cast<double>(budget.max_subsets) + 0.5 ||
      dp_states > static_cast<double>(budget.max_dp_states) ||
      std::ldexp(1.0, k - 1 + dim.value()) >
          static_cast<double>(budget.max_table_entries)) {
    report.exact_omitted_reason = "budget";
    return report;
  }
  std::vector<Word> pick(k);
  std::iota(pick.begin(), pick.end(), Word{0});
  int best = -1;
  while (true) {
    VertexSet set = VertexSet::FromBits(dim, pick);
    const int d = SteinerExact(SteinerInstance(set), budget).distance;
    if (d > best) {
      best = d;
      report.exact_argmax = std::move(set);
    }
    int i = k - 1;
    while (i >= 0 &&
           pick[i] == static_cast<Word>(vertex_count - k + i)) {
      --i;
    }
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  report.exact = best;
  return report;
}

}  // namespace hcsteiner
