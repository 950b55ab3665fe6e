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

#include "hcsteiner/domination.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <tuple>
#include <utility>

#include "hcsteiner/error.h"
#include "hcsteiner/steiner.h"

namespace hcsteiner {

std::string_view MethodName(DominationMethod method) {
  switch (method) {
    case DominationMethod::kGreedy:
      return "greedy";
    case DominationMethod::kHammingCode:
      return "hamming_code";
    case DominationMethod::kExact:
      return "exact";
    case DominationMethod::kSteinerized:
      return "steinerized";
  }
  return "unknown";
}

std::vector<int> CoverageCounts(const VertexSet& set) {
  const Dimension dim = set.dim();
  if (dim.value() > VertexSet::kMaskMaxDimension) {
    throw Error(ErrorCategory::kPrecondition,
                "coverage counts need n <= " +
                    std::to_string(VertexSet::kMaskMaxDimension));
  }
  std::vector<int> counts(dim.vertex_count(), 0);
  for (const Vertex& v : set) {
    ++counts[v.bits()];
    for (int i = 0; i < dim.value(); ++i) ++counts[v.bits() ^ (Word{1} << i)];
  }
  return counts;
}

bool IsDominating(const VertexSet& set) {
  const std::vector<int> counts = CoverageCounts(set);
  return std::none_of(counts.begin(), counts.end(),
                      [](int c) { return c == 0; });
}

DominatingSetCertificate DominatingSetCertificate::Certify(
    VertexSet set, DominationMethod method, bool require_connected) {
  if (!IsDominating(set)) {
    throw Error(ErrorCategory::kPrecondition,
                std::string(MethodName(method)) +
                    " set does not dominate Q_" +
                    std::to_string(set.dim().value()));
  }
  const bool connected = IsInducedConnected(set);
  if (require_connected && !connected) {
    throw Error(ErrorCategory::kPrecondition,
                std::string(MethodName(method)) + " set is not connected");
  }
  return DominatingSetCertificate(std::move(set), connected, method);
}

DominatingSetCertificate GreedyDominatingSet(Dimension dim,
                                             const Budget& budget) {
  CheckBudget("greedy domination", std::ldexp(1.0, dim.value()),
              budget.max_enumeration);
  const int n = dim.value();
  const Word size = dim.vertex_count();
  std::vector<bool> covered(size, false);
  // gain[v] = uncovered vertices in the closed neighbourhood of v.
  std::vector<int> gain(size, n + 1);
  Word uncovered = size;
  std::vector<Word> chosen;
  auto cover = [&](Word w) {
    if (covered[w]) return;
    covered[w] = true;
    --uncovered;
    --gain[w];
    for (int i = 0; i < n; ++i) --gain[w ^ (Word{1} << i)];
  };
  while (uncovered > 0) {
    Word best = 0;
    for (Word v = 1; v < size; ++v) {
      if (gain[v] > gain[best]) best = v;
    }
    chosen.push_back(best);
    cover(best);
    for (int i = 0; i < n; ++i) cover(best ^ (Word{1} << i));
  }
  return DominatingSetCertificate::Certify(
      VertexSet::FromBits(dim, std::move(chosen)), DominationMethod::kGreedy);
}

DominatingSetCertificate HammingCodeDominatingSet(Dimension dim,
                                                  const Budget& budget) {
  const int n = dim.value();
  if (!std::has_single_bit(static_cast<unsigned>(n) + 1)) {
    throw Error(ErrorCategory::kPrecondition,
                "Hamming code needs n = 2^m - 1, got n=" + std::to_string(n));
  }
  CheckBudget("Hamming code enumeration", std::ldexp(1.0, n),
              budget.max_enumeration);
  std::vector<Word> codewords;
  for (Word v = 0; v < dim.vertex_count(); ++v) {
    Word syndrome = 0;
    for (int i = 0; i < n; ++i) {
      if ((v >> i) & 1) syndrome ^= static_cast<Word>(i + 1);
    }
    if (syndrome == 0) codewords.push_back(v);
  }
  return DominatingSetCertificate::Certify(
      VertexSet::FromBits(dim, std::move(codewords)),
      DominationMethod::kHammingCode);
}

DominatingSetCertificate Steinerize(const VertexSet& set) {
  if (!IsDominating(set)) {
    throw Error(ErrorCategory::kPrecondition,
                "steinerize: input does not dominate Q_" +
                    std::to_string(set.dim().value()));
  }
  VertexSet current = set;
  while (true) {
    const std::vector<VertexSet> components = InducedComponents(current);
    if (components.size() <= 1) break;
    std::optional<std::tuple<int, Vertex, Vertex>> best;
    for (std::size_t a = 0; a < components.size(); ++a) {
      for (std::size_t b = a + 1; b < components.size(); ++b) {
        for (const Vertex& u : components[a]) {
          for (const Vertex& v : components[b]) {
            auto candidate = std::make_tuple(HammingDistance(u, v),
                                             std::min(u, v), std::max(u, v));
            if (!best || candidate < *best) best = candidate;
          }
        }
      }
    }
    const auto& [distance, u, v] = *best;
    std::vector<Vertex> added;
    for (const Edge& e : ShortestPath(u, v)) {
      added.push_back(e.even_end());
      added.push_back(e.odd_end());
    }
    std::sort(added.begin(), added.end());
    added.erase(std::unique(added.begin(), added.end()), added.end());
    std::erase_if(added, [&](const Vertex& w) { return current.Contains(w); });
    current = current.Union(VertexSet::FromVertices(set.dim(), added));
  }
  return DominatingSetCertificate::Certify(
      std::move(current), DominationMethod::kSteinerized, true);
}

namespace {

constexpr int kExactMaxDimension = 5;

struct SmallCube {
  explicit SmallCube(Dimension dim)
      : n(dim.value()), size(static_cast<int>(dim.vertex_count())) {
    if (n > kExactMaxDimension) {
      throw Error(ErrorCategory::kPrecondition,
                  "exact domination search supports n <= " +
                      std::to_string(kExactMaxDimension));
    }
    all = size == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1;
    open.resize(size);
    closed.resize(size);
    for (int v = 0; v < size; ++v) {
      for (int i = 0; i < n; ++i) open[v] |= std::uint64_t{1} << (v ^ (1 << i));
      closed[v] = open[v] | (std::uint64_t{1} << v);
    }
  }

  int n;
  int size;
  std::uint64_t all = 0;
  std::vector<std::uint64_t> open;
  std::vector<std::uint64_t> closed;
};

class NodeCounter {
 public:
  NodeCounter(const char* what, std::uint64_t limit)
      : what_(what), limit_(limit) {}
  void Tick() {
    if (++count_ > limit_) {
      throw BudgetExceeded(what_, static_cast<double>(count_),
                           static_cast<double>(limit_));
    }
  }

 private:
  const char* what_;
  std::uint64_t limit_;
  std::uint64_t count_ = 0;
};

// Can `remaining` more picks finish covering? Branches on the closed
// neighbourhood of the smallest uncovered vertex.
bool DominateWithin(const SmallCube& cube, std::uint64_t covered,
                    int remaining, NodeCounter& nodes) {
  nodes.Tick();
  if (covered == cube.all) return true;
  if (remaining == 0) return false;
  if (std::popcount(covered) + remaining * (cube.n + 1) < cube.size) {
    return false;
  }
  const int u = std::countr_zero(~covered & cube.all);
  for (std::uint64_t c = cube.closed[u]; c != 0; c &= c - 1) {
    const int w = std::countr_zero(c);
    if (DominateWithin(cube, covered | cube.closed[w], remaining - 1, nodes)) {
      return true;
    }
  }
  return false;
}

// Enumerates connected vertex sets containing vertex 0 (ESU-style: each set
// is produced once) and stops at the first one of `target` vertices that
// dominates. `covered` doubles as the closed neighbourhood of `members`.
bool ConnectedDominating(const SmallCube& cube, std::uint64_t members,
                         std::uint64_t extension, std::uint64_t covered,
                         int target, NodeCounter& nodes,
                         std::uint64_t& found) {
  nodes.Tick();
  const int size = std::popcount(members);
  if (size == target) {
    if (covered == cube.all) {
      found = members;
      return true;
    }
    return false;
  }
  // A vertex added next is adjacent to a member, so it gains at most n - 1.
  if (std::popcount(covered) + (target - size) * (cube.n - 1) < cube.size) {
    return false;
  }
  while (extension != 0) {
    const int w = std::countr_zero(extension);
    extension &= extension - 1;
    const std::uint64_t next_extension = extension | (cube.open[w] & ~covered);
    if (ConnectedDominating(cube, members | (std::uint64_t{1} << w),
                            next_extension, covered | cube.closed[w], target,
                            nodes, found)) {
      return true;
    }
  }
  return false;
}

}  // namespace

int ExactDominationNumber(Dimension dim, const Budget& budget) {
  const SmallCube cube(dim);
  NodeCounter nodes("exact domination search", budget.max_search_nodes);
  for (int size = 1;; ++size) {
    if (DominateWithin(cube, cube.closed[0], size - 1, nodes)) return size;
  }
}

DominatingSetCertificate ExactConnectedDominatingSet(Dimension dim,
                                                     const Budget& budget) {
  const SmallCube cube(dim);
  NodeCounter nodes("exact connected domination search",
                    budget.max_search_nodes);
  for (int size = 1;; ++size) {
    std::uint64_t found = 0;
    if (ConnectedDominating(cube, 1, cube.open[0], cube.closed[0], size, nodes,
                            found)) {
      std::vector<Word> bits;
      for (std::uint64_t m = found; m != 0; m &= m - 1) {
        bits.push_back(static_cast<Word>(std::countr_zero(m)));
      }
      return DominatingSetCertificate::Certify(
          VertexSet::FromBits(dim, std::move(bits)), DominationMethod::kExact,
          true);
    }
  }
}

int ExactConnectedDominationNumber(Dimension dim, const Budget& budget) {
  return static_cast<int>(ExactConnectedDominatingSet(dim, budget).size());
}

DominatingSetCertificate BestConnectedDominatingSet(Dimension dim,
                                                    const Budget& budget) {
  std::vector<DominatingSetCertificate> candidates;
  if (dim.value() <= 4) {
    candidates.push_back(ExactConnectedDominatingSet(dim, budget));
  }
  if (std::has_single_bit(static_cast<unsigned>(dim.value()) + 1)) {
    candidates.push_back(
        Steinerize(HammingCodeDominatingSet(dim, budget).set()));
  }
  candidates.push_back(Steinerize(GreedyDominatingSet(dim, budget).set()));
  auto best = std::min_element(
      candidates.begin(), candidates.end(),
      [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return *best;
}

std::string FormatCertificate(const DominatingSetCertificate& cert) {
  std::ostringstream out;
  out << "method: " << MethodName(cert.method()) << '\n'
      << "size: " << cert.size() << '\n'
      << "connected: " << (cert.connected() ? "true" : "false") << '\n'
      << "vertices: " << FormatVertexSet(cert.set()) << '\n';
  return out.str();
}

}  // namespace hcsteiner
