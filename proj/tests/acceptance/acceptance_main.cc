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


// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "hcsteiner/autgroup.h"
#include "hcsteiner/bounds.h"
#include "hcsteiner/cube.h"
#include "hcsteiner/domination.h"
#include "hcsteiner/steiner.h"
#include "test_util.h"

namespace hcsteiner {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Failures {
 public:
  void Expect(bool condition, const std::string& what) {
    if (condition) return;
    if (count_++ == 0) first_ = what;
  }
  Outcome Finish(const std::string& summary) const {
    if (count_ == 0) return {true, summary};
    return {false, std::to_string(count_) + " failure(s), first: " + first_};
  }

 private:
  int count_ = 0;
  std::string first_;
};

std::uint64_t GroupOrder(int n) { return static_cast<std::uint64_t>(n) << (n - 1); }

Outcome SharpEdgeTransitivity() {
  Failures f;
  std::uint64_t pairs = 0;
  for (int n = 1; n <= 5; ++n) {
    const Dimension dim(n);
    const TransitivityReport r = VerifySharpEdgeTransitivity(dim);
    f.Expect(r.ok, "n=" + std::to_string(n) + " has a non-unique mapping");
    f.Expect(r.group_order == GroupOrder(n), "|group| != n 2^(n-1)");
    f.Expect(EnumerateGroup(dim).size() == GroupOrder(n), "enumeration size");
    f.Expect(r.ordered_pairs == dim.edge_count() * dim.edge_count(),
             "ordered pair count");
    pairs += r.ordered_pairs;
  }
  return f.Finish("n=1..5, " + std::to_string(pairs) + " ordered edge pairs");
}

// Exhaustive Γ² runs shared by the expectation and inequality criteria.
struct ExhaustiveRun {
  int n;
  std::size_t s;
  int d;
  IntersectionSummary summary;
};

const std::vector<ExhaustiveRun>& ExhaustiveRuns() {
  static const std::vector<ExhaustiveRun> runs = [] {
    std::vector<ExhaustiveRun> out;
    std::mt19937_64 rng(20260101);
    for (int n : {3, 4}) {
      const Dimension dim(n);
      const std::size_t half = dim.vertex_count() / 2;
      std::vector<VertexSet> sets{ParityClass(dim, 0)};
      while (sets.size() < 12) {
        const std::size_t size =
            std::uniform_int_distribution<std::size_t>(1, half)(rng);
        sets.push_back(testing::RandomSet(dim, size, 0, rng));
      }
      for (const VertexSet& set : sets) {
        const IntersectionExperiment exp = IntersectionExperiment::ForEvenSet(set);
        out.push_back({n, set.size(), exp.distance(),
                       RunIntersectionExperiment(exp, Exhaustive{})});
      }
    }
    return out;
  }();
  return runs;
}

Outcome ExpectationIdentity() {
  Failures f;
  for (const ExhaustiveRun& run : ExhaustiveRuns()) {
    const Rational expected(static_cast<std::int64_t>(run.d) * run.d,
                            static_cast<std::int64_t>(GroupOrder(run.n)));
    const std::string tag = "n=" + std::to_string(run.n) +
                            " s=" + std::to_string(run.s);
    f.Expect(run.summary.exhaustive, tag + " not exhaustive");
    f.Expect(run.summary.pairs == GroupOrder(run.n) * GroupOrder(run.n),
             tag + " pair count");
    f.Expect(run.summary.mean == expected,
             tag + " mean " + FormatRational(run.summary.mean) + " != " +
                 FormatRational(expected));
  }
  return f.Finish(std::to_string(ExhaustiveRuns().size()) +
                  " even sets over n=3,4, exact rational equality");
}

Outcome InequalityOne() {
  Failures f;
  std::uint64_t pairs = 0;
  for (const ExhaustiveRun& run : ExhaustiveRuns()) {
    const int rhs = 2 * static_cast<int>(run.s) - (run.n + 1);
    f.Expect(run.summary.rhs == rhs, "rhs mismatch");
    f.Expect(run.summary.min_lhs >= rhs,
             "n=" + std::to_string(run.n) + " s=" + std::to_string(run.s) +
                 " min 2d-X=" + std::to_string(run.summary.min_lhs) + " < " +
                 std::to_string(rhs));
    f.Expect(2 * run.d - run.summary.max == run.summary.min_lhs,
             "min_lhs inconsistent with max");
    pairs += run.summary.pairs;
  }
  return f.Finish(std::to_string(pairs) + " (l1, l2) pairs, zero violations");
}

Outcome DistanceSandwich() {
  Failures f;
  std::mt19937_64 rng(4242);
  int instances = 0;
  for (int n : {3, 4, 5}) {
    const Dimension dim(n);
    const DominatingSetCertificate cds = BestConnectedDominatingSet(dim);
    const std::int64_t half = static_cast<std::int64_t>(dim.vertex_count() / 2);
    for (int trial = 0; trial < 100; ++trial) {
      const std::int64_t s =
          std::uniform_int_distribution<std::int64_t>(1, half)(rng);
      const VertexSet set = testing::RandomSet(dim, s, 0, rng);
      const BoundsReport r = ComputeBounds(set, cds);
      const std::string tag = "n=" + std::to_string(n) + " trial " +
                              std::to_string(trial);
      // Recomputed here rather than trusted from the report.
      const Rational lower = Rational(s) +
                             Rational(s * s, n * 2 * half) -
                             Rational(n + 1, 2);
      const std::int64_t floor = s >= 2 ? s : s - 1;
      const std::int64_t certified = std::max(Ceil(lower), floor);
      f.Expect(r.lower == lower, tag + " lower formula");
      f.Expect(r.certified_lower == certified, tag + " certified lower");
      f.Expect(r.exact.has_value(), tag + " exact out of budget");
      if (!r.exact) continue;
      f.Expect(certified <= *r.exact, tag + " lower > d(S)");
      f.Expect(*r.exact <= r.upper, tag + " d(S) > upper");
      f.Expect(r.upper <= static_cast<int>(s + cds.size()) - 1,
               tag + " upper > |S| + |cds| - 1");
      f.Expect(CheckSteinerTree(r.upper_tree, set).ok, tag + " upper tree");
      f.Expect(r.upper_tree.size() == r.upper, tag + " upper != edge count");
      ++instances;
    }
  }
  return f.Finish(std::to_string(instances) + " seeded even sets over n=3,4,5");
}

Outcome OracleEquivalence() {
  Failures f;
  int compared = 0;
  auto compare = [&](const VertexSet& set) {
    const SteinerInstance instance(set);
    const SteinerResult exact = SteinerExact(instance);
    const int oracle = SteinerBruteOracle(instance);
    f.Expect(exact.distance == oracle,
             FormatVertexSet(set) + ": dp " + std::to_string(exact.distance) +
                 " vs oracle " + std::to_string(oracle));
    f.Expect(CheckSteinerTree(exact.tree, set).ok,
             FormatVertexSet(set) + ": invalid witness");
    ++compared;
  };
  const Dimension q3(3);
  for (Word mask = 0; mask < 256; ++mask) {
    const int size = __builtin_popcountll(mask);
    if (size < 2 || size > 4) continue;
    std::vector<Word> bits;
    for (Word v = 0; v < 8; ++v) {
      if ((mask >> v) & 1) bits.push_back(v);
    }
    compare(VertexSet::FromBits(q3, bits));
  }
  std::mt19937_64 rng(777);
  const Dimension q4(4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t size = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    compare(testing::RandomSet(q4, size, -1, rng));
  }
  return f.Finish(std::to_string(compared) + " sets, zero mismatches");
}

Outcome SdiamBracket() {
  Failures f;
  const Dimension dim(3);
  const std::map<int, int> frozen{{2, 3}, {3, 3}, {4, 5}, {5, 5},
                                  {6, 5}, {7, 6}, {8, 7}};
  for (int k = 2; k <= 8; ++k) {
    const SdiamReport r = SdiamSandwich(dim, k);
    const std::string tag = "k=" + std::to_string(k);
    f.Expect(r.exact.has_value(), tag + " exact omitted");
    if (!r.exact) continue;
    int brute = 0;
    for (Word mask = 0; mask < 256; ++mask) {
      if (__builtin_popcountll(mask) != k) continue;
      std::vector<Word> bits;
      for (Word v = 0; v < 8; ++v) {
        if ((mask >> v) & 1) bits.push_back(v);
      }
      brute = std::max(
          brute, SteinerBruteOracle(SteinerInstance(VertexSet::FromBits(dim, bits))));
    }
    f.Expect(*r.exact == brute, tag + " exact differs from brute force");
    f.Expect(*r.exact == frozen.at(k), tag + " differs from frozen value");
    f.Expect(r.lower <= Rational(*r.exact), tag + " rational lower > sdiam");
    f.Expect(r.certified_lower <= *r.exact, tag + " lower > sdiam");
    f.Expect(*r.exact <= r.upper, tag + " sdiam > upper");
  }
  return f.Finish("n=3, k=2..8 within [lower, upper]");
}

// Independent of the library: closed-neighbourhood counts and a BFS.
void CheckCertificateDirectly(const DominatingSetCertificate& cert, Failures& f,
                              const std::string& tag) {
  const Dimension dim = cert.set().dim();
  const int n = dim.value();
  std::vector<char> member(dim.vertex_count(), 0);
  for (const Vertex& v : cert.set()) member[v.bits()] = 1;
  for (Word v = 0; v < dim.vertex_count(); ++v) {
    bool covered = member[v];
    for (int i = 0; i < n && !covered; ++i) covered = member[v ^ (Word{1} << i)];
    if (!covered) {
      f.Expect(false, tag + " misses a vertex");
      return;
    }
  }
  if (!cert.connected()) return;
  std::vector<char> seen(dim.vertex_count(), 0);
  std::vector<Word> stack{cert.set()[0].bits()};
  seen[stack.back()] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Word v = stack.back();
    stack.pop_back();
    for (int i = 0; i < n; ++i) {
      const Word u = v ^ (Word{1} << i);
      if (member[u] && !seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  f.Expect(reached == cert.size(), tag + " claims connectivity falsely");
}

Outcome DominationCertificates() {
  Failures f;
  int certificates = 0;
  auto check = [&](const DominatingSetCertificate& cert, const std::string& tag) {
    CheckCertificateDirectly(cert, f, tag);
    ++certificates;
  };
  for (int n = 1; n <= 8; ++n) {
    const Dimension dim(n);
    const std::string tag = "n=" + std::to_string(n);
    const DominatingSetCertificate greedy = GreedyDominatingSet(dim);
    check(greedy, tag + " greedy");
    const DominatingSetCertificate steinerized = Steinerize(greedy.set());
    f.Expect(steinerized.connected(), tag + " steinerized not connected");
    check(steinerized, tag + " steinerized");
    check(BestConnectedDominatingSet(dim), tag + " best");
    if (n <= 4) check(ExactConnectedDominatingSet(dim), tag + " exact");
  }
  for (int n : {1, 3, 7}) {
    const Dimension dim(n);
    const DominatingSetCertificate code = HammingCodeDominatingSet(dim);
    check(code, "hamming n=" + std::to_string(n));
    f.Expect(code.size() * (n + 1) == dim.vertex_count(),
             "hamming n=" + std::to_string(n) + " size");
    std::vector<int> hits(dim.vertex_count(), 0);
    for (const Vertex& c : code.set()) {
      ++hits[c.bits()];
      for (int i = 0; i < n; ++i) ++hits[c.bits() ^ (Word{1} << i)];
    }
    f.Expect(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }),
             "hamming n=" + std::to_string(n) + " not perfect");
    check(Steinerize(code.set()), "steinerized hamming n=" + std::to_string(n));
  }
  // Certification must refuse a set that does not dominate.
  bool rejected = false;
  try {
    DominatingSetCertificate::Certify(
        VertexSet::FromBits(Dimension(3), {0}), DominationMethod::kGreedy);
  } catch (const Error& e) {
    rejected = e.category() == ErrorCategory::kPrecondition;
  }
  f.Expect(rejected, "non-dominating set certified");
  const int gamma[] = {1, 2, 2, 4};
  const int gamma_c[] = {1, 2, 4, 6};
  for (int n = 1; n <= 4; ++n) {
    f.Expect(ExactDominationNumber(Dimension(n)) == gamma[n - 1], "gamma value");
    f.Expect(ExactConnectedDominationNumber(Dimension(n)) == gamma_c[n - 1],
             "gamma_c value");
  }
  return f.Finish(std::to_string(certificates) +
                  " certificates re-verified; Hamming n=3,7 perfect");
}

Outcome BootstrapAlgebra() {
  Failures f;
  int cases = 0;
  int live = 0;
  for (int n = 1; n <= 8; ++n) {
    const Dimension dim(n);
    const std::int64_t vertices = static_cast<std::int64_t>(dim.vertex_count());
    for (std::int64_t s = 1; s <= vertices / 2; ++s) {
      for (std::int64_t d = s - 1; d < vertices; ++d) {
        const BootstrapCheck c = VerifyBootstrap(dim, s, d);
        f.Expect(c.holds, "n=" + std::to_string(n) + " s=" + std::to_string(s) +
                              " d=" + std::to_string(d));
        f.Expect(Rational(s) + c.conclusion_rhs == LowerBoundEven(dim, s),
                 "conclusion does not yield the lower bound");
        ++cases;
        live += c.vacuous ? 0 : 1;
      }
    }
  }
  return f.Finish(std::to_string(cases) + " grid points (" +
                  std::to_string(live) + " non-vacuous), zero counterexamples");
}

std::string RunCli(const std::vector<std::string>& args, int& status) {
  std::vector<const char*> argv{"hcsteiner"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  status = cli::Main(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str() + "\x1f" + err.str();
}

Outcome Determinism() {
  Failures f;
  const std::string data = HCSTEINER_TEST_DATA_DIR;
  const std::vector<std::vector<std::string>> commands{
      {"exact", "--set", data + "/three_terminals.txt"},
      {"bound", "--n", "7", "--set", "even"},
      {"bound", "--n", "4", "--set", "inline:0000,1100,1111", "--format", "json"},
      {"cds", "--n", "6", "--format", "csv"},
      {"group-verify", "--n", "5"},
      {"experiment", "--n", "3", "--set", "even", "--exhaustive", "--transcript",
       "--format", "csv"},
      {"experiment", "--n", "5", "--set", "even", "--samples", "5000", "--seed",
       "99", "--transcript", "--format", "json"},
      {"sdiam", "--n", "4", "--k", "12", "--seed", "3"},
      {"exact", "--n", "3", "--set", "inline:00"},
  };
  for (const auto& args : commands) {
    int first_status = 0;
    int second_status = 0;
    const std::string first = RunCli(args, first_status);
    const std::string second = RunCli(args, second_status);
    std::string label;
    for (const std::string& a : args) label += a + " ";
    f.Expect(first == second && first_status == second_status,
             label + "differs between runs");
  }
  return f.Finish(std::to_string(commands.size()) +
                  " commands, byte-identical across two runs");
}

}  // namespace
}  // namespace hcsteiner

int main() {
  struct Criterion {
    const char* name;
    std::function<hcsteiner::Outcome()> run;
  };
  const Criterion criteria[] = {
      {"sharp edge transitivity", hcsteiner::SharpEdgeTransitivity},
      {"expectation identity", hcsteiner::ExpectationIdentity},
      {"averaged intersection inequality", hcsteiner::InequalityOne},
      {"lower/upper sandwich", hcsteiner::DistanceSandwich},
      {"oracle equivalence", hcsteiner::OracleEquivalence},
      {"sdiam sandwich", hcsteiner::SdiamBracket},
      {"domination certificates", hcsteiner::DominationCertificates},
      {"bootstrap algebra", hcsteiner::BootstrapAlgebra},
      {"determinism", hcsteiner::Determinism},
  };
  int failed = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    hcsteiner::Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    if (!outcome.pass) ++failed;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << "criterion " << index << ": " << (outcome.pass ? "PASS" : "FAIL")
         << "  " << c.name << " (" << outcome.detail << ", " << seconds << "s)";
    std::cout << line.str() << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed"
                            : std::to_string(failed) + " criterion(s) failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
