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

#ifndef HCSTEINER_BUDGET_H_
#define HCSTEINER_BUDGET_H_

#include <cstdint>
#include <string>

#include "hcsteiner/error.h"

namespace hcsteiner {

// Resource limits passed explicitly to every exponential computation.
struct Budget {
  // Enumerations of vertices, edges or group elements.
  std::uint64_t max_enumeration = std::uint64_t{1} << 24;
  // Dreyfus-Wagner work, measured as 3^k * 2^n.
  std::uint64_t max_dp_states = 2'500'000'000ULL;
  // Resident DP table entries, 2^(k-1) * 2^n.
  std::uint64_t max_table_entries = std::uint64_t{1} << 26;
  // Ordered pairs of group elements in an exhaustive sweep.
  std::uint64_t max_group_pairs = std::uint64_t{1} << 22;
  // Candidate vertex sets examined by brute-force searches.
  std::uint64_t max_search_nodes = 50'000'000ULL;
  // k-subsets examined when computing an exact Steiner k-diameter.
  std::uint64_t max_subsets = 1000;
};

// Throws BudgetExceeded if `projected` is above `limit`.
inline void CheckBudget(const std::string& what, double projected,
                        std::uint64_t limit) {
  if (projected > static_cast<double>(limit)) {
    throw BudgetExceeded(what, projected, static_cast<double>(limit));
  }
}

}  // namespace hcsteiner

#endif  // HCSTEINER_BUDGET_H_
