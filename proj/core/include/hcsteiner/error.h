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

#ifndef HCSTEINER_ERROR_H_
#define HCSTEINER_ERROR_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hcsteiner {

// Every failure raised by the library carries one of these categories so the
// command-line front end can map it to a stable exit code and category string.
enum class ErrorCategory {
  kParse,
  kDimensionMismatch,
  kBudgetExceeded,
  kPrecondition,
};

std::string_view CategoryName(ErrorCategory category);

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& message)
      : std::runtime_error(message), category_(category) {}

  ErrorCategory category() const { return category_; }

 private:
  ErrorCategory category_;
};

// Raised when a computation would exceed its resource limit. `projected` is
// the size of the state space (or enumeration) the caller asked for.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, double projected, double limit);

  double projected() const { return projected_; }
  double limit() const { return limit_; }

 private:
  double projected_;
  double limit_;
};

}  // namespace hcsteiner

#endif  // HCSTEINER_ERROR_H_
