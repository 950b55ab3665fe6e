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

#include "hcsteiner/error.h"

#include <sstream>

namespace hcsteiner {

std::string_view CategoryName(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::kParse:
      return "parse";
    case ErrorCategory::kDimensionMismatch:
      return "dimension_mismatch";
    case ErrorCategory::kBudgetExceeded:
      return "budget";
    case ErrorCategory::kPrecondition:
      return "precondition";
  }
  return "unknown";
}

namespace {

std::string BudgetMessage(const std::string& what, double projected,
                          double limit) {
  std::ostringstream out;
  out.precision(6);
  out << what << ": projected size " << projected << " exceeds budget "
      << limit;
  return out.str();
}

}  // namespace

BudgetExceeded::BudgetExceeded(const std::string& what, double projected,
                               double limit)
    : Error(ErrorCategory::kBudgetExceeded,
            BudgetMessage(what, projected, limit)),
      projected_(projected),
      limit_(limit) {}

}  // namespace hcsteiner
