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

#ifndef HCSTEINER_INSTANCE_IO_H_
#define HCSTEINER_INSTANCE_IO_H_

#include <istream>
#include <string>

#include "hcsteiner/steiner.h"

namespace hcsteiner {

// Instance file format:
//
//   # comment
//   n=3
//   000
//   011
//
// The "n=<int>" header comes first; blank lines and '#' comments (whole line
// or trailing) are ignored. Errors are Error(kParse) with a line number, or
// Error(kDimensionMismatch) for vertices of the wrong length.
SteinerInstance ParseInstance(std::istream& in);
SteinerInstance ParseInstanceFile(const std::string& path);

std::string FormatInstance(const SteinerInstance& instance);

}  // namespace hcsteiner

#endif  // HCSTEINER_INSTANCE_IO_H_
