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

#include "hcsteiner/instance_io.h"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hcsteiner/error.h"

namespace hcsteiner {

namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

Error ParseError(int line, const std::string& message) {
  return Error(ErrorCategory::kParse,
               "line " + std::to_string(line) + ": " + message);
}

}  // namespace

SteinerInstance ParseInstance(std::istream& in) {
  std::optional<Dimension> dim;
  std::vector<Vertex> vertices;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view text = raw;
    if (const auto hash = text.find('#'); hash != std::string_view::npos) {
      text = text.substr(0, hash);
    }
    text = Trim(text);
    if (text.empty()) continue;
    if (!dim) {
      if (!text.starts_with("n=")) {
        throw ParseError(line, "expected header 'n=<int>'");
      }
      const std::string_view digits = Trim(text.substr(2));
      int n = 0;
      auto [ptr, ec] =
          std::from_chars(digits.data(), digits.data() + digits.size(), n);
      if (ec != std::errc() || ptr != digits.data() + digits.size()) {
        throw ParseError(line, "malformed dimension '" + std::string(digits) +
                                   "'");
      }
      try {
        dim.emplace(n);
      } catch (const Error& e) {
        throw ParseError(line, e.what());
      }
      continue;
    }
    try {
      vertices.push_back(ParseVertex(text, dim));
    } catch (const Error& e) {
      throw Error(e.category(), "line " + std::to_string(line) + ": " + e.what());
    }
  }
  if (!dim) throw ParseError(line, "missing header 'n=<int>'");
  if (vertices.empty()) throw ParseError(line, "instance has no terminals");
  return SteinerInstance(VertexSet::FromVertices(*dim, std::move(vertices)));
}

SteinerInstance ParseInstanceFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCategory::kParse, "cannot open instance file " + path);
  }
  return ParseInstance(in);
}

std::string FormatInstance(const SteinerInstance& instance) {
  std::ostringstream out;
  out << "n=" << instance.dim().value() << '\n';
  for (const Vertex& v : instance.terminals()) out << FormatVertex(v) << '\n';
  return out.str();
}

}  // namespace hcsteiner
