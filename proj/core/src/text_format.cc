// Copyright 2026 The Authors.
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

#include "text_format.h"

#include <sstream>

#include "deltatwist/error.h"

namespace deltatwist::internal {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n\f\v");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n\f\v");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::vector<KeyedLine> ReadKeyedLines(std::string_view text) {
  std::vector<KeyedLine> out;
  std::size_t line_number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_number;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;

    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorCode::kParseError, "line " + std::to_string(line_number) +
                                              ": expected 'key: values'");
    }
    KeyedLine keyed;
    keyed.line_number = line_number;
    keyed.key = std::string(Trim(line.substr(0, colon)));
    std::istringstream tokens{std::string(line.substr(colon + 1))};
    for (std::string token; tokens >> token;) keyed.tokens.push_back(token);
    out.push_back(std::move(keyed));
  }
  return out;
}

std::string JoinTokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    out += ' ';
    out += t;
  }
  return out;
}

}  // namespace deltatwist::internal
