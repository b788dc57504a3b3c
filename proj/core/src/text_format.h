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

// Line-oriented "key: token token ..." files shared by the graph, set-system
// and bouquet formats. Not installed.

#ifndef DELTATWIST_SRC_TEXT_FORMAT_H_
#define DELTATWIST_SRC_TEXT_FORMAT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace deltatwist::internal {

struct KeyedLine {
  std::size_t line_number = 0;
  std::string key;
  std::vector<std::string> tokens;
};

// Strips '#' comments and blank lines. Throws kParseError on a significant
// line without a ':'.
std::vector<KeyedLine> ReadKeyedLines(std::string_view text);

std::string JoinTokens(const std::vector<std::string>& tokens);

}  // namespace deltatwist::internal

#endif  // DELTATWIST_SRC_TEXT_FORMAT_H_
