// Copyright 2026 The d2t Authors.
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

#ifndef D2T_TEXT_SIMILARITY_H_
#define D2T_TEXT_SIMILARITY_H_

#include <cstddef>
#include <string_view>

namespace d2t {

// Character-level edit distance (insert, delete, substitute; unit costs).
std::size_t levenshtein(std::string_view a, std::string_view b);

// 1 - distance / max(|a|, |b|); 1.0 for two empty strings.
double levenshtein_similarity(std::string_view a, std::string_view b);

}  // namespace d2t

#endif  // D2T_TEXT_SIMILARITY_H_
