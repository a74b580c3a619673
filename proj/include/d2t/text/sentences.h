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

#ifndef D2T_TEXT_SENTENCES_H_
#define D2T_TEXT_SENTENCES_H_

#include <string>
#include <string_view>
#include <vector>

namespace d2t {

// Rule-based sentence segmentation used everywhere a sentence count is
// needed (corpus building, plan-following checks, fact validation).
//
// A boundary is a run of [.!?] (optionally followed by closing quotes or
// brackets) that is followed by whitespace and an upper-case letter, digit
// or opening quote, or by the end of the text. A period is not a boundary
// when the word before it is a single letter (an initial) or a known
// abbreviation, or when the word itself contains an inner period ("U.S.").
//
// Throws InputError when the paragraph is empty after trimming.
std::vector<std::string> split_sentences(std::string_view paragraph);

// Number of sentences; 0 for blank text.
std::size_t count_sentences(std::string_view text);

std::string trim(std::string_view s);

// Trims and collapses every whitespace run to one space.
std::string collapse_whitespace(std::string_view s);

}  // namespace d2t

#endif  // D2T_TEXT_SENTENCES_H_
