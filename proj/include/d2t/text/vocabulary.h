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

#ifndef D2T_TEXT_VOCABULARY_H_
#define D2T_TEXT_VOCABULARY_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "d2t/util/io.h"

namespace d2t {

using TokenId = std::int32_t;
using TokenSequence = std::vector<TokenId>;

// Marker tokens shared by every model. `<s>`/`</s>` delimit facts for the
// ordering model and double as begin/end of generated sequences; `</s>` is
// also the separator read by the aggregation classifier; `<sep>` is the
// sentence-boundary control code of paragraph compression.
inline constexpr std::string_view kPadToken = "<pad>";
inline constexpr std::string_view kUnkToken = "<unk>";
inline constexpr std::string_view kBosToken = "<s>";
inline constexpr std::string_view kEosToken = "</s>";
inline constexpr std::string_view kSepToken = "<sep>";

inline constexpr TokenId kPadId = 0;
inline constexpr TokenId kUnkId = 1;
inline constexpr TokenId kBosId = 2;
inline constexpr TokenId kEosId = 3;
inline constexpr TokenId kSepId = 4;

// Splits text into word pieces. A piece preceded by whitespace carries a
// leading U+2581 so that detokenize(tokenize(t)) == t for text with single
// spaces. Marker tokens are kept whole and always space-separated.
std::vector<std::string> tokenize(std::string_view text);
std::string detokenize(std::span<const std::string> pieces);

// Closed token inventory. Ids 0..4 are the markers above.
class Vocabulary {
 public:
  Vocabulary();

  // Builds from a corpus; pieces seen fewer than min_count times map to
  // <unk>. Insertion order is by descending frequency, then lexicographic.
  static Vocabulary build(std::span<const std::string> texts,
                          std::size_t min_count = 1);

  // Every byte value as its own piece; used by rule-based backends that
  // must round-trip arbitrary text.
  static Vocabulary bytes();

  TokenId add(std::string_view piece);
  TokenId id(std::string_view piece) const;
  const std::string &piece(TokenId id) const;
  bool contains(std::string_view piece) const;
  std::size_t size() const { return pieces_.size(); }
  bool byte_level() const { return byte_level_; }

  TokenSequence encode(std::string_view text) const;
  std::string decode(std::span<const TokenId> ids, bool skip_markers = true) const;

  // Stable content hash, recorded in checkpoint manifests.
  std::string hash() const;

  Json to_json() const;
  static Vocabulary from_json(const Json &j);

 private:
  std::vector<std::string> pieces_;
  std::unordered_map<std::string, TokenId> index_;
  bool byte_level_ = false;
};

}  // namespace d2t

#endif  // D2T_TEXT_VOCABULARY_H_
