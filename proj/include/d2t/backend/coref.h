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

#ifndef D2T_BACKEND_COREF_H_
#define D2T_BACKEND_COREF_H_

#include <span>
#include <string>
#include <vector>

#include "d2t/util/io.h"

namespace d2t {

// Byte span [begin, end) inside one sentence.
struct Mention {
  std::size_t sentence = 0;
  std::size_t begin = 0;
  std::size_t end = 0;
  friend bool operator==(const Mention &, const Mention &) = default;
};

// Mentions of one entity in reading order; the first is the representative.
struct MentionCluster {
  std::vector<Mention> mentions;
};

class CorefBackend {
 public:
  virtual ~CorefBackend() = default;
  // Throws on backend failure; callers drop the affected example.
  virtual std::vector<MentionCluster> resolve(std::span<const std::string> sentences) const = 0;
};

// Links sentence-initial subject pronouns (he, she, it, they) to the most
// recent non-pronoun sentence subject. Possessives are left alone because
// replacing them would need a genitive form.
class HeuristicCoref : public CorefBackend {
 public:
  std::vector<MentionCluster> resolve(std::span<const std::string> sentences) const override;
};

// Replaces every non-first mention of a cluster by the representative's
// text, unless the representative is itself a pronoun. Mentions outside a
// cluster are untouched.
std::vector<std::string> replace_coreferences(std::span<const std::string> sentences,
                                              std::span<const MentionCluster> clusters);

Json to_json(const MentionCluster &cluster);
MentionCluster cluster_from_json(const Json &j);

}  // namespace d2t

#endif  // D2T_BACKEND_COREF_H_
