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

#ifndef D2T_CORPUS_EXAMPLE_H_
#define D2T_CORPUS_EXAMPLE_H_

#include <string>
#include <vector>

#include "d2t/core/types.h"
#include "d2t/util/io.h"

namespace d2t {

// One synthetic training example: simple sentences (source) rewritten from
// a human paragraph (target), with the gold aggregation labels between
// consecutive sentences.
struct CorpusExample {
  std::string id;
  std::string paragraph;
  std::vector<std::string> sentences;
  DelimiterSequence agg_labels;
  // Index of the paragraph sentence each simple sentence was split from.
  // agg_labels[i] == 0 exactly when origin[i] == origin[i + 1].
  std::vector<int> origin;
  bool kept = true;
  bool omission = false;
  bool hallucination = false;
  std::string error;  // why the example was dropped, if it was

  // |agg_labels| = |sentences| - 1 and, when origin is present, labels
  // agree with it. Throws InputError otherwise.
  void validate() const;
  friend bool operator==(const CorpusExample &, const CorpusExample &) = default;
};

// Labels implied by split provenance.
DelimiterSequence labels_from_origin(std::span<const int> origin);

OrderedJson to_json(const CorpusExample &e);
CorpusExample corpus_example_from_json(const Json &j);
std::vector<CorpusExample> load_corpus(const std::filesystem::path &path);

}  // namespace d2t

#endif  // D2T_CORPUS_EXAMPLE_H_
