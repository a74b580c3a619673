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

#ifndef D2T_EVAL_BLEU_H_
#define D2T_EVAL_BLEU_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace d2t {

enum class BleuTokenize {
  k13a,        // mteval-v13a rules, the usual corpus-BLEU convention
  kWhitespace  // text is already tokenized (plan index sequences)
};

std::vector<std::string> tokenize_13a(std::string_view line);

struct BleuStats {
  std::vector<double> matches;  // per order n = 1..max_ngram
  std::vector<double> totals;
  double candidate_length = 0;
  double reference_length = 0;  // closest reference length, ties to the shorter
};

// Corpus-level BLEU in [0, 100]: clipped n-gram precisions pooled over the
// corpus, uniform weights, brevity penalty, no smoothing. Orders longer
// than every candidate are dropped rather than scored 0. Each candidate
// has a non-empty set of references. Throws InputError for an empty or
// misaligned corpus or max_ngram < 1.
double corpus_bleu(std::span<const std::string> candidates,
                   std::span<const std::vector<std::string>> references, int max_ngram = 4,
                   BleuTokenize tokenize = BleuTokenize::k13a);

BleuStats bleu_stats(std::span<const std::string> candidates,
                     std::span<const std::vector<std::string>> references, int max_ngram,
                     BleuTokenize tokenize);
double bleu_from_stats(const BleuStats &stats);

// Joins integer tokens with spaces ("2 0 1"), the token form used for
// BLEU-2 over content plans.
std::string join_indices(std::span<const int> values);

}  // namespace d2t

#endif  // D2T_EVAL_BLEU_H_
