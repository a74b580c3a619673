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


#ifndef D2T_COMPRESSION_COMPRESSION_H_
#define D2T_COMPRESSION_COMPRESSION_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "d2t/backend/toy_models.h"
#include "d2t/core/types.h"
#include "d2t/corpus/example.h"

namespace d2t {

// What the paragraph compression model sees on its input.
//   kPC:        ordered facts with <sep> at every delimiter 1
//   kPCAgg:     ordered facts, no delimiters
//   kPCOrdAgg:  facts in random order, no delimiters
enum class PCVariant { kPC, kPCAgg, kPCOrdAgg };

const char *to_string(PCVariant v);  // "pc", "pc-agg", "pc-ord-agg"
// Accepts the names above case-insensitively, with '_' for '-'.
PCVariant pc_variant_from_string(std::string_view name);

// Builds the input text. `delimiters` must be given exactly for kPC and
// have one entry per adjacent pair. `shuffle_seed` only affects kPCOrdAgg,
// whose facts are shuffled with it when present and kept as given when not
// (inference passes the dataset order through).
std::string format_pc_input(std::span<const std::string> facts,
                            const std::optional<DelimiterSequence> &delimiters,
                            PCVariant variant,
                            std::optional<std::uint64_t> shuffle_seed = std::nullopt);
std::string format_pc_input(std::span<const Fact> facts,
                            const std::optional<DelimiterSequence> &delimiters,
                            PCVariant variant,
                            std::optional<std::uint64_t> shuffle_seed = std::nullopt);

// Drops every <sep> and normalizes whitespace.
std::string strip_separators(std::string_view text);
std::size_t count_separators(std::string_view text);

// Runs the generator on a formatted input. Throws ContractError if the
// model produced nothing but whitespace.
std::string compress(std::string_view pc_input, const ConditionalGenerator &model);

// Input shown for corpus example `index` in `epoch`. kPCOrdAgg draws a
// fresh shuffle per (seed, index, epoch); the other variants ignore both.
std::string pc_training_input(const CorpusExample &example, PCVariant variant,
                              std::uint64_t seed, std::size_t index, int epoch);

// Sentences and paragraphs of the corpus plus <sep>, for sizing a toy
// model's vocabulary.
Vocabulary build_pc_vocabulary(std::span<const CorpusExample> corpus, std::size_t min_count = 1);

// Trains the model to rewrite each example's sentences into its original
// paragraph. Throws InputError for an empty corpus.
nn::TrainResult train_pc(ToySeq2Seq &model, std::span<const CorpusExample> corpus,
                         PCVariant variant, const TrainConfig &config,
                         nn::TrainOptions options = {});

struct PlanFollowing {
  bool order_ok = false;
  bool boundary_ok = false;
  friend bool operator==(const PlanFollowing &, const PlanFollowing &) = default;
};

// Automatic plan check. order_ok: the first occurrence of each anchor is at
// or after the previous one (a missing anchor fails). boundary_ok: the
// output has 1 + sum(delimiters) sentences. Anchors default to the source
// triples' objects.
PlanFollowing check_plan_following(std::string_view output, std::span<const Fact> ordered_facts,
                                   std::span<const int> delimiters,
                                   std::span<const std::string> anchors = {});

}  // namespace d2t

#endif  // D2T_COMPRESSION_COMPRESSION_H_
