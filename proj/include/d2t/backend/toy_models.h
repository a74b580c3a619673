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

#ifndef D2T_BACKEND_TOY_MODELS_H_
#define D2T_BACKEND_TOY_MODELS_H_

#include <filesystem>
#include <span>
#include <utility>
#include <vector>

#include "d2t/backend/interfaces.h"
#include "d2t/backend/train_config.h"
#include "d2t/nn/checkpoint.h"
#include "d2t/nn/trainer.h"
#include "d2t/nn/transformer.h"

namespace d2t {

inline constexpr const char *kToySeq2SeqKind = "toy-seq2seq";
inline constexpr const char *kToyTokenClassifierKind = "toy-token-classifier";

// Default cap on generated tokens.
inline constexpr std::size_t kMaxGeneratedTokens = 512;

// Encoder-decoder transformer trained from scratch. The decoder reads
// <s> + target and predicts target + </s>; decoding is greedy.
class ToySeq2Seq : public ConditionalGenerator {
 public:
  ToySeq2Seq(Vocabulary vocab, nn::TransformerConfig arch, std::uint64_t init_seed);

  const Vocabulary &vocabulary() const override { return vocab_; }
  std::size_t max_input_length() const override {
    return static_cast<std::size_t>(arch_.max_length);
  }
  std::size_t max_output_length() const override;
  const nn::TransformerConfig &arch() const { return arch_; }

  // Mean token cross-entropy under teacher forcing.
  nn::Var loss(nn::Graph &g, std::span<const TokenId> source,
               std::span<const TokenId> target) const;

  nn::ParameterStore &parameters() { return store_; }
  const nn::ParameterStore &parameters() const { return store_; }

  void save(const std::filesystem::path &dir, const nn::AdamState *optimizer = nullptr,
            Json extra = Json::object()) const;
  static ToySeq2Seq load(const std::filesystem::path &dir,
                         std::optional<nn::AdamState> *optimizer = nullptr,
                         Json *extra = nullptr);

 protected:
  TokenSequence do_generate(std::span<const TokenId> input) const override;

 private:
  Vocabulary vocab_;
  nn::TransformerConfig arch_;
  nn::ParameterStore store_;
  nn::TransformerEncoder encoder_;
  nn::TransformerDecoder decoder_;
  nn::Linear head_;
};

using TokenPairs = std::vector<std::pair<TokenSequence, TokenSequence>>;

// Teacher-forced training on (source, target) token pairs.
nn::TrainResult train_seq2seq(ToySeq2Seq &model, const TokenPairs &pairs,
                              const TrainConfig &config, nn::TrainOptions options = {});

// Transformer encoder with a per-position softmax head.
class ToyTokenClassifier : public TokenClassifier {
 public:
  ToyTokenClassifier(Vocabulary vocab, nn::TransformerConfig arch, int classes,
                     std::uint64_t init_seed);

  const Vocabulary &vocabulary() const override { return vocab_; }
  std::size_t max_length() const override { return static_cast<std::size_t>(arch_.max_length); }
  int num_classes() const override { return classes_; }
  const nn::TransformerConfig &arch() const { return arch_; }

  // Mean cross-entropy over positions whose label is >= 0; other positions
  // (label -1) contribute nothing. Returns nullopt if no position is labeled.
  std::optional<nn::Var> loss(nn::Graph &g, std::span<const TokenId> tokens,
                              std::span<const int> labels) const;

  nn::ParameterStore &parameters() { return store_; }
  const nn::ParameterStore &parameters() const { return store_; }

  void save(const std::filesystem::path &dir, const nn::AdamState *optimizer = nullptr,
            Json extra = Json::object()) const;
  static ToyTokenClassifier load(const std::filesystem::path &dir,
                                 std::optional<nn::AdamState> *optimizer = nullptr,
                                 Json *extra = nullptr);

 protected:
  nn::Matrix do_classify(std::span<const TokenId> tokens) const override;

 private:
  nn::Var logits(nn::Graph &g, std::span<const TokenId> tokens) const;

  Vocabulary vocab_;
  nn::TransformerConfig arch_;
  int classes_;
  nn::ParameterStore store_;
  nn::TransformerEncoder encoder_;
  nn::Linear head_;
};

// Standalone encoder exposing the SequenceEncoder contract.
class ToySequenceEncoder : public SequenceEncoder {
 public:
  ToySequenceEncoder(Vocabulary vocab, nn::TransformerConfig arch, std::uint64_t init_seed);

  int hidden_size() const override { return arch_.hidden; }
  std::size_t max_length() const override { return static_cast<std::size_t>(arch_.max_length); }
  const Vocabulary &vocabulary() const override { return vocab_; }

 protected:
  nn::Matrix do_encode(std::span<const TokenId> tokens) const override;

 private:
  Vocabulary vocab_;
  nn::TransformerConfig arch_;
  nn::ParameterStore store_;
  nn::TransformerEncoder encoder_;
};

}  // namespace d2t

#endif  // D2T_BACKEND_TOY_MODELS_H_
