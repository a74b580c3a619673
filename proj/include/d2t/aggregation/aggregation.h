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

#ifndef D2T_AGGREGATION_AGGREGATION_H_
#define D2T_AGGREGATION_AGGREGATION_H_

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "d2t/backend/external.h"
#include "d2t/backend/toy_models.h"
#include "d2t/core/types.h"
#include "d2t/corpus/example.h"

namespace d2t {

// Predicts n - 1 fuse (0) / separate (1) decisions for n ordered facts.
class DelimiterPredictor {
 public:
  virtual ~DelimiterPredictor() = default;

  // Empty for a single fact. Throws InputError for no facts and
  // ContractError if a backend breaks the length or value law.
  DelimiterSequence predict(std::span<const std::string> ordered_facts) const;

 protected:
  virtual DelimiterSequence do_predict(std::span<const std::string> ordered_facts) const = 0;
};

DelimiterSequence predict_delimiters(std::span<const Fact> ordered_facts,
                                     const DelimiterPredictor &predictor);

// "f1 </s> f2 </s> f3": one separator between each pair, none at the ends.
TokenSequence aggregation_tokens(std::span<const std::string> facts, const Vocabulary &vocab,
                                 std::vector<int> *separator_positions = nullptr);

// Argmax at a separator's class distribution; a tie picks 1 (separate).
int delimiter_from_probs(double p_fuse, double p_separate);

// Token classifier read at separator positions only.
class AggregationModel : public DelimiterPredictor {
 public:
  explicit AggregationModel(ToyTokenClassifier classifier) : classifier_(std::move(classifier)) {}
  AggregationModel(Vocabulary vocab, nn::TransformerConfig arch, std::uint64_t init_seed)
      : classifier_(std::move(vocab), arch, 2, init_seed) {}

  ToyTokenClassifier &classifier() { return classifier_; }
  const ToyTokenClassifier &classifier() const { return classifier_; }

  // Cross-entropy at separator positions only; nullopt for one sentence.
  // Throws InputError when the labels do not match the sentence count.
  std::optional<nn::Var> loss(nn::Graph &g, std::span<const std::string> sentences,
                              std::span<const int> labels) const;

  void save(const std::filesystem::path &dir, const nn::AdamState *optimizer = nullptr,
            Json extra = Json::object()) const {
    classifier_.save(dir, optimizer, std::move(extra));
  }
  static AggregationModel load(const std::filesystem::path &dir,
                               std::optional<nn::AdamState> *optimizer = nullptr,
                               Json *extra = nullptr) {
    return AggregationModel(ToyTokenClassifier::load(dir, optimizer, extra));
  }

 protected:
  DelimiterSequence do_predict(std::span<const std::string> ordered_facts) const override;

 private:
  ToyTokenClassifier classifier_;
};

nn::TrainResult train_aggregation(AggregationModel &model, std::span<const CorpusExample> corpus,
                                  const TrainConfig &config, nn::TrainOptions options = {});

// Uniformly random delimiters, reproducible per input: the draw depends only
// on the seed and the fact texts.
class RandomDelimiterPredictor : public DelimiterPredictor {
 public:
  explicit RandomDelimiterPredictor(std::uint64_t seed) : seed_(seed) {}

 protected:
  DelimiterSequence do_predict(std::span<const std::string> ordered_facts) const override;

 private:
  std::uint64_t seed_;
};

// Every fact in its own sentence.
class SeparateAllPredictor : public DelimiterPredictor {
 protected:
  DelimiterSequence do_predict(std::span<const std::string> ordered_facts) const override {
    return DelimiterSequence(ordered_facts.size() - 1, 1);
  }
};

// op "delimiters": {"facts": [...]} -> {"delimiters": [...]}
class ExternalDelimiterPredictor : public DelimiterPredictor {
 public:
  explicit ExternalDelimiterPredictor(SharedProcess process) : process_(std::move(process)) {}

 protected:
  DelimiterSequence do_predict(std::span<const std::string> ordered_facts) const override;

 private:
  SharedProcess process_;
};

struct AggregationScores {
  double per_example = 0.0;   // exact sequence matches
  double per_boundary = 0.0;  // matching positions pooled over all boundaries
  std::size_t boundaries = 0;
};

// A corpus with no boundaries at all scores 1.0 per boundary (vacuously).
AggregationScores eval_aggregation(std::span<const DelimiterSequence> predicted,
                                   std::span<const DelimiterSequence> gold);

}  // namespace d2t

#endif  // D2T_AGGREGATION_AGGREGATION_H_
