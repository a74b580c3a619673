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

#ifndef D2T_ORDERING_ORDERING_H_
#define D2T_ORDERING_ORDERING_H_

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "d2t/backend/external.h"
#include "d2t/backend/interfaces.h"
#include "d2t/backend/train_config.h"
#include "d2t/core/types.h"
#include "d2t/corpus/example.h"
#include "d2t/nn/trainer.h"
#include "d2t/nn/transformer.h"

namespace d2t {

inline constexpr const char *kPointerOrdererKind = "toy-pointer-orderer";

// Selection distribution of one pointer step.
struct PointerDistribution {
  std::vector<double> probs;
  int step = 0;
};

// softmax over unmasked slots of (d W_Q)(E W_K)^T / sqrt(b), with d a
// 1 x b query state and E an n x b key matrix. Masked slots get exactly 0.
// Throws ContractError when every slot is masked or shapes disagree.
PointerDistribution pointer_step(const nn::Matrix &d, const nn::Matrix &E,
                                 const nn::Matrix &w_q, const nn::Matrix &w_k,
                                 std::span<const bool> mask, int step = 0);

// Fact token layout "<s> f1 </s> <s> f2 </s> ...". Also reports where each
// fact's </s> sits.
TokenSequence fact_sequence_tokens(std::span<const std::string> facts, const Vocabulary &vocab,
                                   std::vector<int> *eos_positions = nullptr);

// n x b encoder states at each fact's </s>. Throws LengthError when the
// concatenation is too long and InputError when there are no facts.
nn::Matrix encode_fact_sequence(std::span<const std::string> facts,
                                const SequenceEncoder &encoder);

// Produces a permutation of fact indices.
class FactOrderer {
 public:
  virtual ~FactOrderer() = default;

  // Throws InputError for an empty fact list and ContractError if a
  // backend returns something other than a permutation.
  std::vector<int> order(std::span<const std::string> facts) const;

 protected:
  virtual std::vector<int> do_order(std::span<const std::string> facts) const = 0;
};

std::vector<int> order_facts(std::span<const Fact> facts, const FactOrderer &orderer);

// Pointer network over a transformer encoder-decoder. The encoder reads all
// facts once; at step j the decoder reads "<s> f_prev </s>" (the bootstrap
// "<s> </s>" at j = 0) and its last state d_j queries the fact end states.
// Slot n is reserved for the bootstrap pair and never selectable.
class PointerOrderer : public FactOrderer {
 public:
  PointerOrderer(Vocabulary vocab, nn::TransformerConfig arch, std::uint64_t init_seed);

  const Vocabulary &vocabulary() const { return vocab_; }
  const nn::TransformerConfig &arch() const { return arch_; }
  nn::ParameterStore &parameters() { return store_; }
  const nn::ParameterStore &parameters() const { return store_; }
  nn::ParamId w_q() const { return w_q_; }
  nn::ParamId w_k() const { return w_k_; }

  // n x b fact end states.
  nn::Matrix encode_facts(std::span<const std::string> facts) const;
  // Step distributions of a teacher-forced pass over `gold` (n + 1 slots).
  std::vector<PointerDistribution> distributions(std::span<const std::string> facts,
                                                 std::span<const int> gold) const;

  // Mean cross-entropy of the gold index over the n pointer steps. Returns
  // nullopt for fewer than two facts, which carry no ordering signal.
  std::optional<nn::Var> loss(nn::Graph &g, std::span<const std::string> facts,
                              std::span<const int> gold) const;

  void save(const std::filesystem::path &dir, const nn::AdamState *optimizer = nullptr,
            Json extra = Json::object()) const;
  static PointerOrderer load(const std::filesystem::path &dir,
                             std::optional<nn::AdamState> *optimizer = nullptr,
                             Json *extra = nullptr);

 protected:
  std::vector<int> do_order(std::span<const std::string> facts) const override;

 private:
  struct Encoded {
    nn::Var memory;
    nn::Var keys;  // (n + 1) x b, slot n is the reserved bootstrap slot
    std::size_t n;
  };
  Encoded encode(nn::Graph &g, std::span<const std::string> facts) const;
  // Masked, scaled pointer logits (1 x (n + 1)) after feeding `prev`
  // (nullptr for the bootstrap step).
  nn::Var step_logits(nn::Graph &g, const Encoded &enc, const std::string *prev,
                      std::span<const bool> mask) const;

  Vocabulary vocab_;
  nn::TransformerConfig arch_;
  nn::ParameterStore store_;
  nn::TransformerEncoder encoder_;
  nn::TransformerDecoder decoder_;
  nn::ParamId w_q_;
  nn::ParamId w_k_;
};

// Training pairs drawn from gold-ordered sentence lists: each epoch the
// facts are shown in a fresh seeded shuffle and the model learns to restore
// the original order.
nn::TrainResult train_ordering(PointerOrderer &model,
                               const std::vector<std::vector<std::string>> &gold_sequences,
                               const TrainConfig &config, nn::TrainOptions options = {});
nn::TrainResult train_ordering(PointerOrderer &model, std::span<const CorpusExample> corpus,
                               const TrainConfig &config, nn::TrainOptions options = {});

// The shuffle shown for example `index` in `epoch`: shuffled[j] is
// gold[perm[j]], and the gold target is the inverse permutation.
std::vector<int> training_shuffle(std::uint64_t seed, std::size_t index, int epoch,
                                  std::size_t n);

struct OrderingScores {
  double accuracy = 0.0;  // exact permutation matches
  double bleu2 = 0.0;     // corpus BLEU-2 over index tokens, in [0, 100]
};

OrderingScores eval_ordering(std::span<const std::vector<int>> predicted,
                             std::span<const std::vector<int>> gold);

// op "order": {"facts": [...]} -> {"order": [...]}
class ExternalOrderer : public FactOrderer {
 public:
  explicit ExternalOrderer(SharedProcess process) : process_(std::move(process)) {}

 protected:
  std::vector<int> do_order(std::span<const std::string> facts) const override;

 private:
  SharedProcess process_;
};

// Keeps the input order; the identity baseline.
class IdentityOrderer : public FactOrderer {
 protected:
  std::vector<int> do_order(std::span<const std::string> facts) const override;
};

// Uniformly random permutation, reproducible per input: the draw depends
// only on the seed and the fact texts.
class RandomOrderer : public FactOrderer {
 public:
  explicit RandomOrderer(std::uint64_t seed) : seed_(seed) {}

 protected:
  std::vector<int> do_order(std::span<const std::string> facts) const override;

 private:
  std::uint64_t seed_;
};

}  // namespace d2t

#endif  // D2T_ORDERING_ORDERING_H_
