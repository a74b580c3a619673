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

#ifndef D2T_BACKEND_RULE_MODELS_H_
#define D2T_BACKEND_RULE_MODELS_H_

#include <string>
#include <string_view>
#include <vector>

#include "d2t/backend/interfaces.h"

namespace d2t {

// Lowercased word tokens (alphanumeric runs; non-ASCII bytes count as word
// characters).
std::vector<std::string> word_tokens(std::string_view text);

bool is_subject_pronoun(std::string_view word);

// Capitalized words opening a sentence, e.g. "Alan Bean" in "Alan Bean was
// born ...". Empty when the run is not followed by a lowercase non-
// preposition word, since then it is unlikely to be the subject.
std::string leading_subject(std::string_view sentence);

// Entailment by lexical coverage: the share of the hypothesis' content
// words (stopwords removed, plural "s" stripped) found in the premise.
// Coverage at or above the threshold gives entailment; a negation present
// only in the hypothesis gives contradiction. A stand-in for a trained NLI
// model that keeps filtering and evaluation runnable offline.
class LexicalEntailment : public EntailmentClassifier {
 public:
  explicit LexicalEntailment(double threshold = 0.9) : threshold_(threshold) {}

  // Share of hypothesis content words covered by the premise, in [0, 1].
  static double coverage(std::string_view premise, std::string_view hypothesis);

 protected:
  EntailmentResult do_entails(std::string_view premise,
                              std::string_view hypothesis) const override;

 private:
  double threshold_;
};

// Deterministic split-and-rephrase: cuts a sentence once at the first
// relative clause ("who"), comma-joined verb phrase or "and"-joined verb
// phrase, and repeats the subject in the second sentence. Sentences it
// cannot split are echoed back, which the corpus builder's duplicate check
// turns into a no-op.
class RuleSplitter : public ConditionalGenerator {
 public:
  RuleSplitter() : vocab_(Vocabulary::bytes()) {}

  const Vocabulary &vocabulary() const override { return vocab_; }
  std::size_t max_input_length() const override { return 1u << 20; }
  std::size_t max_output_length() const override { return 1u << 20; }
  std::string generate_text(std::string_view input) const override;

 protected:
  TokenSequence do_generate(std::span<const TokenId> input) const override;

 private:
  Vocabulary vocab_;
};

}  // namespace d2t

#endif  // D2T_BACKEND_RULE_MODELS_H_
