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

#ifndef D2T_BACKEND_INTERFACES_H_
#define D2T_BACKEND_INTERFACES_H_

#include <array>
#include <span>
#include <string>
#include <string_view>

#include "d2t/nn/parameters.h"
#include "d2t/text/vocabulary.h"

namespace d2t {

// Contracts behind which every learned component lives. The pipeline only
// sees these, so a from-scratch toy model and a large external checkpoint
// are interchangeable. Inference through a const reference must be safe
// for concurrent callers.

class SequenceEncoder {
 public:
  virtual ~SequenceEncoder() = default;
  virtual int hidden_size() const = 0;
  virtual std::size_t max_length() const = 0;
  virtual const Vocabulary &vocabulary() const = 0;

  // L x hidden_size states for L tokens. Throws LengthError past
  // max_length() and InputError for an empty sequence.
  nn::Matrix encode(std::span<const TokenId> tokens) const;

 protected:
  virtual nn::Matrix do_encode(std::span<const TokenId> tokens) const = 0;
};

class ConditionalGenerator {
 public:
  virtual ~ConditionalGenerator() = default;
  virtual const Vocabulary &vocabulary() const = 0;
  virtual std::size_t max_input_length() const = 0;
  virtual std::size_t max_output_length() const = 0;

  // Greedy decoding. The result ends with </s> unless max_output_length()
  // was reached first. Throws LengthError for overlong input.
  TokenSequence generate(std::span<const TokenId> input) const;

  // Text convenience: encode, generate, decode without markers.
  virtual std::string generate_text(std::string_view input) const;

 protected:
  virtual TokenSequence do_generate(std::span<const TokenId> input) const = 0;
};

class TokenClassifier {
 public:
  virtual ~TokenClassifier() = default;
  virtual const Vocabulary &vocabulary() const = 0;
  virtual std::size_t max_length() const = 0;
  virtual int num_classes() const { return 2; }

  // L x num_classes() rows of class probabilities.
  nn::Matrix classify_tokens(std::span<const TokenId> tokens) const;

 protected:
  virtual nn::Matrix do_classify(std::span<const TokenId> tokens) const = 0;
};

enum class EntailmentLabel { kEntailment = 0, kNeutral = 1, kContradiction = 2 };

const char *to_string(EntailmentLabel label);

struct EntailmentResult {
  EntailmentLabel label = EntailmentLabel::kNeutral;
  // Indexed by EntailmentLabel; sums to 1.
  std::array<double, 3> probs{0.0, 1.0, 0.0};

  bool entailed() const { return label == EntailmentLabel::kEntailment; }
  // label = argmax(probs); ties go to the lower index.
  static EntailmentResult from_probs(std::array<double, 3> probs);
};

class EntailmentClassifier {
 public:
  virtual ~EntailmentClassifier() = default;

  // Throws InputError if either string is blank.
  EntailmentResult entails(std::string_view premise, std::string_view hypothesis) const;

 protected:
  virtual EntailmentResult do_entails(std::string_view premise,
                                      std::string_view hypothesis) const = 0;
};

}  // namespace d2t

#endif  // D2T_BACKEND_INTERFACES_H_
