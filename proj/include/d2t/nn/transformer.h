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

#ifndef D2T_NN_TRANSFORMER_H_
#define D2T_NN_TRANSFORMER_H_

#include <span>
#include <string>
#include <vector>

#include "d2t/nn/graph.h"
#include "d2t/util/io.h"

namespace d2t::nn {

// Shape of the from-scratch transformer used by the toy backend tier.
struct TransformerConfig {
  int vocab_size = 0;
  int hidden = 64;
  int layers = 2;
  int heads = 4;
  int ff = 256;
  int max_length = 512;

  void validate() const;
  Json to_json() const;
  static TransformerConfig from_json(const Json &j);
};

class Linear {
 public:
  Linear() = default;
  Linear(ParameterStore &store, const std::string &name, int in, int out, Rng &rng,
         bool bias = true);
  Var operator()(Graph &g, Var x) const;

 private:
  ParamId weight_;
  ParamId bias_;
  bool has_bias_ = false;
};

class LayerNorm {
 public:
  LayerNorm() = default;
  LayerNorm(ParameterStore &store, const std::string &name, int width);
  Var operator()(Graph &g, Var x) const;

 private:
  ParamId gamma_;
  ParamId beta_;
};

class MultiHeadAttention {
 public:
  MultiHeadAttention() = default;
  MultiHeadAttention(ParameterStore &store, const std::string &name, int hidden,
                     int heads, Rng &rng);
  // `mask` is additive (rows = queries, cols = keys) or null.
  Var operator()(Graph &g, Var queries, Var memory, const Matrix *mask) const;

 private:
  Linear q_, k_, v_, out_;
  int heads_ = 1;
  int head_dim_ = 1;
};

class FeedForward {
 public:
  FeedForward() = default;
  FeedForward(ParameterStore &store, const std::string &name, int hidden, int inner,
              Rng &rng);
  Var operator()(Graph &g, Var x) const;

 private:
  Linear up_, down_;
};

// Token plus learned position embeddings.
class Embedding {
 public:
  Embedding() = default;
  Embedding(ParameterStore &store, const std::string &name, const TransformerConfig &c,
            Rng &rng);
  // Throws LengthError beyond max_length.
  Var operator()(Graph &g, std::span<const TokenId> ids) const;
  int max_length() const { return max_length_; }

 private:
  ParamId tokens_;
  ParamId positions_;
  int max_length_ = 0;
};

// Pre-norm encoder stack: x += attn(ln(x)); x += ff(ln(x)); final ln.
class TransformerEncoder {
 public:
  TransformerEncoder() = default;
  TransformerEncoder(ParameterStore &store, const std::string &name,
                     const TransformerConfig &config, Rng &rng);
  // L x hidden states for L input tokens.
  Var operator()(Graph &g, std::span<const TokenId> ids) const;
  const TransformerConfig &config() const { return config_; }

 private:
  struct Layer {
    LayerNorm ln_attn, ln_ff;
    MultiHeadAttention attn;
    FeedForward ff;
  };
  TransformerConfig config_;
  Embedding embed_;
  std::vector<Layer> layers_;
  LayerNorm final_;
};

// Pre-norm decoder stack with causal self-attention and cross-attention to
// an encoder memory.
class TransformerDecoder {
 public:
  TransformerDecoder() = default;
  TransformerDecoder(ParameterStore &store, const std::string &name,
                     const TransformerConfig &config, Rng &rng);
  Var operator()(Graph &g, std::span<const TokenId> ids, Var memory) const;

 private:
  struct Layer {
    LayerNorm ln_self, ln_cross, ln_ff;
    MultiHeadAttention self_attn, cross_attn;
    FeedForward ff;
  };
  TransformerConfig config_;
  Embedding embed_;
  std::vector<Layer> layers_;
  LayerNorm final_;
};

// L x L additive mask hiding future positions.
Matrix causal_mask(Eigen::Index length);

}  // namespace d2t::nn

#endif  // D2T_NN_TRANSFORMER_H_
