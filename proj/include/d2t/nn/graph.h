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

#ifndef D2T_NN_GRAPH_H_
#define D2T_NN_GRAPH_H_

#include <functional>
#include <span>
#include <vector>

#include "d2t/nn/parameters.h"
#include "d2t/text/vocabulary.h"

namespace d2t::nn {

// Handle to a node of a Graph.
struct Var {
  int id = -1;
};

// Additive value used to exclude attention or pointer positions.
inline constexpr double kMaskedLogit = -1e9;

// Reverse-mode automatic differentiation over row-major matrices.
//
// A graph is built per example. With a null Gradients pointer it only
// evaluates; otherwise backward() accumulates parameter gradients into the
// supplied buffers, so separate graphs can train on separate buffers.
class Graph {
 public:
  Graph(const ParameterStore &params, Gradients *grads);

  bool training() const { return grads_ != nullptr; }

  Var param(ParamId id);
  Var constant(Matrix value);
  // Rows of a parameter table selected by token id.
  Var embedding(ParamId table, std::span<const TokenId> ids);

  Var matmul(Var a, Var b);     // a b
  Var matmul_nt(Var a, Var b);  // a b^T
  Var add(Var a, Var b);
  Var add_row(Var a, Var row);  // adds a 1 x c row to every row of a
  Var add_constant(Var a, const Matrix &c);
  Var scale(Var a, double factor);
  Var gelu(Var a);
  Var softmax_rows(Var a);
  Var layer_norm(Var x, Var gamma, Var beta, double eps = 1e-5);
  Var rows(Var a, std::span<const int> indices);
  Var slice_cols(Var a, Eigen::Index start, Eigen::Index count);
  Var concat_cols(std::span<const Var> parts);
  Var concat_rows(std::span<const Var> parts);
  // Sum over rows r with targets[r] >= 0 of -log softmax(a_r)[targets[r]].
  // Returns a 1 x 1 node.
  Var cross_entropy(Var logits, std::span<const int> targets);
  Var sum(Var a);  // 1 x 1

  const Matrix &value(Var v) const;
  std::size_t size() const { return nodes_.size(); }

  // Seeds d(loss)/d(loss) = 1 for a 1 x 1 node and back-propagates.
  void backward(Var loss);

 private:
  struct Node {
    Matrix own;
    const Matrix *borrowed = nullptr;
    Matrix grad;
    bool needs_grad = false;
    std::function<void()> back;
  };

  Var push(Matrix value, bool needs_grad);
  bool needs(Var v) const { return nodes_[static_cast<std::size_t>(v.id)].needs_grad; }
  const Matrix &grad(Var v) const { return nodes_[static_cast<std::size_t>(v.id)].grad; }
  template <typename Expr>
  void accumulate(Var v, const Expr &g);

  const ParameterStore &params_;
  Gradients *grads_;
  std::vector<Node> nodes_;
};

}  // namespace d2t::nn

#endif  // D2T_NN_GRAPH_H_
