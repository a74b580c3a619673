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

#ifndef D2T_NN_PARAMETERS_H_
#define D2T_NN_PARAMETERS_H_

#include <Eigen/Core>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "d2t/util/random.h"

namespace d2t::nn {

using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Index of a parameter inside its store.
struct ParamId {
  std::size_t index = 0;
};

struct Parameter {
  std::string name;
  Matrix value;
};

// Owns every trainable matrix of a model. Registration order is the
// serialization order.
class ParameterStore {
 public:
  ParamId add(std::string name, Matrix init);
  // Gaussian init with the given standard deviation.
  ParamId add_normal(std::string name, Eigen::Index rows, Eigen::Index cols,
                     double stddev, Rng &rng);
  ParamId add_constant(std::string name, Eigen::Index rows, Eigen::Index cols,
                       double value);

  Parameter &operator[](ParamId id) { return params_[id.index]; }
  const Parameter &operator[](ParamId id) const { return params_[id.index]; }
  Parameter &at(std::size_t i) { return params_[i]; }
  const Parameter &at(std::size_t i) const { return params_[i]; }
  std::size_t size() const { return params_.size(); }
  std::size_t scalar_count() const;

  const Parameter *find(std::string_view name) const;

 private:
  std::vector<Parameter> params_;
};

// Gradient buffers shaped like a ParameterStore.
class Gradients {
 public:
  Gradients() = default;
  explicit Gradients(const ParameterStore &store);

  Matrix &operator[](ParamId id) { return grads_[id.index]; }
  const Matrix &operator[](ParamId id) const { return grads_[id.index]; }
  Matrix &at(std::size_t i) { return grads_[i]; }
  const Matrix &at(std::size_t i) const { return grads_[i]; }
  std::size_t size() const { return grads_.size(); }

  void zero();
  void scale(double factor);
  Gradients &operator+=(const Gradients &other);
  double squared_norm() const;

 private:
  std::vector<Matrix> grads_;
};

}  // namespace d2t::nn

#endif  // D2T_NN_PARAMETERS_H_
