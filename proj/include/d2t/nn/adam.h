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

#ifndef D2T_NN_ADAM_H_
#define D2T_NN_ADAM_H_

#include <cstdint>
#include <vector>

#include "d2t/backend/train_config.h"
#include "d2t/nn/parameters.h"

namespace d2t::nn {

struct AdamState {
  std::uint64_t step = 0;
  std::vector<Matrix> first;
  std::vector<Matrix> second;
};

// Adam with linear warmup followed by linear decay to zero at
// `total_steps`, plus optional global-norm gradient clipping.
class Adam {
 public:
  Adam(const ParameterStore &store, const TrainConfig &config, std::uint64_t total_steps);

  // Applies one update using `grads` (already averaged over the batch).
  // Returns the learning rate used.
  double step(ParameterStore &store, Gradients &grads);

  double learning_rate_at(std::uint64_t step) const;
  const AdamState &state() const { return state_; }
  // Shapes must match the store the optimizer was built for.
  void restore(AdamState state);
  std::uint64_t total_steps() const { return total_steps_; }

 private:
  TrainConfig config_;
  std::uint64_t total_steps_;
  AdamState state_;
};

}  // namespace d2t::nn

#endif  // D2T_NN_ADAM_H_
