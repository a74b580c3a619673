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

#ifndef D2T_NN_TRAINER_H_
#define D2T_NN_TRAINER_H_

#include <functional>
#include <optional>
#include <vector>

#include "d2t/backend/train_config.h"
#include "d2t/nn/adam.h"
#include "d2t/nn/graph.h"

namespace d2t::nn {

// Loss of one example as a 1 x 1 node, already averaged over the example's
// terms (tokens, pointer steps, separators). Returns nullopt when the
// example has nothing to learn from. The epoch lets callers redraw
// per-epoch randomness such as input shuffles.
using ExampleLoss =
    std::function<std::optional<Var>(Graph &, std::size_t example, int epoch)>;

struct EpochStats {
  int epoch = 0;  // 0-based
  double mean_loss = 0.0;
  double learning_rate = 0.0;
  std::size_t examples = 0;
  // Optimizer state after the epoch, for checkpointing. Valid only during
  // the callback.
  const AdamState *optimizer = nullptr;
};

struct TrainOptions {
  // Continue a run: epochs before start_epoch are considered done and
  // `resume` carries the optimizer state saved with them.
  int start_epoch = 0;
  std::optional<AdamState> resume;
  // Called after each epoch; returning true stops training early.
  std::function<bool(const EpochStats &)> on_epoch;
};

struct TrainResult {
  std::vector<double> epoch_losses;
  AdamState optimizer;
  int epochs_done = 0;
};

// Minibatch Adam training. Example order is reshuffled every epoch from
// config.seed and the epoch number alone, so resuming at epoch k replays
// exactly the batches an uninterrupted run would see.
TrainResult train_loop(ParameterStore &store, std::size_t n_examples,
                       const TrainConfig &config, const ExampleLoss &loss,
                       TrainOptions options = {});

}  // namespace d2t::nn

#endif  // D2T_NN_TRAINER_H_
