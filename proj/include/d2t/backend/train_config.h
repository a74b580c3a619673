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

#ifndef D2T_BACKEND_TRAIN_CONFIG_H_
#define D2T_BACKEND_TRAIN_CONFIG_H_

#include <cstdint>

#include "d2t/util/io.h"

namespace d2t {

// Optimization settings shared by every trainable model.
struct TrainConfig {
  double learning_rate = 2e-5;
  double beta1 = 0.9;
  double beta2 = 0.997;
  double epsilon = 1e-9;
  double warmup = 0.1;  // fraction of total optimizer steps
  int batch_size = 8;
  int grad_accum = 4;
  int epochs = 1;
  std::uint64_t seed = 1;
  double clip_norm = 1.0;  // global L2 norm; 0 disables clipping

  // Adam(0.9, 0.997, 1e-9), lr 2e-5, 10% warmup, batch 8 x 4, one epoch.
  static TrainConfig pretrained();
  // Small from-scratch models need a larger rate and many epochs.
  static TrainConfig toy();

  // Throws InputError on non-positive sizes or warmup outside [0, 1].
  void validate() const;
  Json to_json() const;
  // Missing keys keep the values of `defaults`.
  static TrainConfig from_json(const Json &j, const TrainConfig &defaults);
  static TrainConfig from_json(const Json &j);
};

}  // namespace d2t

#endif  // D2T_BACKEND_TRAIN_CONFIG_H_
