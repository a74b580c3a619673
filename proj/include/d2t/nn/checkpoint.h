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

#ifndef D2T_NN_CHECKPOINT_H_
#define D2T_NN_CHECKPOINT_H_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "d2t/nn/adam.h"
#include "d2t/nn/parameters.h"
#include "d2t/text/vocabulary.h"
#include "d2t/util/io.h"

namespace d2t::nn {

// Checkpoint directory layout:
//   manifest.json   kind, vocabulary hash, hidden size, model/train config,
//                   parameter names and shapes
//   vocab.json      token inventory
//   weights.bin     parameters as little-endian float64, manifest order
//   optimizer.bin   optional Adam state (step, first and second moments)
struct CheckpointManifest {
  std::string kind;
  std::string vocab_hash;
  int hidden_size = 0;
  Json model_config = Json::object();
  Json train_config = Json::object();
  Json extra = Json::object();
};

struct Checkpoint {
  CheckpointManifest manifest;
  Vocabulary vocabulary;
  std::vector<Parameter> parameters;
  std::optional<AdamState> optimizer;
};

inline constexpr int kCheckpointFormat = 1;

void save_checkpoint(const std::filesystem::path &dir, const CheckpointManifest &manifest,
                     const Vocabulary &vocab, const ParameterStore &params,
                     const AdamState *optimizer = nullptr);

// Throws IoError for missing files and InputError for inconsistent content
// (vocabulary hash or parameter shapes disagreeing with the manifest).
Checkpoint load_checkpoint(const std::filesystem::path &dir);

// Reads only manifest.json.
Json read_manifest(const std::filesystem::path &dir);

// Copies loaded values into a freshly constructed store; names and shapes
// must match one to one.
void restore_parameters(ParameterStore &store, const std::vector<Parameter> &loaded);

// Relative model paths that do not exist locally are looked up under
// $D2T_MODEL_CACHE when that variable is set.
std::filesystem::path resolve_model_path(const std::filesystem::path &path);

inline constexpr const char *kModelCacheEnv = "D2T_MODEL_CACHE";

}  // namespace d2t::nn

#endif  // D2T_NN_CHECKPOINT_H_
