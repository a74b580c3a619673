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

#ifndef D2T_BACKEND_EXTERNAL_H_
#define D2T_BACKEND_EXTERNAL_H_

#include <cstdio>
#include <memory>
#include <mutex>
#include <string>

#include "d2t/backend/coref.h"
#include "d2t/backend/interfaces.h"
#include "d2t/util/io.h"

namespace d2t {

// A long-running child process answering one JSON request per line on
// stdin with one JSON response per line on stdout. This is how large
// pretrained checkpoints are plugged in without linking a DL runtime.
//
// Request:  {"op": "<name>", ...}
// Response: {...} on success or {"error": "<message>"}.
//
// Calls are serialized by a mutex, so one process can back concurrent
// callers.
class ExternalProcess {
 public:
  // Runs `command` through /bin/sh. Throws IoError if spawning fails.
  explicit ExternalProcess(std::string command);
  ~ExternalProcess();
  ExternalProcess(const ExternalProcess &) = delete;
  ExternalProcess &operator=(const ExternalProcess &) = delete;

  const std::string &command() const { return command_; }

  // Sends one request and waits for its response. Throws IoError if the
  // process died or answered with invalid JSON, CapabilityError if it
  // reports an error.
  Json call(const Json &request) const;

 private:
  std::string command_;
  int pid_ = -1;
  FILE *to_child_ = nullptr;
  FILE *from_child_ = nullptr;
  mutable std::mutex mu_;
};

using SharedProcess = std::shared_ptr<const ExternalProcess>;

// op "generate": {"input": text} -> {"output": text}
class ExternalGenerator : public ConditionalGenerator {
 public:
  explicit ExternalGenerator(SharedProcess process)
      : process_(std::move(process)), vocab_(Vocabulary::bytes()) {}

  const Vocabulary &vocabulary() const override { return vocab_; }
  std::size_t max_input_length() const override { return 1u << 20; }
  std::size_t max_output_length() const override { return 1u << 20; }
  std::string generate_text(std::string_view input) const override;

 protected:
  TokenSequence do_generate(std::span<const TokenId> input) const override;

 private:
  SharedProcess process_;
  Vocabulary vocab_;
};

// op "entails": {"premise", "hypothesis"} -> {"probs": [e, n, c]}
class ExternalEntailment : public EntailmentClassifier {
 public:
  explicit ExternalEntailment(SharedProcess process) : process_(std::move(process)) {}

 protected:
  EntailmentResult do_entails(std::string_view premise,
                              std::string_view hypothesis) const override;

 private:
  SharedProcess process_;
};

// op "coref": {"sentences": [...]} -> {"clusters": [[[s, b, e], ...], ...]}
class ExternalCoref : public CorefBackend {
 public:
  explicit ExternalCoref(SharedProcess process) : process_(std::move(process)) {}
  std::vector<MentionCluster> resolve(std::span<const std::string> sentences) const override;

 private:
  SharedProcess process_;
};

}  // namespace d2t

#endif  // D2T_BACKEND_EXTERNAL_H_
