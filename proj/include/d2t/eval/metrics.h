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


#ifndef D2T_EVAL_METRICS_H_
#define D2T_EVAL_METRICS_H_

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "d2t/aggregation/aggregation.h"
#include "d2t/backend/external.h"
#include "d2t/backend/interfaces.h"
#include "d2t/compression/compression.h"
#include "d2t/corpus/example.h"
#include "d2t/ordering/ordering.h"
#include "d2t/pipeline/pipeline.h"
#include "d2t/util/io.h"

namespace d2t {

struct SemanticAccuracy {
  int omissions = 0;          // facts the output does not entail
  bool hallucinated = false;  // the facts do not entail the output
};

// Throws InputError for a blank output.
SemanticAccuracy semantic_accuracy(std::string_view output, std::span<const std::string> facts,
                                   const EntailmentClassifier &nli);

// Corpus-level METEOR from a packaged scorer.
class MeteorScorer {
 public:
  virtual ~MeteorScorer() = default;
  virtual double score(std::span<const std::string> candidates,
                       std::span<const std::vector<std::string>> references) const = 0;
};

// op "meteor": {"candidates": [...], "references": [[...], ...]} -> {"score": x}
class ExternalMeteor : public MeteorScorer {
 public:
  explicit ExternalMeteor(SharedProcess process) : process_(std::move(process)) {}
  double score(std::span<const std::string> candidates,
               std::span<const std::vector<std::string>> references) const override;

 private:
  SharedProcess process_;
};

struct ExampleScore {
  std::string id;
  std::size_t facts = 0;
  int omissions = 0;
  bool hallucinated = false;
  bool failed = false;  // the record carried a generation error
};

struct EvalReport {
  std::string system_tag;
  std::size_t n_examples = 0;
  std::size_t n_failed = 0;
  double bleu = 0.0;
  std::optional<double> meteor;
  // Means over examples of omissions / facts and of the hallucination flag.
  std::optional<double> omissions_per_fact;
  std::optional<double> hallucinations_per_example;
  std::vector<ExampleScore> examples;  // filled when semantic metrics run

  OrderedJson to_json() const;
  // id, facts, omissions, hallucinated, failed
  std::string examples_tsv() const;
};

struct EvalOptions {
  std::string system_tag = "system";
  bool semantic = true;
  int max_ngram = 4;
  const EntailmentClassifier *nli = nullptr;  // needed when semantic is set
  const MeteorScorer *meteor = nullptr;       // optional
  std::size_t workers = 1;
};

// Records and dataset lines must align one to one with matching ids.
// Failed records count as an empty output: every fact omitted, nothing
// hallucinated. Throws CapabilityError when semantic metrics are asked for
// without an NLI model.
EvalReport evaluate_system(std::span<const GenerationRecord> records,
                           std::span<const DataRecord> dataset, const EvalOptions &options);

struct PlanEvalReport {
  std::size_t n_examples = 0;
  OrderingScores ordering;
  std::optional<AggregationScores> aggregation;  // when both sides carry delimiters
  OrderedJson to_json() const;
};

// Predicted plans against the dataset's gold plans.
PlanEvalReport evaluate_plans(std::span<const GenerationRecord> records,
                              std::span<const DataRecord> dataset);

struct IntrinsicModels {
  const FactOrderer *orderer = nullptr;
  const DelimiterPredictor *aggregator = nullptr;
  const ConditionalGenerator *compressor = nullptr;
  PCVariant pc_variant = PCVariant::kPC;
  const MeteorScorer *meteor = nullptr;
  std::uint64_t seed = 1;  // shuffle shown to the orderer
};

struct IntrinsicReport {
  std::size_t n_examples = 0;
  std::optional<OrderingScores> ordering;
  std::optional<AggregationScores> aggregation;
  std::optional<double> pc_bleu;
  std::optional<double> pc_meteor;
  OrderedJson to_json() const;
};

// Scores each given model on a held-out corpus split. The orderer sees
// every example's sentences in a seeded shuffle, the aggregator sees them
// in gold order, and compression gets the gold plan. Throws InputError for
// an empty split.
IntrinsicReport intrinsic_eval(std::span<const CorpusExample> test, const IntrinsicModels &models);

}  // namespace d2t

#endif  // D2T_EVAL_METRICS_H_
