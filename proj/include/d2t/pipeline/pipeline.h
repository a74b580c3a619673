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


#ifndef D2T_PIPELINE_PIPELINE_H_
#define D2T_PIPELINE_PIPELINE_H_

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "d2t/aggregation/aggregation.h"
#include "d2t/compression/compression.h"
#include "d2t/core/templates.h"
#include "d2t/core/types.h"
#include "d2t/ordering/ordering.h"
#include "d2t/util/io.h"

namespace d2t {

enum class StageCount { kOne = 1, kTwo = 2, kThree = 3 };

const char *to_string(StageCount s);  // "one", "two", "three"
// Accepts "one"/"two"/"three", "1"/"2"/"3" and "1-stage" style names.
StageCount stage_count_from_string(std::string_view name);
// The PC variant each stage count is built around.
PCVariant required_pc_variant(StageCount s);

// Model references are checkpoint directories (relative ones are also
// looked up under $D2T_MODEL_CACHE), "external:<command>" for a process
// speaking the JSON-lines protocol, or a built-in baseline:
//   ordering:     "identity", "random"
//   aggregation:  "random", "separate-all"
struct PipelineConfig {
  StageCount stages = StageCount::kThree;
  std::string ord_model;
  std::string agg_model;
  std::string pc_model;
  // Needed for external PC models; checkpoints record their own variant.
  std::optional<PCVariant> pc_variant;
  std::string templates;
  std::string dataset_id = "dataset";
  std::string corpus_variant = "filtered";  // tag only: "full" or "filtered"
  std::uint64_t seed = 1;
  std::size_t workers = 1;

  // Exactly the models the stage count uses must be set. Throws InputError.
  void validate() const;
  static PipelineConfig from_json(const Json &j);
  static PipelineConfig from_json(const Json &j, PipelineConfig defaults);
  OrderedJson to_json() const;
};

std::unique_ptr<FactOrderer> load_orderer(const std::string &ref, std::uint64_t seed);
std::unique_ptr<DelimiterPredictor> load_delimiter_predictor(const std::string &ref,
                                                             std::uint64_t seed);
struct LoadedCompressor {
  std::unique_ptr<ConditionalGenerator> model;
  std::optional<PCVariant> variant;  // from the checkpoint, when it says
};
LoadedCompressor load_compressor(const std::string &ref);

struct StageFailure {
  std::string stage;  // templates, ordering, aggregation, compression, input
  std::string message;
  friend bool operator==(const StageFailure &, const StageFailure &) = default;
};

struct GenerationRecord {
  std::string id;
  std::vector<Triple> triples;
  std::vector<Fact> facts;
  std::optional<std::vector<int>> order;         // two and three stages
  std::optional<DelimiterSequence> delimiters;   // three stages
  std::string pc_input;
  std::string output;
  std::optional<StageFailure> error;

  OrderedJson to_json() const;
  static GenerationRecord from_json(const Json &j);
  friend bool operator==(const GenerationRecord &, const GenerationRecord &) = default;
};

// Templates, then ordering, aggregation and compression as the stage count
// asks. Models are shared read-only, so run() may be called concurrently.
class Pipeline {
 public:
  Pipeline(TemplateRegistry templates, StageCount stages, std::unique_ptr<FactOrderer> orderer,
           std::unique_ptr<DelimiterPredictor> aggregator,
           std::unique_ptr<ConditionalGenerator> compressor, PCVariant pc_variant);

  // Validates the config, then loads templates and models.
  static Pipeline load(const PipelineConfig &config);

  StageCount stages() const { return stages_; }
  PCVariant pc_variant() const { return pc_variant_; }
  const TemplateRegistry &templates() const { return templates_; }

  // Throws StageError naming the failing stage.
  GenerationRecord run(std::span<const Triple> triples, std::string id = "") const;

 private:
  TemplateRegistry templates_;
  StageCount stages_;
  std::unique_ptr<FactOrderer> orderer_;
  std::unique_ptr<DelimiterPredictor> aggregator_;
  std::unique_ptr<ConditionalGenerator> compressor_;
  PCVariant pc_variant_;
};

GenerationRecord run_pipeline(std::span<const Triple> triples, const Pipeline &pipeline);

// Template facts joined by single spaces in input order; "" for no triples.
std::string copy_baseline(std::span<const Triple> triples, const TemplateRegistry &registry);

// One dataset line: {"id", "triples": [...], "references": [...],
// "plan": {...}}. Only triples are required.
struct DataRecord {
  std::string id;
  std::vector<Triple> triples;
  std::vector<std::string> references;
  std::optional<ContentPlan> plan;
  std::optional<std::string> parse_error;  // set when the line was unusable
};

DataRecord data_record_from_json(const Json &j);
// Reads every line; malformed lines come back with parse_error set so
// batch runs can report them in place.
std::vector<DataRecord> read_dataset(const std::filesystem::path &path);
// Strict variant for callers that need every record: throws ParseError.
std::vector<DataRecord> load_dataset(const std::filesystem::path &path);

struct BatchSummary {
  std::size_t records = 0;
  std::size_t failed = 0;
  std::map<std::string, std::size_t> errors_by_stage;
  OrderedJson to_json() const;
};

// One record per input, in input order. Failures become error records.
std::vector<GenerationRecord> batch_generate(std::span<const DataRecord> records,
                                             const Pipeline &pipeline, std::size_t workers,
                                             BatchSummary *summary = nullptr);
BatchSummary batch_generate(const std::filesystem::path &dataset_path, const Pipeline &pipeline,
                            const std::filesystem::path &out_path, std::size_t workers);

std::vector<GenerationRecord> batch_copy_baseline(std::span<const DataRecord> records,
                                                  const TemplateRegistry &registry,
                                                  BatchSummary *summary = nullptr);

std::string records_jsonl(std::span<const GenerationRecord> records);
std::vector<GenerationRecord> load_generation_records(const std::filesystem::path &path);

}  // namespace d2t

#endif  // D2T_PIPELINE_PIPELINE_H_
