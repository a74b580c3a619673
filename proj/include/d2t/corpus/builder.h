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


#ifndef D2T_CORPUS_BUILDER_H_
#define D2T_CORPUS_BUILDER_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "d2t/backend/coref.h"
#include "d2t/backend/interfaces.h"
#include "d2t/corpus/example.h"
#include "d2t/util/io.h"

namespace d2t {

struct RawParagraph {
  std::string article_id;
  std::string title;
  std::string text;  // trimmed
  friend bool operator==(const RawParagraph &, const RawParagraph &) = default;
};

// Character-length buckets [30,130) [130,230) [230,330) [330,430]; lengths
// count UTF-8 code points of the trimmed text.
struct LengthBuckets {
  std::array<std::size_t, 5> bounds{30, 130, 230, 330, 430};
  std::size_t quota = std::numeric_limits<std::size_t>::max();  // per bucket

  // Bucket index or -1 when out of range.
  int bucket_of(std::size_t length) const;
};

std::size_t utf8_length(std::string_view s);

// Reason a paragraph is not usable, or nullopt if it is. Length is checked
// separately by the buckets.
std::optional<std::string> paragraph_rejection(std::string_view title, std::string_view text);

struct ExtractStats {
  std::size_t records = 0;
  std::size_t accepted = 0;
  std::map<std::string, std::size_t> rejected;  // by reason
  std::array<std::size_t, 4> per_bucket{};
  Json to_json() const;
};

// Filters dump records: length buckets with quotas, lists, short stubs,
// unbalanced brackets, disambiguation pages and exact duplicates (first one
// wins). Order of the survivors follows the input.
std::vector<RawParagraph> extract_paragraphs(std::span<const RawParagraph> records,
                                             const LengthBuckets &buckets,
                                             ExtractStats *stats = nullptr);
// Reads a JSONL dump of {"article_id", "title", "text"}. Throws IoError if
// the file cannot be read and ParseError for malformed lines.
std::vector<RawParagraph> read_dump(const std::filesystem::path &path);
std::vector<RawParagraph> extract_paragraphs(const std::filesystem::path &dump_path,
                                             const LengthBuckets &buckets,
                                             ExtractStats *stats = nullptr);

// Model outputs whose similarity to the input reaches this count as a
// duplicated sentence.
inline constexpr double kDuplicateSimilarity = 0.9;

// One split attempt. Falls back to {sentence} when the model fails, returns
// fewer than two sentences, or any output sentence (or the whole output)
// is near-identical to the input.
std::vector<std::string> split_once(const std::string &sentence,
                                    const ConditionalGenerator &model);

// Applies split_once `depth` times, each level to every sentence produced
// so far. depth 0 is the identity.
std::vector<std::string> split_and_rephrase(const std::string &sentence,
                                            const ConditionalGenerator &model, int depth);

// Sets omission (some sentence is not entailed by the paragraph),
// hallucination (the joined sentences do not entail the paragraph) and
// kept. A classifier failure leaves the example not kept with `error` set.
CorpusExample nli_filter(CorpusExample example, const EntailmentClassifier &nli);

struct CorpusBackends {
  const ConditionalGenerator *splitter = nullptr;
  const CorefBackend *coref = nullptr;
  const EntailmentClassifier *nli = nullptr;
};

struct BuildConfig {
  std::uint64_t seed = 1;
  std::size_t workers = 1;
  LengthBuckets buckets;
  std::size_t dev_size = 0;
  std::size_t test_size = 0;
  int max_depth = 2;  // split depths are drawn from {0, ..., max_depth}

  static BuildConfig from_json(const Json &j, BuildConfig defaults);
  OrderedJson to_json() const;
};

// Runs one paragraph through splitting, coreference replacement and NLI
// filtering. Randomness comes from (seed, article_id) only. Throws on a
// stage failure; the message names the stage.
CorpusExample build_example(const RawParagraph &paragraph, const CorpusBackends &backends,
                            const BuildConfig &config);

struct CorpusStats {
  std::size_t examples = 0;
  double tokens_per_source = 0.0;
  double tokens_per_target = 0.0;
  double sentences_per_source = 0.0;
  double sentences_per_target = 0.0;
  OrderedJson to_json() const;
};

CorpusStats corpus_stats(std::span<const CorpusExample> examples);

struct BuildReport {
  ExtractStats extract;
  std::map<std::string, std::size_t> stage_errors;
  std::size_t omissions = 0;
  std::size_t hallucinations = 0;
  CorpusStats full;
  CorpusStats filtered;
  std::map<std::string, std::size_t> split_sizes;  // "full.train", ...
  OrderedJson to_json() const;
};

struct BuiltCorpus {
  std::vector<CorpusExample> full;      // sorted by id
  std::vector<CorpusExample> filtered;  // kept examples only
  std::map<std::string, std::string> split_of;  // id -> train/dev/test
  BuildReport report;
};

BuiltCorpus build_corpus(std::span<const RawParagraph> dump, const CorpusBackends &backends,
                         const BuildConfig &config);

// Reads the dump and writes into out_dir:
//   full.jsonl, filtered.jsonl, {full,filtered}.{train,dev,test}.jsonl,
//   stats.json
BuildReport build_corpus(const std::filesystem::path &dump_path,
                         const std::filesystem::path &out_dir,
                         const CorpusBackends &backends, const BuildConfig &config);

}  // namespace d2t

#endif  // D2T_CORPUS_BUILDER_H_
