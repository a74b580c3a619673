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

#ifndef D2T_CORE_TEMPLATES_H_
#define D2T_CORE_TEMPLATES_H_

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "d2t/core/types.h"

namespace d2t {

inline constexpr std::string_view kSubjectSlot = "<s>";
inline constexpr std::string_view kObjectSlot = "<o>";

// Predicate-specific sentence pattern, e.g. "<s> plays <o>.".
class Template {
 public:
  // Validates the pattern: exactly one <s>, at most one <o>, and a final
  // '.', '!' or '?'. Throws InputError otherwise.
  Template(std::string predicate, std::string pattern);

  const std::string &predicate() const { return predicate_; }
  const std::string &pattern() const { return pattern_; }
  bool has_object_slot() const { return pattern_.find(kObjectSlot) != std::string::npos; }

  // Substitutes both slots verbatim.
  std::string fill(std::string_view subject, std::string_view object) const;

 private:
  std::string predicate_;
  std::string pattern_;
};

// Trims and collapses internal whitespace. Case, underscores and camelCase
// are left alone so distinct dataset predicates never collide.
std::string normalize_predicate(std::string_view predicate);

class TemplateRegistry {
 public:
  TemplateRegistry() = default;
  explicit TemplateRegistry(std::string dataset_id) : dataset_id_(std::move(dataset_id)) {}

  // Throws ConflictError if the normalized predicate is already present.
  void add(Template t);

  const Template *find(std::string_view predicate) const;
  const Template &at(std::string_view predicate) const;  // MissingTemplateError
  bool contains(std::string_view predicate) const { return find(predicate) != nullptr; }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::string &dataset_id() const { return dataset_id_; }
  const std::map<std::string, Template> &entries() const { return entries_; }

 private:
  std::map<std::string, Template> entries_;
  std::string dataset_id_;
};

// Reads one {"predicate": ..., "pattern": ...} object per line. Blank lines
// are skipped. Malformed records raise ParseError with the line number;
// a repeated predicate raises ConflictError.
TemplateRegistry load_templates(const std::filesystem::path &path,
                                std::string dataset_id);
TemplateRegistry parse_templates(std::string_view jsonl, std::string dataset_id);

std::string templates_to_jsonl(const TemplateRegistry &registry);

// Fills the predicate's template. Subjects or objects that spell a slot
// marker are rejected with InputError.
Fact realize_fact(const Triple &triple, const TemplateRegistry &registry);

// Realizes each triple in order. The first unknown predicate raises
// MissingTemplateError carrying the triple index.
std::vector<Fact> realize_all(std::span<const Triple> triples,
                              const TemplateRegistry &registry);

// Restaurant records: the name becomes the subject of one triple per
// remaining attribute, in the given order. A "name" key inside
// `attributes` is consumed rather than emitted.
std::vector<Triple> e2e_to_triples(
    std::string_view name,
    std::span<const std::pair<std::string, std::string>> attributes);

// Accepts {"name": ..., "attributes": {...}} or {"attributes": {"name": ...}}
// (attribute order preserved). Missing name raises InputError.
std::vector<Triple> e2e_record_to_triples(const OrderedJson &record);

}  // namespace d2t

#endif  // D2T_CORE_TEMPLATES_H_
