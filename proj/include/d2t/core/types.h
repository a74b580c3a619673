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

#ifndef D2T_CORE_TYPES_H_
#define D2T_CORE_TYPES_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "d2t/util/io.h"

namespace d2t {

// (subject; predicate; object). Every field is non-empty after trimming;
// use Triple::make to get a checked instance.
struct Triple {
  std::string subject;
  std::string predicate;
  std::string object;

  // Trims all three fields and throws InputError if any is empty.
  static Triple make(std::string_view subject, std::string_view predicate,
                     std::string_view object);

  friend bool operator==(const Triple &, const Triple &) = default;
};

// One sentence realizing one triple.
struct Fact {
  std::string text;
  Triple source;

  friend bool operator==(const Fact &, const Fact &) = default;
};

// Binary boundary decisions between adjacent ordered facts:
// 0 = fuse the neighbours into one sentence, 1 = keep them separate.
using DelimiterSequence = std::vector<int>;

// Permutation of fact indices plus n-1 delimiters.
struct ContentPlan {
  std::vector<int> order;
  DelimiterSequence delimiters;

  std::size_t size() const { return order.size(); }

  // O(n) check of both invariants for a plan over n facts.
  bool valid(std::size_t n) const;
  // Throws InputError naming the broken invariant.
  void validate(std::size_t n) const;

  friend bool operator==(const ContentPlan &, const ContentPlan &) = default;
};

bool is_permutation_of_range(std::span<const int> order);
bool is_delimiter_sequence(std::span<const int> values, std::size_t n_facts);

// Applies a permutation: result[j] = items[order[j]].
template <typename T>
std::vector<T> apply_order(std::span<const T> items, std::span<const int> order) {
  std::vector<T> out;
  out.reserve(order.size());
  for (int i : order) out.push_back(items[static_cast<std::size_t>(i)]);
  return out;
}

Json to_json(const Triple &t);
Triple triple_from_json(const Json &j);
Json to_json(const Fact &f);
Fact fact_from_json(const Json &j);
Json to_json(const ContentPlan &p);
ContentPlan plan_from_json(const Json &j);

std::vector<Triple> triples_from_json(const Json &array);
Json to_json(std::span<const Triple> triples);
Json to_json(std::span<const Fact> facts);

}  // namespace d2t

#endif  // D2T_CORE_TYPES_H_
