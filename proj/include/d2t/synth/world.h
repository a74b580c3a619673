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

#ifndef D2T_SYNTH_WORLD_H_
#define D2T_SYNTH_WORLD_H_

#include <string>
#include <utility>
#include <vector>

#include "d2t/core/templates.h"
#include "d2t/core/types.h"
#include "d2t/util/io.h"
#include "d2t/util/random.h"

namespace d2t::synth {

// A small closed world of people and restaurants used to exercise every
// stage offline. Predicates have a canonical rank (the gold order) and a
// group; adjacent facts of one group are fused into one sentence in the
// gold paragraph (delimiter 0), facts of different groups are not.
struct PredicateSpec {
  std::string predicate;
  std::string pattern;  // template, e.g. "<s> plays <o>."
  std::string phrase;   // verb phrase used in paragraphs, e.g. "plays <o>"
  int group = 0;
  std::vector<std::string> values;
};

enum class Domain { kPerson, kRestaurant };

struct Entity {
  Domain domain = Domain::kPerson;
  std::string name;
  std::string pronoun;         // "He", "She" or "It"
  std::vector<Triple> triples;  // canonical (gold) order
  std::vector<int> groups;      // group of each triple
};

// One data-to-text record: triples in dataset order, gold plan relative to
// that order, and a human-style reference paragraph.
struct D2TRecord {
  std::string id;
  std::vector<Triple> triples;
  ContentPlan plan;
  std::string reference;
};

OrderedJson to_json(const D2TRecord &r);
D2TRecord d2t_record_from_json(const Json &j);

struct DumpRecord {
  std::string article_id;
  std::string title;
  std::string text;
};

OrderedJson to_json(const DumpRecord &r);

class ToyWorld {
 public:
  ToyWorld();

  // Templates of every predicate in the world.
  TemplateRegistry templates() const;
  std::string templates_jsonl() const;

  // An entity with between min_facts and max_facts triples whose objects
  // are pairwise distinct and not substrings of one another.
  Entity sample_entity(Rng &rng, int min_facts, int max_facts) const;
  Entity sample_entity(Rng &rng, Domain domain, int min_facts, int max_facts) const;

  // Gold delimiters between consecutive canonical facts.
  static DelimiterSequence gold_delimiters(const Entity &e);
  // Gold paragraph: one sentence per group, the first naming the entity and
  // later ones opening with its pronoun. `aside` is inserted after the name
  // in the first sentence when non-empty.
  std::string paragraph(const Entity &e, const std::string &aside = "") const;
  // Parenthetical aside for the entity's domain, e.g. "(opened in 1998 ...)".
  std::string sample_aside(Rng &rng, const Entity &e) const;

  // Data-to-text records with triples shown in a random order.
  std::vector<D2TRecord> make_dataset(std::size_t n, std::uint64_t seed, int min_facts = 1,
                                      int max_facts = 6) const;

  // An encyclopedia-style dump of first paragraphs. Roughly `junk_share` of
  // the records are ones extraction must reject (lists, disambiguation
  // pages, stubs, unbalanced brackets, overlong text, duplicates) and
  // `aside_share` of the clean ones carry a parenthetical aside.
  std::vector<DumpRecord> make_dump(std::size_t n, std::uint64_t seed, double junk_share = 0.2,
                                    double aside_share = 0.3) const;

  // (complex sentence, its simple sentences) pairs for training a
  // split-and-rephrase model, e.g. "X is a pilot who sings." ->
  // "X is a pilot. X sings."
  std::vector<std::pair<std::string, std::string>> split_pairs(std::size_t n,
                                                               std::uint64_t seed) const;

  const std::vector<PredicateSpec> &predicates(Domain d) const;

 private:
  std::vector<PredicateSpec> person_;
  std::vector<PredicateSpec> restaurant_;
};

}  // namespace d2t::synth

#endif  // D2T_SYNTH_WORLD_H_
