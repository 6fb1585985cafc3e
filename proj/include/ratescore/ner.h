// Copyright 2026 The ratescore Authors
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

#ifndef RATESCORE_NER_H_
#define RATESCORE_NER_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ratescore/types.h"

namespace ratescore {

// Dictionary of entity names (normalized) to base entity types.
class Gazetteer {
 public:
  Gazetteer() = default;

  // Throws ValidationError for a negated type or a name that normalizes to
  // empty; InputError for conflicting duplicate entries.
  explicit Gazetteer(const std::map<std::string, EntityType>& entries);

  std::optional<EntityType> lookup(std::string_view normalized_name) const;

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::size_t max_entry_tokens() const { return max_entry_tokens_; }
  const std::map<std::string, EntityType, std::less<>>& entries() const {
    return entries_;
  }

 private:
  std::map<std::string, EntityType, std::less<>> entries_;
  std::size_t max_entry_tokens_ = 0;
};

// TSV, one "name<TAB>type" per line with type in {Anatomy, Abnormality,
// Disease}. Blank lines and lines starting with '#' are skipped.
Gazetteer load_gazetteer(const std::string& path);

// Trigger phrases are stored as lowercased token sequences so that
// punctuation terminators such as ";" survive.
struct NegationLexicon {
  using Phrase = std::vector<std::string>;

  std::vector<Phrase> forward_triggers;
  std::vector<Phrase> backward_triggers;
  std::vector<Phrase> terminators;
  // Normalized entity names that denote a normal finding on their own
  // ("in situ", "patent"); they are typed as negated regardless of context.
  std::vector<std::string> self_negating;

  // Throws ValidationError on an empty phrase.
  void add_forward(std::string_view phrase);
  void add_backward(std::string_view phrase);
  void add_terminator(std::string_view phrase);
  void add_self_negating(std::string_view name);

  bool is_self_negating(std::string_view normalized_name) const;

  static NegationLexicon defaults();
};

// TSV, one "kind<TAB>phrase" per line with kind in {forward, backward,
// terminator, self}. The file replaces the defaults entirely.
NegationLexicon load_negation_lexicon(const std::string& path);

// Greedy left-to-right longest match over tokens. Spans index into
// `sentence`, never overlap, and come out sorted.
std::vector<TypedEntity> gazetteer_tag(std::string_view sentence,
                                       const Gazetteer& gazetteer);

struct PolarityResult {
  std::vector<TypedEntity> entities;
  // Set when some entity had no span; such entities pass through unchanged.
  bool missing_spans = false;
};

// Negates entities inside a forward trigger's scope (trigger before the
// entity, no terminator in between) or a backward trigger's scope (trigger
// after the entity, no terminator in between). Trigger occurrences that
// overlap an entity span are ignored.
PolarityResult apply_polarity(std::string_view sentence,
                              const std::vector<TypedEntity>& entities,
                              const NegationLexicon& lexicon);

// Splits a report into sentences, tags and negates each, and returns the
// entities with spans relative to the whole report.
class GazetteerTagger {
 public:
  GazetteerTagger(Gazetteer gazetteer, NegationLexicon lexicon)
      : gazetteer_(std::move(gazetteer)), lexicon_(std::move(lexicon)) {}

  TaggedReport tag(std::string_view report) const;

  const Gazetteer& gazetteer() const { return gazetteer_; }
  const NegationLexicon& lexicon() const { return lexicon_; }

 private:
  Gazetteer gazetteer_;
  NegationLexicon lexicon_;
};

// --- IOB -------------------------------------------------------------------

struct IobTag {
  enum class Prefix : std::uint8_t { kOutside, kBegin, kInside };

  Prefix prefix = Prefix::kOutside;
  EntityType type = EntityType::kAnatomy;  // ignored when outside

  static IobTag outside() { return {}; }
  static IobTag begin(EntityType t) { return {Prefix::kBegin, t}; }
  static IobTag inside(EntityType t) { return {Prefix::kInside, t}; }

  friend bool operator==(const IobTag& a, const IobTag& b) {
    if (a.prefix != b.prefix) return false;
    return a.prefix == Prefix::kOutside || a.type == b.type;
  }
};

std::optional<IobTag> parse_iob_tag(std::string_view text);
std::string to_string(const IobTag& tag);

// Maximal entity run over tokens [begin, end).
struct IobRun {
  std::size_t begin = 0;
  std::size_t end = 0;
  EntityType type = EntityType::kAnatomy;

  friend bool operator==(const IobRun&, const IobRun&) = default;
};

// An I- tag that does not continue a run of the same type starts a new run
// (stray-I repair).
std::vector<IobRun> iob_runs(std::span<const IobTag> tags);
std::vector<IobTag> encode_iob(std::size_t num_tokens,
                               std::span<const IobRun> runs);
std::vector<IobTag> repair_iob(std::span<const IobTag> tags);

// Token runs become entities named by their tokens joined with single
// spaces. Spans are filled in when token offsets are given. Throws
// InputError when the token and tag counts differ.
std::vector<TypedEntity> decode_iob(std::span<const std::string> tokens,
                                    std::span<const IobTag> tags,
                                    std::span<const Span> token_offsets = {});

// Inverse of decode_iob for entities whose spans align to token boundaries.
std::vector<IobTag> encode_entities_iob(std::span<const Span> token_offsets,
                                        const std::vector<TypedEntity>& entities);

// CoNLL-style TSV: "token<TAB>tag" per line, blank line between reports.
// Source text of each report is its tokens joined by single spaces.
std::vector<TaggedReport> load_predictions(const std::string& path);
std::vector<TaggedReport> parse_predictions(std::string_view content,
                                            const std::string& source_name);
std::string format_predictions(const std::vector<TaggedReport>& reports);

}  // namespace ratescore

#endif  // RATESCORE_NER_H_
