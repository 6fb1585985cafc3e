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

#ifndef RATESCORE_TYPES_H_
#define RATESCORE_TYPES_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ratescore {

// The five entity types. The enumerator order is the canonical order: it
// indexes the affinity matrix and breaks ties during matching.
enum class EntityType : std::uint8_t {
  kAnatomy = 0,
  kAbnormality = 1,
  kDisease = 2,
  kNonAbnormality = 3,
  kNonDisease = 4,
};

inline constexpr std::size_t kNumEntityTypes = 5;

inline constexpr std::array<EntityType, kNumEntityTypes> kAllEntityTypes = {
    EntityType::kAnatomy, EntityType::kAbnormality, EntityType::kDisease,
    EntityType::kNonAbnormality, EntityType::kNonDisease};

constexpr std::size_t type_index(EntityType type) {
  return static_cast<std::size_t>(type);
}

// "Anatomy", "Abnormality", "Disease", "NonAbnormality", "NonDisease".
std::string_view entity_type_name(EntityType type);
std::optional<EntityType> parse_entity_type(std::string_view name);

// Anatomy, Abnormality and Disease are base types; the other two only
// arise from negation.
bool is_base_type(EntityType type);

// Abnormality -> NonAbnormality, Disease -> NonDisease. Anatomy and the
// already-negated types are fixed points, so negation is idempotent.
EntityType negate(EntityType type);

// Half-open character range [begin, end) into a source text.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t length() const { return end - begin; }
  bool overlaps(const Span& other) const {
    return begin < other.end && other.begin < end;
  }
  friend bool operator==(const Span&, const Span&) = default;
};

struct TypedEntity {
  std::string name;
  EntityType type = EntityType::kAnatomy;
  std::optional<Span> span;

  friend bool operator==(const TypedEntity&, const TypedEntity&) = default;
};

// Canonical entity order: span start (entities without a span last), then
// canonical type, then name, then span end.
bool entity_order_less(const TypedEntity& a, const TypedEntity& b);

struct TaggedReport {
  std::string source_text;
  std::vector<TypedEntity> entities;
};

// Builds a report with entities sorted into canonical order. Throws
// ValidationError if a span falls outside the source text or an entity name
// normalizes to empty.
TaggedReport make_tagged_report(std::string source_text,
                                std::vector<TypedEntity> entities);

// Affinity matrix W indexed [reference type][candidate type] plus the type
// mismatch penalty p.
struct ScoreParams {
  static constexpr double kMinWeight = 1e-6;

  std::array<std::array<double, kNumEntityTypes>, kNumEntityTypes> weights{};
  double penalty = 0.0;

  double weight(EntityType reference, EntityType candidate) const {
    return weights[type_index(reference)][type_index(candidate)];
  }
  double& weight(EntityType reference, EntityType candidate) {
    return weights[type_index(reference)][type_index(candidate)];
  }

  // Throws ValidationError unless every weight is in [1e-6, 1] and the
  // penalty is in [0, 1].
  void validate() const;

  // Uniform unit weights with p = 0.36.
  static ScoreParams defaults();

  friend bool operator==(const ScoreParams&, const ScoreParams&) = default;
};

// Lowercases ASCII, collapses whitespace runs, and strips surrounding
// whitespace and .,;:!? from both ends. Returns "" when the input has no
// alphanumeric character (bytes >= 0x80 count as alphanumeric).
std::string normalize_name(std::string_view raw);

}  // namespace ratescore

#endif  // RATESCORE_TYPES_H_
