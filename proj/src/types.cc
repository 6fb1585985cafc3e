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

#include "ratescore/types.h"

#include <algorithm>
#include <cctype>
#include <limits>
#include <tuple>

#include "ratescore/errors.h"

namespace ratescore {
namespace {

constexpr std::array<std::string_view, kNumEntityTypes> kTypeNames = {
    "Anatomy", "Abnormality", "Disease", "NonAbnormality", "NonDisease"};

bool is_edge_char(unsigned char c) {
  return std::isspace(c) || c == '.' || c == ',' || c == ';' || c == ':' ||
         c == '!' || c == '?';
}

}  // namespace

std::string_view entity_type_name(EntityType type) {
  return kTypeNames[type_index(type)];
}

std::optional<EntityType> parse_entity_type(std::string_view name) {
  for (EntityType type : kAllEntityTypes) {
    if (kTypeNames[type_index(type)] == name) return type;
  }
  return std::nullopt;
}

bool is_base_type(EntityType type) {
  return type == EntityType::kAnatomy || type == EntityType::kAbnormality ||
         type == EntityType::kDisease;
}

EntityType negate(EntityType type) {
  switch (type) {
    case EntityType::kAbnormality:
      return EntityType::kNonAbnormality;
    case EntityType::kDisease:
      return EntityType::kNonDisease;
    default:
      return type;
  }
}

bool entity_order_less(const TypedEntity& a, const TypedEntity& b) {
  static constexpr auto kNone = std::numeric_limits<std::size_t>::max();
  auto key = [](const TypedEntity& e) {
    return std::make_tuple(e.span ? e.span->begin : kNone, type_index(e.type),
                           std::string_view(e.name),
                           e.span ? e.span->end : kNone);
  };
  return key(a) < key(b);
}

TaggedReport make_tagged_report(std::string source_text,
                                std::vector<TypedEntity> entities) {
  for (const TypedEntity& e : entities) {
    if (normalize_name(e.name).empty()) {
      throw ValidationError("entity name '" + e.name +
                            "' is empty after normalization");
    }
    if (e.span && (e.span->begin >= e.span->end ||
                   e.span->end > source_text.size())) {
      throw ValidationError("entity '" + e.name +
                            "' has a span outside the source text");
    }
  }
  std::stable_sort(entities.begin(), entities.end(), entity_order_less);
  return TaggedReport{std::move(source_text), std::move(entities)};
}

void ScoreParams::validate() const {
  for (std::size_t r = 0; r < kNumEntityTypes; ++r) {
    for (std::size_t c = 0; c < kNumEntityTypes; ++c) {
      const double w = weights[r][c];
      if (!(w >= kMinWeight && w <= 1.0)) {
        throw ValidationError(
            "W(" + std::string(kTypeNames[r]) + "," +
            std::string(kTypeNames[c]) + ") = " + std::to_string(w) +
            " is outside [1e-6, 1]");
      }
    }
  }
  if (!(penalty >= 0.0 && penalty <= 1.0)) {
    throw ValidationError("p = " + std::to_string(penalty) +
                          " is outside [0, 1]");
  }
}

ScoreParams ScoreParams::defaults() {
  ScoreParams params;
  for (auto& row : params.weights) row.fill(1.0);
  params.penalty = 0.36;
  return params;
}

std::string normalize_name(std::string_view raw) {
  std::size_t first = 0;
  std::size_t last = raw.size();
  while (first < last && is_edge_char(raw[first])) ++first;
  while (last > first && is_edge_char(raw[last - 1])) --last;

  std::string out;
  out.reserve(last - first);
  bool has_alnum = false;
  bool pending_space = false;
  for (std::size_t i = first; i < last; ++i) {
    const auto c = static_cast<unsigned char>(raw[i]);
    if (std::isspace(c)) {
      pending_space = true;
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    if (std::isalnum(c) || c >= 0x80) has_alnum = true;
    out.push_back(static_cast<char>(std::tolower(c)));
  }
  if (!has_alnum) return {};
  return out;
}

}  // namespace ratescore
