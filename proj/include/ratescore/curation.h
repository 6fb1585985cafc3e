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

#ifndef RATESCORE_CURATION_H_
#define RATESCORE_CURATION_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ratescore/encoder.h"
#include "ratescore/types.h"

namespace ratescore {

inline constexpr double kDefaultSimilarityThreshold = 0.83;
inline constexpr double kDefaultDensityThreshold = 0.7;

struct SimilarityDecision {
  TypedEntity entity;
  double max_similarity = 0.0;
  std::string nearest;  // library name achieving max_similarity
  bool kept = false;
};

// Highest cosine of each entity against every library row; kept iff it is
// >= threshold. Throws ValidationError on an empty library or when the
// encoder and library dimensions differ.
std::vector<SimilarityDecision> similarity_decisions(
    const std::vector<TypedEntity>& entities, const EmbeddingTable& library,
    const Encoder& encoder, double threshold = kDefaultSimilarityThreshold);

std::vector<TypedEntity> filter_entities_by_similarity(
    const std::vector<TypedEntity>& entities, const EmbeddingTable& library,
    const Encoder& encoder, double threshold = kDefaultSimilarityThreshold);

struct DensityDecision {
  double density = 0.0;
  std::size_t covered_tokens = 0;
  std::size_t content_tokens = 0;
  bool keep = false;
  // No non-punctuation tokens; the sentence is dropped.
  bool empty_sentence = false;
};

// Density = non-punctuation tokens overlapping an entity span / all
// non-punctuation tokens. Kept iff density >= threshold. Entities without
// spans cover nothing.
DensityDecision filter_sentence_by_density(std::string_view sentence,
                                           const std::vector<TypedEntity>& entities,
                                           double threshold = kDefaultDensityThreshold);

}  // namespace ratescore

#endif  // RATESCORE_CURATION_H_
