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

#include "ratescore/curation.h"

#include <algorithm>

#include "ratescore/errors.h"
#include "ratescore/preprocess.h"

namespace ratescore {

std::vector<SimilarityDecision> similarity_decisions(
    const std::vector<TypedEntity>& entities, const EmbeddingTable& library,
    const Encoder& encoder, double threshold) {
  if (library.empty()) throw ValidationError("entity library is empty");
  if (library.dimension() != encoder.dimension()) {
    throw ValidationError("library dimension " + std::to_string(library.dimension()) +
                          " differs from encoder dimension " +
                          std::to_string(encoder.dimension()));
  }
  std::vector<SimilarityDecision> out;
  out.reserve(entities.size());
  for (const TypedEntity& e : entities) {
    SimilarityDecision d{e, -1.0, {}, false};
    const EntityEmbedding embedding = encoder.encode(e.name);
    for (const auto& [name, row] : library.rows()) {
      const double c = cosine(embedding, row);
      if (c > d.max_similarity) {
        d.max_similarity = c;
        d.nearest = name;
      }
    }
    d.kept = d.max_similarity >= threshold;
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<TypedEntity> filter_entities_by_similarity(
    const std::vector<TypedEntity>& entities, const EmbeddingTable& library,
    const Encoder& encoder, double threshold) {
  std::vector<TypedEntity> kept;
  for (auto& d : similarity_decisions(entities, library, encoder, threshold)) {
    if (d.kept) kept.push_back(std::move(d.entity));
  }
  return kept;
}

DensityDecision filter_sentence_by_density(std::string_view sentence,
                                           const std::vector<TypedEntity>& entities,
                                           double threshold) {
  DensityDecision d;
  for (const Token& token : tokenize_with_offsets(sentence)) {
    if (is_punctuation_token(token.text)) continue;
    ++d.content_tokens;
    const Span span{token.begin, token.end};
    const bool covered = std::any_of(entities.begin(), entities.end(), [&](const TypedEntity& e) {
      return e.span && e.span->overlaps(span);
    });
    if (covered) ++d.covered_tokens;
  }
  if (d.content_tokens == 0) {
    d.empty_sentence = true;
    return d;
  }
  d.density = static_cast<double>(d.covered_tokens) / static_cast<double>(d.content_tokens);
  d.keep = d.density >= threshold;
  return d;
}

}  // namespace ratescore
