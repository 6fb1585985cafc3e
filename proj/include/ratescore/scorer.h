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

#ifndef RATESCORE_SCORER_H_
#define RATESCORE_SCORER_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ratescore/encoder.h"
#include "ratescore/types.h"

namespace ratescore {

struct EncodedEntity {
  TypedEntity entity;
  EntityEmbedding embedding;
};

using EncodedReport = std::vector<EncodedEntity>;

EncodedReport encode_report(const TaggedReport& report, const Encoder& encoder);

// Index of the reference entity with the highest cosine to `candidate`.
// Ties prefer a reference of the candidate's type, then the earlier
// canonical type, then the lower index. Returns nullopt for an empty
// reference set.
std::optional<std::size_t> best_match(const EncodedEntity& candidate,
                                      std::span<const EncodedEntity> references);

struct MatchRecord {
  std::size_t candidate_index = 0;
  std::size_t reference_index = 0;
  double raw_cosine = 0.0;
  double penalized_sim = 0.0;
  double weight = 0.0;
};

// Parameter-independent outcome of matching one direction. Matching depends
// only on cosines and types, so these can be computed once and rescored
// under many parameter settings.
struct MatchTerm {
  std::size_t candidate_index = 0;
  std::size_t reference_index = 0;
  EntityType reference_type = EntityType::kAnatomy;
  EntityType candidate_type = EntityType::kAnatomy;
  double cosine = 0.0;
};

struct DirectionTerms {
  std::vector<MatchTerm> terms;
  // Set when either side has no entities: 1 if both are empty, else 0.
  std::optional<double> fixed_score;
};

DirectionTerms match_terms(std::span<const EncodedEntity> reference,
                           std::span<const EncodedEntity> candidate);

// W-weighted average of per-candidate similarities, where similarity is the
// cosine, multiplied by p when the matched types differ.
double score_terms(const DirectionTerms& terms, const ScoreParams& params,
                   std::vector<MatchRecord>* records = nullptr);

// S(reference, candidate). Precision-like: iterates candidate entities.
double directional_score(std::span<const EncodedEntity> reference,
                         std::span<const EncodedEntity> candidate,
                         const ScoreParams& params,
                         std::vector<MatchRecord>* records = nullptr);

// 0 when both directions are 0, else their harmonic mean.
double harmonic_mean(double forward, double backward);

struct RateScore {
  double score = 0.0;
  double forward = 0.0;   // S(x, x_hat)
  double backward = 0.0;  // S(x_hat, x)
  std::vector<MatchRecord> forward_matches;
  std::vector<MatchRecord> backward_matches;
};

struct PairTerms {
  DirectionTerms forward;
  DirectionTerms backward;
};

PairTerms pair_terms(std::span<const EncodedEntity> reference,
                     std::span<const EncodedEntity> candidate);

RateScore score_pair_terms(const PairTerms& terms, const ScoreParams& params,
                           bool explain = false);

// `reference` is x, `candidate` is x_hat. Validates params.
RateScore rate_score(std::span<const EncodedEntity> reference,
                     std::span<const EncodedEntity> candidate,
                     const ScoreParams& params, bool explain = false);

// Params document:
//   {"type_order": ["Anatomy", ...], "W": [[...] x5], "p": 0.36}
// "W" is row-major, rows indexed by the reference type, columns by the
// candidate type, both in "type_order". A flat 25-element array is also
// accepted. A permuted type_order is mapped back to canonical order.
// Throws InputError on malformed JSON, ValidationError on bad values.
ScoreParams parse_params(std::string_view json_text, const std::string& source_name);
ScoreParams load_params(const std::string& path);

// Canonical type order, 6 decimal places.
std::string format_params(const ScoreParams& params);

}  // namespace ratescore

#endif  // RATESCORE_SCORER_H_
