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

#include "ratescore/scorer.h"

#include <cstdio>

#include "json.hpp"
#include "ratescore/errors.h"
#include "ratescore/io.h"

namespace ratescore {

EncodedReport encode_report(const TaggedReport& report, const Encoder& encoder) {
  EncodedReport out;
  out.reserve(report.entities.size());
  for (const TypedEntity& e : report.entities) {
    out.push_back(EncodedEntity{e, encoder.encode(e.name)});
  }
  return out;
}

std::optional<std::size_t> best_match(const EncodedEntity& candidate,
                                      std::span<const EncodedEntity> references) {
  if (references.empty()) return std::nullopt;
  std::size_t best = 0;
  double best_cos = cosine(references[0].embedding, candidate.embedding);
  for (std::size_t i = 1; i < references.size(); ++i) {
    const double c = cosine(references[i].embedding, candidate.embedding);
    if (c > best_cos) {
      best = i;
      best_cos = c;
      continue;
    }
    if (c < best_cos) continue;
    const EntityType target = candidate.entity.type;
    const EntityType incumbent = references[best].entity.type;
    const EntityType challenger = references[i].entity.type;
    const bool incumbent_same = incumbent == target;
    const bool challenger_same = challenger == target;
    if (challenger_same != incumbent_same) {
      if (challenger_same) best = i;
    } else if (type_index(challenger) < type_index(incumbent)) {
      best = i;
    }
  }
  return best;
}

DirectionTerms match_terms(std::span<const EncodedEntity> reference,
                           std::span<const EncodedEntity> candidate) {
  DirectionTerms out;
  if (reference.empty() || candidate.empty()) {
    out.fixed_score = (reference.empty() && candidate.empty()) ? 1.0 : 0.0;
    return out;
  }
  out.terms.reserve(candidate.size());
  for (std::size_t j = 0; j < candidate.size(); ++j) {
    const std::size_t i = *best_match(candidate[j], reference);
    out.terms.push_back(MatchTerm{j, i, reference[i].entity.type,
                                  candidate[j].entity.type,
                                  cosine(reference[i].embedding,
                                         candidate[j].embedding)});
  }
  return out;
}

double score_terms(const DirectionTerms& terms, const ScoreParams& params,
                   std::vector<MatchRecord>* records) {
  if (terms.fixed_score) return *terms.fixed_score;
  double numerator = 0.0;
  double denominator = 0.0;
  for (const MatchTerm& t : terms.terms) {
    const double w = params.weight(t.reference_type, t.candidate_type);
    const double sim = t.reference_type == t.candidate_type
                           ? t.cosine
                           : params.penalty * t.cosine;
    numerator += w * sim;
    denominator += w;
    if (records) {
      records->push_back(MatchRecord{t.candidate_index, t.reference_index,
                                     t.cosine, sim, w});
    }
  }
  return numerator / denominator;
}

double directional_score(std::span<const EncodedEntity> reference,
                         std::span<const EncodedEntity> candidate,
                         const ScoreParams& params,
                         std::vector<MatchRecord>* records) {
  params.validate();
  return score_terms(match_terms(reference, candidate), params, records);
}

double harmonic_mean(double forward, double backward) {
  if (forward + backward == 0.0) return 0.0;
  return 2.0 * forward * backward / (forward + backward);
}

PairTerms pair_terms(std::span<const EncodedEntity> reference,
                     std::span<const EncodedEntity> candidate) {
  return PairTerms{match_terms(reference, candidate),
                   match_terms(candidate, reference)};
}

RateScore score_pair_terms(const PairTerms& terms, const ScoreParams& params,
                           bool explain) {
  RateScore result;
  result.forward = score_terms(terms.forward, params,
                               explain ? &result.forward_matches : nullptr);
  result.backward = score_terms(terms.backward, params,
                                explain ? &result.backward_matches : nullptr);
  result.score = harmonic_mean(result.forward, result.backward);
  return result;
}

RateScore rate_score(std::span<const EncodedEntity> reference,
                     std::span<const EncodedEntity> candidate,
                     const ScoreParams& params, bool explain) {
  params.validate();
  return score_pair_terms(pair_terms(reference, candidate), params, explain);
}

ScoreParams parse_params(std::string_view json_text, const std::string& source_name) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(source_name + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("W") || !doc.contains("p")) {
    throw InputError(source_name + ": params must be an object with \"W\" and \"p\"");
  }

  std::array<std::size_t, kNumEntityTypes> order{0, 1, 2, 3, 4};
  if (doc.contains("type_order")) {
    const json& names = doc["type_order"];
    if (!names.is_array() || names.size() != kNumEntityTypes) {
      throw InputError(source_name + ": \"type_order\" must list the five entity types");
    }
    std::array<bool, kNumEntityTypes> seen{};
    for (std::size_t k = 0; k < kNumEntityTypes; ++k) {
      const auto type = names[k].is_string()
                            ? parse_entity_type(names[k].get<std::string>())
                            : std::nullopt;
      if (!type || seen[type_index(*type)]) {
        throw InputError(source_name + ": bad \"type_order\" entry " + names[k].dump());
      }
      seen[type_index(*type)] = true;
      order[k] = type_index(*type);
    }
  }

  std::vector<double> flat;
  try {
    const json& w = doc["W"];
    if (!w.is_array()) throw InputError("");
    if (w.size() == kNumEntityTypes && w[0].is_array()) {
      for (const json& row : w) {
        if (!row.is_array() || row.size() != kNumEntityTypes) throw InputError("");
        for (const json& v : row) flat.push_back(v.get<double>());
      }
    } else {
      for (const json& v : w) flat.push_back(v.get<double>());
    }
    if (flat.size() != kNumEntityTypes * kNumEntityTypes) throw InputError("");
  } catch (const std::exception&) {
    throw InputError(source_name + ": \"W\" must be a 5x5 array of numbers");
  }
  if (!doc["p"].is_number()) throw InputError(source_name + ": \"p\" must be a number");

  ScoreParams params;
  for (std::size_t r = 0; r < kNumEntityTypes; ++r) {
    for (std::size_t c = 0; c < kNumEntityTypes; ++c) {
      params.weights[order[r]][order[c]] = flat[r * kNumEntityTypes + c];
    }
  }
  params.penalty = doc["p"].get<double>();
  try {
    params.validate();
  } catch (const ValidationError& e) {
    throw ValidationError(source_name + ": " + e.what());
  }
  return params;
}

ScoreParams load_params(const std::string& path) {
  return parse_params(read_text_file(path), path);
}

std::string format_params(const ScoreParams& params) {
  std::string out = "{\n  \"type_order\": [";
  for (std::size_t k = 0; k < kNumEntityTypes; ++k) {
    if (k) out += ", ";
    out += '"';
    out += entity_type_name(kAllEntityTypes[k]);
    out += '"';
  }
  out += "],\n  \"W\": [\n";
  char buf[32];
  for (std::size_t r = 0; r < kNumEntityTypes; ++r) {
    out += "    [";
    for (std::size_t c = 0; c < kNumEntityTypes; ++c) {
      std::snprintf(buf, sizeof(buf), "%s%.6f", c ? ", " : "", params.weights[r][c]);
      out += buf;
    }
    out += r + 1 < kNumEntityTypes ? "],\n" : "]\n";
  }
  std::snprintf(buf, sizeof(buf), "%.6f", params.penalty);
  out += "  ],\n  \"p\": ";
  out += buf;
  out += "\n}\n";
  return out;
}

}  // namespace ratescore
