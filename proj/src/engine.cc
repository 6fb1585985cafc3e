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

#include "ratescore/engine.h"

#include "ratescore/errors.h"
#include "ratescore/parallel.h"

namespace ratescore {

std::shared_ptr<const Encoder> make_encoder(const std::string& kind,
                                            const std::string& table_path,
                                            std::size_t hash_dimension) {
  if (kind == "hash") {
    if (hash_dimension == 0) throw ValidationError("hash dimension must be positive");
    return std::make_shared<HashEncoder>(hash_dimension);
  }
  if (kind == "table") {
    if (table_path.empty()) throw InputError("the table encoder needs an embedding table file");
    return std::make_shared<TableEncoder>(
        std::make_shared<const EmbeddingTable>(load_embedding_table(table_path)));
  }
  throw InputError("unknown encoder '" + kind + "' (expected hash or table)");
}

Engine Engine::load(const EngineConfig& config) {
  Gazetteer gazetteer =
      config.gazetteer_path.empty() ? Gazetteer() : load_gazetteer(config.gazetteer_path);
  NegationLexicon lexicon = config.negation_path.empty()
                                ? NegationLexicon::defaults()
                                : load_negation_lexicon(config.negation_path);
  auto tagger = std::make_shared<const GazetteerTagger>(std::move(gazetteer), std::move(lexicon));
  auto encoder = make_encoder(config.encoder, config.table_path, config.hash_dimension);
  ScoreParams params = config.params_path.empty() ? ScoreParams::defaults()
                                                  : load_params(config.params_path);
  return Engine(std::make_shared<const ReportPipeline>(std::move(tagger), std::move(encoder)),
                params);
}

Engine::Engine(std::shared_ptr<const ReportPipeline> pipeline, ScoreParams params)
    : pipeline_(std::move(pipeline)), params_(params) {
  params_.validate();
}

RateScore Engine::score(std::string_view reference, std::string_view candidate,
                        bool explain) const {
  return pipeline_->score(reference, candidate, params_, explain);
}

std::vector<RateScore> Engine::score_corpus(
    const std::vector<std::pair<std::string, std::string>>& pairs, bool explain,
    std::size_t threads) const {
  std::vector<RateScore> out(pairs.size());
  parallel_for(
      pairs.size(),
      [&](std::size_t i) { out[i] = score(pairs[i].first, pairs[i].second, explain); },
      threads);
  return out;
}

std::vector<RateScore> Engine::score_tagged(const std::vector<TaggedReport>& references,
                                            const std::vector<TaggedReport>& candidates,
                                            bool explain, std::size_t threads) const {
  if (references.size() != candidates.size()) {
    throw InputError("reference and candidate files hold " +
                     std::to_string(references.size()) + " and " +
                     std::to_string(candidates.size()) + " reports");
  }
  std::vector<RateScore> out(references.size());
  parallel_for(
      references.size(),
      [&](std::size_t i) {
        out[i] = score_pair_terms(pair_terms(pipeline_->encode(references[i]),
                                             pipeline_->encode(candidates[i])),
                                  params_, explain);
      },
      threads);
  return out;
}

}  // namespace ratescore
