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

#ifndef RATESCORE_ENGINE_H_
#define RATESCORE_ENGINE_H_

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ratescore/pipeline.h"
#include "ratescore/scorer.h"

namespace ratescore {

struct EngineConfig {
  std::string gazetteer_path;  // empty: no entities are tagged from text
  std::string negation_path;  // empty: built-in lexicon
  std::string encoder = "hash";  // "hash" or "table"
  std::string table_path;        // required for "table"
  std::size_t hash_dimension = 256;
  std::string params_path;  // empty: ScoreParams::defaults()
};

// Loaded scoring resources: gazetteer tagger, encoder and parameters.
// Immutable after construction; score() may be called concurrently.
class Engine {
 public:
  // Throws InputError / ValidationError from the underlying loaders.
  static Engine load(const EngineConfig& config);

  Engine(std::shared_ptr<const ReportPipeline> pipeline, ScoreParams params);

  RateScore score(std::string_view reference, std::string_view candidate,
                  bool explain = false) const;

  // Order-preserving batch scoring on a worker pool.
  std::vector<RateScore> score_corpus(
      const std::vector<std::pair<std::string, std::string>>& pairs,
      bool explain = false, std::size_t threads = 0) const;

  // Scores pre-tagged reports (e.g. from a prediction file).
  std::vector<RateScore> score_tagged(const std::vector<TaggedReport>& references,
                                      const std::vector<TaggedReport>& candidates,
                                      bool explain = false, std::size_t threads = 0) const;

  const ScoreParams& params() const { return params_; }
  const std::shared_ptr<const ReportPipeline>& pipeline() const { return pipeline_; }

 private:
  std::shared_ptr<const ReportPipeline> pipeline_;
  ScoreParams params_;
};

std::shared_ptr<const Encoder> make_encoder(const std::string& kind,
                                            const std::string& table_path,
                                            std::size_t hash_dimension);

}  // namespace ratescore

#endif  // RATESCORE_ENGINE_H_
