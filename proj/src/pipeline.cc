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

#include "ratescore/pipeline.h"

#include <stdexcept>

namespace ratescore {

ReportPipeline::ReportPipeline(std::shared_ptr<const GazetteerTagger> tagger,
                               std::shared_ptr<const Encoder> encoder)
    : tagger_(std::move(tagger)), encoder_(std::move(encoder)) {
  if (!tagger_ || !encoder_) throw std::invalid_argument("pipeline needs a tagger and an encoder");
}

EncodedReport ReportPipeline::encode(std::string_view text) const {
  return encode_report(tagger_->tag(text), *encoder_);
}

EncodedReport ReportPipeline::encode(const TaggedReport& report) const {
  return encode_report(report, *encoder_);
}

PairTerms ReportPipeline::prepare(std::string_view reference,
                                  std::string_view candidate) const {
  return pair_terms(encode(reference), encode(candidate));
}

RateScore ReportPipeline::score(std::string_view reference, std::string_view candidate,
                                const ScoreParams& params, bool explain) const {
  params.validate();
  return score_pair_terms(prepare(reference, candidate), params, explain);
}

}  // namespace ratescore
