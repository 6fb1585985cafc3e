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

#ifndef RATESCORE_PIPELINE_H_
#define RATESCORE_PIPELINE_H_

#include <memory>
#include <string_view>

#include "ratescore/encoder.h"
#include "ratescore/ner.h"
#include "ratescore/scorer.h"

namespace ratescore {

// Text -> tagged entities -> embeddings. Immutable and safe to share
// across threads.
class ReportPipeline {
 public:
  ReportPipeline(std::shared_ptr<const GazetteerTagger> tagger,
                 std::shared_ptr<const Encoder> encoder);

  TaggedReport tag(std::string_view text) const { return tagger_->tag(text); }
  EncodedReport encode(std::string_view text) const;
  EncodedReport encode(const TaggedReport& report) const;

  // Tags, encodes and matches both directions; the result can be rescored
  // under any parameters.
  PairTerms prepare(std::string_view reference, std::string_view candidate) const;

  RateScore score(std::string_view reference, std::string_view candidate,
                  const ScoreParams& params, bool explain = false) const;

  const GazetteerTagger& tagger() const { return *tagger_; }
  const Encoder& encoder() const { return *encoder_; }

 private:
  std::shared_ptr<const GazetteerTagger> tagger_;
  std::shared_ptr<const Encoder> encoder_;
};

}  // namespace ratescore

#endif  // RATESCORE_PIPELINE_H_
