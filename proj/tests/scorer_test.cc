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

#include <algorithm>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "ratescore/errors.h"
#include "ratescore/scorer.h"
#include "test_util.h"

namespace ratescore {
namespace {

using testing::encoded;
using testing::random_params;
using testing::random_type;
using testing::random_unit;
using testing::worked_example;
using T = EntityType;

EncodedReport random_report(std::mt19937_64& rng, std::size_t max_size, std::size_t dim) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(0, max_size)(rng);
  EncodedReport out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(encoded("e" + std::to_string(i), random_type(rng), random_unit(rng, dim)));
  }
  return out;
}

// Direct transcription of the directional formula with an exhaustive argmax.
double oracle_directional(const EncodedReport& ref, const EncodedReport& cand,
                          const ScoreParams& params) {
  if (ref.empty() && cand.empty()) return 1.0;
  if (ref.empty() || cand.empty()) return 0.0;
  double num = 0, den = 0;
  for (const auto& c : cand) {
    double best = -1;
    for (const auto& r : ref) best = std::max(best, cosine(c.embedding, r.embedding));
    // Any maximizer with the candidate's type is preferred.
    const EncodedEntity* chosen = nullptr;
    for (const auto& r : ref) {
      if (cosine(c.embedding, r.embedding) != best) continue;
      if (!chosen || (r.entity.type == c.entity.type && chosen->entity.type != c.entity.type) ||
          (r.entity.type != c.entity.type && chosen->entity.type != c.entity.type &&
           type_index(r.entity.type) < type_index(chosen->entity.type))) {
        chosen = &r;
      }
    }
    const double w = params.weight(chosen->entity.type, c.entity.type);
    const double sim = chosen->entity.type == c.entity.type ? best : params.penalty * best;
    num += w * sim;
    den += w;
  }
  return num / den;
}

TEST(BestMatchTest, PicksHighestCosine) {
  const EncodedReport refs = {encoded("a", T::kAnatomy, {1, 0}), encoded("b", T::kAnatomy, {0, 1})};
  EXPECT_EQ(best_match(encoded("c", T::kAnatomy, {0.2, 0.9}), refs), 1u);
  EXPECT_FALSE(best_match(encoded("c", T::kAnatomy, {1, 0}), {}));
}

TEST(BestMatchTest, TiesPreferSameTypeThenTypeOrderThenIndex) {
  const auto cand = encoded("c", T::kDisease, {1, 0});
  EXPECT_EQ(best_match(cand, EncodedReport{encoded("a", T::kAnatomy, {1, 0}),
                                          encoded("b", T::kDisease, {1, 0})}),
            1u);
  EXPECT_EQ(best_match(cand, EncodedReport{encoded("a", T::kNonDisease, {1, 0}),
                                          encoded("b", T::kAbnormality, {1, 0})}),
            1u);
  EXPECT_EQ(best_match(cand, EncodedReport{encoded("a", T::kDisease, {1, 0}),
                                          encoded("b", T::kDisease, {1, 0})}),
            0u);
}

TEST(DirectionalScoreTest, WorkedExample) {
  const auto ex = worked_example();
  std::vector<MatchRecord> records;
  const double forward = directional_score(ex.reference, ex.candidate, ex.params, &records);
  EXPECT_NEAR(forward, 0.644, 5e-4);
  EXPECT_NEAR(forward, (0.91 + 0.94 * 0.36 * 0.83) / (0.91 + 0.94), 1e-12);
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[1].reference_index, 1u);
  EXPECT_NEAR(records[1].raw_cosine, 0.83, 1e-12);
  EXPECT_NEAR(records[1].penalized_sim, 0.2988, 1e-12);
  EXPECT_DOUBLE_EQ(records[1].weight, 0.94);

  const double backward = directional_score(ex.candidate, ex.reference, ex.params);
  EXPECT_NEAR(backward, 0.666, 5e-4);
  EXPECT_NEAR(backward, (0.91 + 0.83 * 0.36 * 0.83) / (0.91 + 0.83), 1e-12);
}

TEST(RateScoreTest, WorkedExampleIsHarmonicMean) {
  const auto ex = worked_example();
  const auto r = rate_score(ex.reference, ex.candidate, ex.params, true);
  EXPECT_NEAR(r.score, 2 * r.forward * r.backward / (r.forward + r.backward), 1e-15);
  EXPECT_NEAR(r.score, 0.6544355, 1e-6);
  EXPECT_EQ(r.forward_matches.size(), 2u);
  EXPECT_EQ(r.backward_matches.size(), 2u);
  EXPECT_TRUE(rate_score(ex.reference, ex.candidate, ex.params).forward_matches.empty());
}

TEST(RateScoreTest, EmptySetConventions) {
  const auto ex = worked_example();
  EXPECT_EQ(rate_score({}, {}, ex.params).score, 1.0);
  EXPECT_EQ(rate_score(ex.reference, {}, ex.params).score, 0.0);
  EXPECT_EQ(rate_score({}, ex.candidate, ex.params).score, 0.0);
  EXPECT_EQ(harmonic_mean(0.0, 0.0), 0.0);
}

TEST(RateScoreTest, IdentityScoresOne) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    auto report = random_report(rng, 6, 5);
    const auto params = random_params(rng);
    EXPECT_NEAR(rate_score(report, report, params).score, 1.0, 1e-9);
  }
}

TEST(RateScoreTest, MatchesBruteForceOracle) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 500; ++i) {
    const auto ref = random_report(rng, 5, 3);
    const auto cand = random_report(rng, 5, 3);
    const auto params = random_params(rng);
    EXPECT_NEAR(directional_score(ref, cand, params), oracle_directional(ref, cand, params),
                1e-12);
    EXPECT_NEAR(directional_score(cand, ref, params), oracle_directional(cand, ref, params),
                1e-12);
  }
}

TEST(RateScoreTest, PairTermsReproduceDirectScore) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const auto ref = random_report(rng, 5, 4);
    const auto cand = random_report(rng, 5, 4);
    const auto params = random_params(rng);
    const auto terms = pair_terms(ref, cand);
    EXPECT_EQ(score_pair_terms(terms, params).score, rate_score(ref, cand, params).score);
  }
}

TEST(RateScoreTest, InvalidParamsRejected) {
  const auto ex = worked_example();
  auto params = ex.params;
  params.penalty = 1.5;
  EXPECT_THROW(rate_score(ex.reference, ex.candidate, params), ValidationError);
  params = ex.params;
  params.weights[0][0] = 0.0;
  EXPECT_THROW(rate_score(ex.reference, ex.candidate, params), ValidationError);
}

TEST(ParamsIoTest, RoundTrip) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 50; ++i) {
    const auto params = random_params(rng);
    const auto back = parse_params(format_params(params), "mem");
    for (std::size_t r = 0; r < kNumEntityTypes; ++r)
      for (std::size_t c = 0; c < kNumEntityTypes; ++c)
        EXPECT_NEAR(back.weights[r][c], params.weights[r][c], 5e-7);
    EXPECT_NEAR(back.penalty, params.penalty, 5e-7);
  }
}

TEST(ParamsIoTest, LoadsWorkedExampleFile) {
  const auto params = load_params(testing::data_path("foley_params.json"));
  const auto ex = worked_example();
  EXPECT_EQ(params.weights, ex.params.weights);
  EXPECT_EQ(params.penalty, ex.params.penalty);
}

TEST(ParamsIoTest, PermutedTypeOrderAndFlatWeights) {
  const auto params = parse_params(
      R"({"type_order": ["NonDisease", "Abnormality", "Disease", "NonAbnormality", "Anatomy"],
          "W": [0.1,1,1,1,1, 1,1,1,1,1, 1,1,1,1,1, 1,1,1,1,1, 1,1,1,1,0.7], "p": 0.2})",
      "mem");
  EXPECT_DOUBLE_EQ(params.weight(T::kNonDisease, T::kNonDisease), 0.1);
  EXPECT_DOUBLE_EQ(params.weight(T::kAnatomy, T::kAnatomy), 0.7);
  EXPECT_DOUBLE_EQ(params.penalty, 0.2);
}

TEST(ParamsIoTest, Errors) {
  EXPECT_THROW(parse_params("not json", "mem"), InputError);
  EXPECT_THROW(parse_params(R"({"W": [[1]], "p": 0.3})", "mem"), InputError);
  EXPECT_THROW(parse_params(R"({"W": [1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1]})",
                            "mem"),
               InputError);
  EXPECT_THROW(parse_params(R"({"W": [1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1],
                                "p": 2})",
                            "mem"),
               ValidationError);
  EXPECT_THROW(load_params("/nonexistent/params.json"), InputError);
}

TEST(EncodeReportTest, UsesEncoderPerEntity) {
  testing::MockEncoder enc(2);
  enc.set("lung", {1, 0});
  enc.set("effusion", {0, 1});
  const auto report = make_tagged_report(
      "", {{"effusion", T::kAbnormality, std::nullopt}, {"lung", T::kAnatomy, std::nullopt}});
  const auto out = encode_report(report, enc);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].embedding, enc.encode(out[0].entity.name));
}

}  // namespace
}  // namespace ratescore
