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

#include <cmath>
#include <fstream>
#include <memory>
#include <random>

#include <gtest/gtest.h>

#include "ratescore/bench.h"
#include "ratescore/errors.h"
#include "test_util.h"

namespace ratescore {
namespace {

using testing::data_path;
using T = EntityType;

std::shared_ptr<const ReportPipeline> radiology_pipeline() {
  return std::make_shared<ReportPipeline>(
      std::make_shared<GazetteerTagger>(load_gazetteer(data_path("radiology_gazetteer.tsv")),
                                        NegationLexicon::defaults()),
      std::make_shared<HashEncoder>());
}

std::vector<RatedPair> oracle_pairs(std::size_t n) {
  std::vector<RatedPair> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    pairs.push_back({"p" + std::to_string(i), "reference " + std::to_string(i),
                     "candidate " + std::to_string(i), double((i * 7) % 11) / 10.0});
  }
  return pairs;
}

class FixedMetric final : public Metric {
 public:
  explicit FixedMetric(std::map<std::string, double, std::less<>> scores)
      : scores_(std::move(scores)) {}
  std::string name() const override { return "fixed"; }
  double score(std::string_view, std::string_view candidate) const override {
    return scores_.find(candidate)->second;
  }

 private:
  std::map<std::string, double, std::less<>> scores_;
};

TEST(SentenceHumanScoreTest, Examples) {
  EXPECT_EQ(sentence_human_score(0, 4), 1.0);
  EXPECT_EQ(sentence_human_score(2, 4), 0.5);
  EXPECT_EQ(sentence_human_score(4, 4), 0.0);
  EXPECT_THROW(sentence_human_score(5, 4), ValidationError);
  EXPECT_THROW(sentence_human_score(0, 0), ValidationError);
}

TEST(RatedPairsTest, ParsesBothLabelForms) {
  const auto pairs = parse_rated_pairs(
      R"({"id": "a", "reference": "x", "candidate": "y", "human": 0.25}
{"id": "b", "reference": "x", "candidate": "z", "error_count": 1, "potential_errors": 4}
)",
      "pairs.jsonl", RatingScale::kUnit);
  ASSERT_EQ(pairs.size(), 2u);
  EXPECT_EQ(pairs[0].human, 0.25);
  EXPECT_EQ(pairs[1].human, 0.75);
  const auto five = parse_rated_pairs(R"({"id": "c", "reference": "x", "candidate": "y", "human": 4})",
                                      "p.jsonl", RatingScale::kFivePoint);
  EXPECT_DOUBLE_EQ(five[0].human, 0.8);
}

TEST(RatedPairsTest, ErrorsNameTheLine) {
  try {
    parse_rated_pairs("{\"id\": \"a\", \"reference\": \"x\", \"candidate\": \"y\", \"human\": 1}\n{bad\n",
                      "pairs.jsonl", RatingScale::kUnit);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("pairs.jsonl:2"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_rated_pairs(R"({"id": "a", "reference": "x"})", "p", RatingScale::kUnit),
               InputError);
  EXPECT_THROW(load_rated_pairs("/nonexistent.jsonl", RatingScale::kUnit), InputError);
}

TEST(TriadsTest, LoadsFixture) {
  const auto triads = load_triads(data_path("negation_triads.jsonl"));
  ASSERT_EQ(triads.size(), 20u);
  EXPECT_EQ(triads[0].id, "t01");
}

TEST(CorrelationTaskTest, OracleMetricIsPerfect) {
  const auto pairs = oracle_pairs(30);
  HumanOracleMetric metric(pairs);
  const auto report = run_correlation_task(pairs, metric, {});
  EXPECT_EQ(report.n_train, 24u);
  EXPECT_EQ(report.n_test, 6u);
  EXPECT_NEAR(report.test.pearson, 1.0, 1e-12);
  EXPECT_NEAR(report.test.kendall, 1.0, 1e-12);
  EXPECT_NEAR(report.test.spearman, 1.0, 1e-12);
  EXPECT_FALSE(report.fit);
}

TEST(CorrelationTaskTest, SplitIsReproducible) {
  const auto pairs = oracle_pairs(10);
  HumanOracleMetric metric(pairs);
  CorrelationOptions options;
  options.seed = 17;
  const auto a = run_correlation_task(pairs, metric, options);
  const auto b = run_correlation_task(pairs, metric, options);
  ASSERT_EQ(a.pairs.size(), 10u);
  for (std::size_t i = 0; i < a.pairs.size(); ++i) {
    EXPECT_EQ(a.pairs[i].in_train, b.pairs[i].in_train);
    EXPECT_EQ(a.pairs[i].id, pairs[i].id);
  }
  EXPECT_EQ(correlation_report_json(a, ""), correlation_report_json(b, ""));
}

TEST(CorrelationTaskTest, TooFewPairs) {
  const auto pairs = oracle_pairs(4);
  HumanOracleMetric metric(pairs);
  EXPECT_THROW(run_correlation_task(pairs, metric, {}), ValidationError);
}

TEST(CorrelationTaskTest, SelfConsistentLabelsAreRecovered) {
  std::mt19937_64 rng(21);
  const auto pipeline = radiology_pipeline();
  const auto hidden = testing::random_params(rng);
  std::vector<RatedPair> pairs;
  for (const auto& tp : testing::synthetic_text_pairs(rng, 150)) {
    pairs.push_back({"s" + std::to_string(pairs.size()), tp.reference, tp.candidate,
                     pipeline->score(tp.reference, tp.candidate, hidden).score});
  }
  RateScoreMetric metric(pipeline, ScoreParams::defaults());
  CorrelationOptions options;
  options.seed = 3;
  options.fit.seed = 3;
  const auto report = run_correlation_task(pairs, metric, options);
  ASSERT_TRUE(report.fit);
  EXPECT_GE(report.test.pearson, 0.95);
  EXPECT_EQ(metric.params().weights, report.fit->params.weights);
}

TEST(SyntheticTaskTest, CountsStrictWins) {
  const std::vector<SyntheticTriad> triads = {
      {"a", "o", "s1", "a1"}, {"b", "o", "s2", "a2"}, {"c", "o", "s3", "a3"}, {"d", "o", "s4", "a4"}};
  FixedMetric metric({{"s1", 0.9}, {"a1", 0.1}, {"s2", 0.9}, {"a2", 0.2},
                      {"s3", 0.7}, {"a3", 0.6}, {"s4", 0.5}, {"a4", 0.5}});
  const auto report = run_synthetic_task(triads, metric);
  EXPECT_DOUBLE_EQ(report.accuracy, 0.75);
  EXPECT_FALSE(report.triads[3].success);
  EXPECT_THROW(run_synthetic_task({}, metric), ValidationError);
}

TEST(SyntheticTaskTest, RateScoreSeparatesNegationOnFixture) {
  const auto triads = load_triads(data_path("negation_triads.jsonl"));
  RateScoreMetric metric(radiology_pipeline(), ScoreParams::defaults());
  EXPECT_EQ(run_synthetic_task(triads, metric).accuracy, 1.0);
  EXPECT_LT(run_synthetic_task(triads, BleuMetric()).accuracy, 1.0);
}

TEST(SyntheticTaskTest, AppendixAnatomyTriad) {
  Gazetteer gazetteer({{"appendix", T::kAnatomy},
                       {"visualized", T::kAbnormality},
                       {"seen", T::kAbnormality},
                       {"air-filled", T::kAbnormality},
                       {"contains gas", T::kAbnormality}});
  NegationLexicon lexicon;
  lexicon.add_forward("not");
  lexicon.add_forward("poorly");
  auto table = std::make_shared<EmbeddingTable>(3);
  table->add("appendix", {1, 0, 0});
  table->add("visualized", {0, 1, 0});
  table->add("seen", {0, 1, 0.1});
  table->add("air-filled", {0, 0, 1});
  table->add("contains gas", {0, 0.1, 1});
  RateScoreMetric metric(
      std::make_shared<ReportPipeline>(
          std::make_shared<GazetteerTagger>(std::move(gazetteer), std::move(lexicon)),
          std::make_shared<TableEncoder>(table)),
      ScoreParams::defaults());
  const std::vector<SyntheticTriad> triads = {
      {"gas", "The appendix is well visualized and air-filled.",
       "The appendix is seen and contains gas.",
       "The appendix is poorly visualized and not air-filled."}};
  const auto report = run_synthetic_task(triads, metric);
  EXPECT_TRUE(report.triads[0].success);
  EXPECT_GT(report.triads[0].synonymous_score, 0.9);
  EXPECT_LT(report.triads[0].antonymous_score, 0.7);
}

TEST(BaselineMetricsTest, DelegateToStats) {
  EXPECT_NEAR(BleuMetric().score("a b c d e", "a b c"), 0.513417119032592, 1e-12);
  EXPECT_NEAR(RougeLMetric().score("a b c d", "a c d"), 6.0 / 7.0, 1e-12);
}

}  // namespace
}  // namespace ratescore
