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

#ifndef RATESCORE_BENCH_H_
#define RATESCORE_BENCH_H_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ratescore/paramfit.h"
#include "ratescore/pipeline.h"

namespace ratescore {

struct RatedPair {
  std::string id;
  std::string reference;
  std::string candidate;
  double human = 0.0;
};

struct SyntheticTriad {
  std::string id;
  std::string original;
  std::string synonymous;
  std::string antonymous;
};

// 1 - error_count / potential_errors. Throws ValidationError when
// potential_errors is 0 or error_count exceeds it.
double sentence_human_score(std::int64_t error_count, std::int64_t potential_errors);

enum class RatingScale {
  kUnit,        // human in [0, 1], or derived from error counts
  kFivePoint,   // human in {0..5}, divided by 5 on load
};

// JSON lines: {"id", "reference", "candidate", "human"} or
// {"id", "reference", "candidate", "error_count", "potential_errors"}.
// Throws InputError with the line number on malformed rows and
// ValidationError on out-of-range ratings.
std::vector<RatedPair> parse_rated_pairs(std::string_view content,
                                         const std::string& source_name,
                                         RatingScale scale);
std::vector<RatedPair> load_rated_pairs(const std::string& path, RatingScale scale);

// JSON lines: {"id", "original", "synonymous", "antonymous"}.
std::vector<SyntheticTriad> parse_triads(std::string_view content,
                                         const std::string& source_name);
std::vector<SyntheticTriad> load_triads(const std::string& path);

class Metric {
 public:
  virtual ~Metric() = default;

  virtual std::string name() const = 0;
  // Must be safe to call concurrently.
  virtual double score(std::string_view reference, std::string_view candidate) const = 0;

  // Metrics with learnable parameters fit them here and return the result;
  // others return nullopt.
  virtual std::optional<FitResult> fit(std::span<const RatedPair> /*train*/,
                                       const FitConfig& /*config*/) {
    return std::nullopt;
  }
};

class RateScoreMetric final : public Metric {
 public:
  RateScoreMetric(std::shared_ptr<const ReportPipeline> pipeline, ScoreParams params);

  std::string name() const override { return "ratescore"; }
  double score(std::string_view reference, std::string_view candidate) const override;
  std::optional<FitResult> fit(std::span<const RatedPair> train,
                               const FitConfig& config) override;

  const ScoreParams& params() const { return params_; }
  const ReportPipeline& pipeline() const { return *pipeline_; }

 private:
  std::shared_ptr<const ReportPipeline> pipeline_;
  ScoreParams params_;
};

class BleuMetric final : public Metric {
 public:
  std::string name() const override { return "bleu"; }
  double score(std::string_view reference, std::string_view candidate) const override;
};

class RougeLMetric final : public Metric {
 public:
  std::string name() const override { return "rouge_l"; }
  double score(std::string_view reference, std::string_view candidate) const override;
};

// Echoes the human rating of a known (reference, candidate) pair. Used as
// an upper-bound sanity check for the harness itself.
class HumanOracleMetric final : public Metric {
 public:
  explicit HumanOracleMetric(std::span<const RatedPair> pairs);

  std::string name() const override { return "human"; }
  // Throws ValidationError for an unknown pair.
  double score(std::string_view reference, std::string_view candidate) const override;

 private:
  std::map<std::pair<std::string, std::string>, double, std::less<>> ratings_;
};

struct PairOutcome {
  std::string id;
  double human = 0.0;
  double score = 0.0;
  bool in_train = false;
};

struct CorrelationSummary {
  double pearson = 0.0;
  double kendall = 0.0;
  double spearman = 0.0;
};

struct CorrelationReport {
  std::string metric;
  std::size_t n_train = 0;
  std::size_t n_test = 0;
  std::vector<PairOutcome> pairs;  // input order
  std::optional<FitResult> fit;
  CorrelationSummary test;
};

struct CorrelationOptions {
  double split_ratio = 0.8;
  std::uint64_t seed = 0;
  FitConfig fit;
};

// Seeded shuffle, split_ratio train / rest test (the test fold keeps at
// least two pairs), fit on train when the metric is fittable, then
// correlate metric and human scores on the test fold.
CorrelationReport run_correlation_task(std::span<const RatedPair> pairs, Metric& metric,
                                       const CorrelationOptions& options);

struct TriadOutcome {
  std::string id;
  double synonymous_score = 0.0;
  double antonymous_score = 0.0;
  bool success = false;
};

struct SyntheticReport {
  std::string metric;
  double accuracy = 0.0;
  std::vector<TriadOutcome> triads;
};

// Success iff metric(original, synonymous) > metric(original, antonymous);
// ties fail. Throws ValidationError on an empty triad list.
SyntheticReport run_synthetic_task(std::span<const SyntheticTriad> triads,
                                   const Metric& metric);

// JSON documents for the report file. `params_path` is recorded as the
// fitted-params reference when non-empty.
std::string correlation_report_json(const CorrelationReport& report,
                                    const std::string& params_path);
std::string synthetic_report_json(const SyntheticReport& report);

}  // namespace ratescore

#endif  // RATESCORE_BENCH_H_
