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

#ifndef RATESCORE_PARAMFIT_H_
#define RATESCORE_PARAMFIT_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ratescore/scorer.h"
#include "ratescore/stats.h"
#include "ratescore/types.h"

namespace ratescore {

struct Bounds {
  double low = 0.0;
  double high = 1.0;

  double width() const { return high - low; }
  bool contains(double x) const { return x >= low && x <= high; }
};

struct TrialRecord {
  std::vector<double> theta;
  double objective = 0.0;
};

struct TpeConfig {
  std::size_t n_startup = 20;
  double gamma = 0.25;
  std::size_t n_candidates = 24;
};

// Univariate Tree-structured Parzen Estimator, maximizing.
//
// Past trials are split at the gamma quantile of the objective into "good"
// (the top fraction) and "bad". Per dimension, each side gets a Parzen
// density: one Gaussian per observation, truncated to the bounds, with
// bandwidth max(gap to the neighbouring observation or bound, floor), where
// floor is width / min(100, n + 1) for n observations (1% of the width once
// n >= 99), plus one uniform component over the bounds. Candidates are
// drawn from the good density and the one with the highest good/bad
// density ratio (product over dimensions) is returned.
class TpeSampler {
 public:
  TpeSampler(std::vector<Bounds> bounds, TpeConfig config);

  // Uniform draw while history is shorter than n_startup or either side of
  // the split has fewer than two observations.
  std::vector<double> suggest(std::span<const TrialRecord> history,
                              std::mt19937_64& rng) const;

  std::vector<double> sample_uniform(std::mt19937_64& rng) const;

  const std::vector<Bounds>& bounds() const { return bounds_; }
  const TpeConfig& config() const { return config_; }

 private:
  std::vector<Bounds> bounds_;
  TpeConfig config_;
};

// Runs n_trials sequential trials. When `first_theta` is given it is
// evaluated as trial 0.
std::vector<TrialRecord> tpe_maximize(
    const std::function<double(std::span<const double>)>& objective,
    std::vector<Bounds> bounds, const TpeConfig& config, std::size_t n_trials,
    std::uint64_t seed, std::optional<std::vector<double>> first_theta = {});

// --- Fitting W and p --------------------------------------------------------

inline constexpr std::size_t kNumParams = kNumEntityTypes * kNumEntityTypes + 1;

// 25 row-major W entries, then p.
std::vector<Bounds> param_bounds();
std::vector<double> params_to_theta(const ScoreParams& params);
ScoreParams theta_to_params(std::span<const double> theta);

struct FitConfig {
  std::size_t n_trials = 300;
  std::size_t n_startup = 20;
  double gamma = 0.25;
  std::size_t n_candidates = 24;
  std::uint64_t seed = 0;
  CorrelationKind objective = CorrelationKind::kPearson;
  // Evaluated as the first trial.
  ScoreParams initial = ScoreParams::defaults();

  // Throws ValidationError.
  void validate() const;
};

// JSON object with any of: n_trials, n_startup, gamma, n_candidates, seed,
// objective ("pearson" | "kendall" | "spearman").
FitConfig parse_fit_config(std::string_view json_text, const std::string& source_name);

struct FitResult {
  ScoreParams params;
  double best_objective = 0.0;
  std::size_t best_trial = 0;
  std::vector<TrialRecord> history;
};

// Maximizes the configured correlation between scores and human ratings.
// Throws ValidationError("degenerate training labels") with fewer than two
// pairs or constant labels. A trial whose scores are constant gets -1.
FitResult fit(std::span<const PairTerms> train, std::span<const double> human,
              const FitConfig& config);

// "trial,objective,theta_0,...,theta_25" header plus one row per trial.
std::string format_trials_csv(std::span<const TrialRecord> history);

}  // namespace ratescore

#endif  // RATESCORE_PARAMFIT_H_
