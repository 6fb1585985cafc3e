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

#include "ratescore/paramfit.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <numeric>

#include "json.hpp"
#include "ratescore/errors.h"

namespace ratescore {
namespace {

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

// One-dimensional truncated Parzen mixture with a uniform prior component.
class ParzenDensity {
 public:
  ParzenDensity(std::vector<double> observations, Bounds bounds)
      : bounds_(bounds), mus_(std::move(observations)) {
    std::sort(mus_.begin(), mus_.end());
    const double width = bounds_.width();
    // Floor of width / min(100, n + 1): 1% of the width from 99 observations on.
    const double floor =
        width / std::min(100.0, static_cast<double>(mus_.size()) + 1.0);
    sigmas_.resize(mus_.size());
    masses_.resize(mus_.size());
    for (std::size_t i = 0; i < mus_.size(); ++i) {
      const double left = mus_[i] - (i == 0 ? bounds_.low : mus_[i - 1]);
      const double right = (i + 1 == mus_.size() ? bounds_.high : mus_[i + 1]) - mus_[i];
      sigmas_[i] = std::clamp(std::max(left, right), floor, width);
      masses_[i] = normal_cdf((bounds_.high - mus_[i]) / sigmas_[i]) -
                   normal_cdf((bounds_.low - mus_[i]) / sigmas_[i]);
    }
  }

  double log_pdf(double x) const {
    const double components = static_cast<double>(mus_.size() + 1);
    double sum = 1.0 / bounds_.width();
    for (std::size_t i = 0; i < mus_.size(); ++i) {
      const double z = (x - mus_[i]) / sigmas_[i];
      sum += std::exp(-0.5 * z * z) /
             (sigmas_[i] * std::sqrt(2.0 * std::numbers::pi) * masses_[i]);
    }
    return std::log(sum / components);
  }

  double sample(std::mt19937_64& rng) const {
    std::uniform_int_distribution<std::size_t> pick(0, mus_.size());
    const std::size_t k = pick(rng);
    if (k == mus_.size()) {
      return std::uniform_real_distribution<double>(bounds_.low, bounds_.high)(rng);
    }
    std::normal_distribution<double> normal(mus_[k], sigmas_[k]);
    for (int attempt = 0; attempt < 64; ++attempt) {
      const double x = normal(rng);
      if (bounds_.contains(x)) return x;
    }
    return std::clamp(mus_[k], bounds_.low, bounds_.high);
  }

 private:
  Bounds bounds_;
  std::vector<double> mus_;
  std::vector<double> sigmas_;
  std::vector<double> masses_;
};

}  // namespace

TpeSampler::TpeSampler(std::vector<Bounds> bounds, TpeConfig config)
    : bounds_(std::move(bounds)), config_(config) {
  if (bounds_.empty()) throw ValidationError("TPE needs at least one dimension");
  for (const Bounds& b : bounds_) {
    if (!(b.high > b.low)) throw ValidationError("TPE bound with zero width");
  }
  if (!(config_.gamma > 0.0 && config_.gamma < 1.0)) {
    throw ValidationError("gamma must be in (0, 1)");
  }
  if (config_.n_candidates == 0) throw ValidationError("n_candidates must be positive");
}

std::vector<double> TpeSampler::sample_uniform(std::mt19937_64& rng) const {
  std::vector<double> theta(bounds_.size());
  for (std::size_t d = 0; d < bounds_.size(); ++d) {
    theta[d] = std::uniform_real_distribution<double>(bounds_[d].low, bounds_[d].high)(rng);
  }
  return theta;
}

std::vector<double> TpeSampler::suggest(std::span<const TrialRecord> history,
                                        std::mt19937_64& rng) const {
  const std::size_t n = history.size();
  if (n < config_.n_startup) return sample_uniform(rng);

  const auto n_good = static_cast<std::size_t>(
      std::ceil(config_.gamma * static_cast<double>(n)));
  if (n_good < 2 || n - n_good < 2) return sample_uniform(rng);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return history[a].objective > history[b].objective;
  });

  std::vector<ParzenDensity> good;
  std::vector<ParzenDensity> bad;
  good.reserve(bounds_.size());
  bad.reserve(bounds_.size());
  for (std::size_t d = 0; d < bounds_.size(); ++d) {
    std::vector<double> good_obs, bad_obs;
    for (std::size_t k = 0; k < n; ++k) {
      (k < n_good ? good_obs : bad_obs).push_back(history[order[k]].theta[d]);
    }
    good.emplace_back(std::move(good_obs), bounds_[d]);
    bad.emplace_back(std::move(bad_obs), bounds_[d]);
  }

  std::vector<double> best;
  double best_ratio = -std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < config_.n_candidates; ++c) {
    std::vector<double> candidate(bounds_.size());
    double log_ratio = 0.0;
    for (std::size_t d = 0; d < bounds_.size(); ++d) {
      candidate[d] = good[d].sample(rng);
      log_ratio += good[d].log_pdf(candidate[d]) - bad[d].log_pdf(candidate[d]);
    }
    if (best.empty() || log_ratio > best_ratio) {
      best_ratio = log_ratio;
      best = std::move(candidate);
    }
  }
  return best;
}

std::vector<TrialRecord> tpe_maximize(
    const std::function<double(std::span<const double>)>& objective,
    std::vector<Bounds> bounds, const TpeConfig& config, std::size_t n_trials,
    std::uint64_t seed, std::optional<std::vector<double>> first_theta) {
  const TpeSampler sampler(std::move(bounds), config);
  std::mt19937_64 rng(seed);
  std::vector<TrialRecord> history;
  history.reserve(n_trials);
  for (std::size_t t = 0; t < n_trials; ++t) {
    std::vector<double> theta = (t == 0 && first_theta)
                                    ? *first_theta
                                    : sampler.suggest(history, rng);
    const double value = objective(theta);
    history.push_back(TrialRecord{std::move(theta), value});
  }
  return history;
}

std::vector<Bounds> param_bounds() {
  std::vector<Bounds> bounds(kNumParams, Bounds{ScoreParams::kMinWeight, 1.0});
  bounds.back() = Bounds{0.0, 1.0};
  return bounds;
}

std::vector<double> params_to_theta(const ScoreParams& params) {
  std::vector<double> theta;
  theta.reserve(kNumParams);
  for (const auto& row : params.weights) theta.insert(theta.end(), row.begin(), row.end());
  theta.push_back(params.penalty);
  return theta;
}

ScoreParams theta_to_params(std::span<const double> theta) {
  if (theta.size() != kNumParams) {
    throw ValidationError("theta must have " + std::to_string(kNumParams) + " entries");
  }
  ScoreParams params;
  for (std::size_t r = 0; r < kNumEntityTypes; ++r) {
    for (std::size_t c = 0; c < kNumEntityTypes; ++c) {
      params.weights[r][c] = theta[r * kNumEntityTypes + c];
    }
  }
  params.penalty = theta.back();
  return params;
}

void FitConfig::validate() const {
  if (n_trials == 0) throw ValidationError("n_trials must be positive");
  if (n_startup == 0) throw ValidationError("n_startup must be positive");
  if (n_startup >= n_trials) throw ValidationError("n_startup must be below n_trials");
  if (!(gamma > 0.0 && gamma < 1.0)) throw ValidationError("gamma must be in (0, 1)");
  if (n_candidates == 0) throw ValidationError("n_candidates must be positive");
  initial.validate();
}

FitConfig parse_fit_config(std::string_view json_text, const std::string& source_name) {
  using nlohmann::json;
  FitConfig config;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(source_name + ": " + e.what());
  }
  if (!doc.is_object()) throw InputError(source_name + ": fit config must be an object");
  try {
    if (doc.contains("n_trials")) config.n_trials = doc["n_trials"].get<std::size_t>();
    if (doc.contains("n_startup")) config.n_startup = doc["n_startup"].get<std::size_t>();
    if (doc.contains("gamma")) config.gamma = doc["gamma"].get<double>();
    if (doc.contains("n_candidates")) config.n_candidates = doc["n_candidates"].get<std::size_t>();
    if (doc.contains("seed")) config.seed = doc["seed"].get<std::uint64_t>();
    const char* kind_key = doc.contains("objective_kind") ? "objective_kind" : "objective";
    if (doc.contains(kind_key)) {
      const auto kind = doc[kind_key].get<std::string>();
      if (kind == "pearson") {
        config.objective = CorrelationKind::kPearson;
      } else if (kind == "kendall") {
        config.objective = CorrelationKind::kKendall;
      } else if (kind == "spearman") {
        config.objective = CorrelationKind::kSpearman;
      } else {
        throw InputError(source_name + ": unknown objective '" + kind + "'");
      }
    }
  } catch (const json::exception& e) {
    throw InputError(source_name + ": " + e.what());
  }
  config.validate();
  return config;
}

FitResult fit(std::span<const PairTerms> train, std::span<const double> human,
              const FitConfig& config) {
  config.validate();
  if (train.size() != human.size()) {
    throw ValidationError("training pairs and labels differ in length");
  }
  if (human.size() < 2 ||
      std::all_of(human.begin(), human.end(), [&](double h) { return h == human[0]; })) {
    throw ValidationError("degenerate training labels");
  }

  std::vector<double> scores(train.size());
  auto objective = [&](std::span<const double> theta) {
    const ScoreParams params = theta_to_params(theta);
    for (std::size_t i = 0; i < train.size(); ++i) {
      scores[i] = score_pair_terms(train[i], params).score;
    }
    try {
      return correlation(config.objective, scores, human);
    } catch (const ValidationError&) {
      return -1.0;
    }
  };

  const TpeConfig tpe{config.n_startup, config.gamma, config.n_candidates};
  FitResult result;
  result.history = tpe_maximize(objective, param_bounds(), tpe, config.n_trials,
                                config.seed, params_to_theta(config.initial));
  for (std::size_t t = 0; t < result.history.size(); ++t) {
    if (t == 0 || result.history[t].objective > result.best_objective) {
      result.best_objective = result.history[t].objective;
      result.best_trial = t;
    }
  }
  result.params = theta_to_params(result.history[result.best_trial].theta);
  return result;
}

std::string format_trials_csv(std::span<const TrialRecord> history) {
  std::string out = "trial,objective";
  for (std::size_t d = 0; d < kNumParams; ++d) out += ",theta_" + std::to_string(d);
  out += '\n';
  char buf[40];
  for (std::size_t t = 0; t < history.size(); ++t) {
    out += std::to_string(t);
    std::snprintf(buf, sizeof(buf), ",%.10g", history[t].objective);
    out += buf;
    for (double v : history[t].theta) {
      std::snprintf(buf, sizeof(buf), ",%.10g", v);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace ratescore
