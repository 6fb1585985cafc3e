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

#include "ratescore/bench.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "json.hpp"
#include "ratescore/errors.h"
#include "ratescore/io.h"
#include "ratescore/parallel.h"
#include "ratescore/stats.h"

namespace ratescore {
namespace {

using nlohmann::json;

json parse_json_line(std::string_view line, const std::string& source, std::size_t line_no) {
  try {
    json doc = json::parse(line);
    if (!doc.is_object()) throw InputError(located(source, line_no, "expected a JSON object"));
    return doc;
  } catch (const json::parse_error& e) {
    throw InputError(located(source, line_no, e.what()));
  }
}

std::string required_string(const json& doc, const char* key, const std::string& source,
                            std::size_t line_no) {
  if (!doc.contains(key) || !doc[key].is_string()) {
    throw InputError(located(source, line_no, std::string("missing string field \"") + key + "\""));
  }
  return doc[key].get<std::string>();
}

std::string optional_id(const json& doc, std::size_t line_no) {
  if (!doc.contains("id")) return std::to_string(line_no);
  return doc["id"].is_string() ? doc["id"].get<std::string>() : doc["id"].dump();
}

}  // namespace

double sentence_human_score(std::int64_t error_count, std::int64_t potential_errors) {
  if (potential_errors <= 0) throw ValidationError("potential_errors must be positive");
  if (error_count < 0) throw ValidationError("error_count must be nonnegative");
  if (error_count > potential_errors) {
    throw ValidationError("error_count exceeds potential_errors");
  }
  return 1.0 - static_cast<double>(error_count) / static_cast<double>(potential_errors);
}

std::vector<RatedPair> parse_rated_pairs(std::string_view content, const std::string& source,
                                         RatingScale scale) {
  std::vector<RatedPair> pairs;
  std::size_t line_no = 0;
  for (std::string_view line : split_lines(content)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const json doc = parse_json_line(line, source, line_no);
    RatedPair pair;
    pair.id = optional_id(doc, line_no);
    pair.reference = required_string(doc, "reference", source, line_no);
    pair.candidate = required_string(doc, "candidate", source, line_no);
    try {
      if (doc.contains("human")) {
        if (!doc["human"].is_number()) {
          throw InputError(located(source, line_no, "\"human\" must be a number"));
        }
        const double h = doc["human"].get<double>();
        if (scale == RatingScale::kFivePoint) {
          if (!(h >= 0.0 && h <= 5.0) || h != std::floor(h)) {
            throw ValidationError(located(source, line_no, "paragraph rating must be in {0..5}"));
          }
          pair.human = h / 5.0;
        } else {
          if (!(h >= 0.0 && h <= 1.0)) {
            throw ValidationError(located(source, line_no, "sentence rating must be in [0, 1]"));
          }
          pair.human = h;
        }
      } else if (doc.contains("error_count") && doc.contains("potential_errors")) {
        if (!doc["error_count"].is_number_integer() ||
            !doc["potential_errors"].is_number_integer()) {
          throw InputError(located(source, line_no, "error counts must be integers"));
        }
        pair.human = sentence_human_score(doc["error_count"].get<std::int64_t>(),
                                          doc["potential_errors"].get<std::int64_t>());
      } else {
        throw InputError(located(source, line_no,
                                 "need \"human\" or \"error_count\" + \"potential_errors\""));
      }
    } catch (const ValidationError& e) {
      const std::string what = e.what();
      if (what.starts_with(source)) throw;
      throw ValidationError(located(source, line_no, what));
    }
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

std::vector<RatedPair> load_rated_pairs(const std::string& path, RatingScale scale) {
  return parse_rated_pairs(read_text_file(path), path, scale);
}

std::vector<SyntheticTriad> parse_triads(std::string_view content, const std::string& source) {
  std::vector<SyntheticTriad> triads;
  std::size_t line_no = 0;
  for (std::string_view line : split_lines(content)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const json doc = parse_json_line(line, source, line_no);
    SyntheticTriad triad{optional_id(doc, line_no),
                         required_string(doc, "original", source, line_no),
                         required_string(doc, "synonymous", source, line_no),
                         required_string(doc, "antonymous", source, line_no)};
    if (trim(triad.original).empty() || trim(triad.synonymous).empty() ||
        trim(triad.antonymous).empty()) {
      throw InputError(located(source, line_no, "triad texts must be non-empty"));
    }
    triads.push_back(std::move(triad));
  }
  return triads;
}

std::vector<SyntheticTriad> load_triads(const std::string& path) {
  return parse_triads(read_text_file(path), path);
}

RateScoreMetric::RateScoreMetric(std::shared_ptr<const ReportPipeline> pipeline,
                                 ScoreParams params)
    : pipeline_(std::move(pipeline)), params_(params) {
  params_.validate();
}

double RateScoreMetric::score(std::string_view reference, std::string_view candidate) const {
  return pipeline_->score(reference, candidate, params_).score;
}

std::optional<FitResult> RateScoreMetric::fit(std::span<const RatedPair> train,
                                              const FitConfig& config) {
  std::vector<PairTerms> terms(train.size());
  std::vector<double> human(train.size());
  parallel_for(train.size(), [&](std::size_t i) {
    terms[i] = pipeline_->prepare(train[i].reference, train[i].candidate);
    human[i] = train[i].human;
  });
  FitResult result = ratescore::fit(terms, human, config);
  params_ = result.params;
  return result;
}

double BleuMetric::score(std::string_view reference, std::string_view candidate) const {
  return bleu(reference, candidate);
}

double RougeLMetric::score(std::string_view reference, std::string_view candidate) const {
  return rouge_l(reference, candidate);
}

HumanOracleMetric::HumanOracleMetric(std::span<const RatedPair> pairs) {
  for (const RatedPair& p : pairs) ratings_[{p.reference, p.candidate}] = p.human;
}

double HumanOracleMetric::score(std::string_view reference, std::string_view candidate) const {
  auto it = ratings_.find(std::make_pair(std::string(reference), std::string(candidate)));
  if (it == ratings_.end()) throw ValidationError("human oracle: unknown pair");
  return it->second;
}

CorrelationReport run_correlation_task(std::span<const RatedPair> pairs, Metric& metric,
                                       const CorrelationOptions& options) {
  if (pairs.size() < 5) throw ValidationError("correlation task needs at least 5 pairs");
  if (!(options.split_ratio > 0.0 && options.split_ratio < 1.0)) {
    throw ValidationError("split ratio must be in (0, 1)");
  }
  const std::size_t n = pairs.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(options.seed);
  for (std::size_t i = n - 1; i > 0; --i) {
    std::uniform_int_distribution<std::size_t> pick(0, i);
    std::swap(order[i], order[pick(rng)]);
  }
  std::size_t n_train = static_cast<std::size_t>(std::floor(options.split_ratio * n));
  n_train = std::min(n_train, n - 2);

  CorrelationReport report;
  report.n_train = n_train;
  report.n_test = n - n_train;
  std::vector<bool> in_train(n, false);
  std::vector<RatedPair> train;
  for (std::size_t k = 0; k < n_train; ++k) {
    in_train[order[k]] = true;
    train.push_back(pairs[order[k]]);
  }
  report.fit = metric.fit(train, options.fit);
  report.metric = metric.name();

  report.pairs.resize(n);
  parallel_for(n, [&](std::size_t i) {
    report.pairs[i] = PairOutcome{pairs[i].id, pairs[i].human,
                                  metric.score(pairs[i].reference, pairs[i].candidate),
                                  in_train[i]};
  });

  std::vector<double> scores, human;
  for (std::size_t k = n_train; k < n; ++k) {
    scores.push_back(report.pairs[order[k]].score);
    human.push_back(report.pairs[order[k]].human);
  }
  report.test.pearson = pearson(scores, human);
  report.test.kendall = kendall_tau_b(scores, human);
  report.test.spearman = spearman(scores, human);
  return report;
}

SyntheticReport run_synthetic_task(std::span<const SyntheticTriad> triads,
                                   const Metric& metric) {
  if (triads.empty()) throw ValidationError("synthetic task needs at least one triad");
  SyntheticReport report;
  report.metric = metric.name();
  report.triads.resize(triads.size());
  parallel_for(triads.size(), [&](std::size_t i) {
    const SyntheticTriad& t = triads[i];
    TriadOutcome& out = report.triads[i];
    out.id = t.id;
    out.synonymous_score = metric.score(t.original, t.synonymous);
    out.antonymous_score = metric.score(t.original, t.antonymous);
    out.success = out.synonymous_score > out.antonymous_score;
  });
  const auto successes = std::count_if(report.triads.begin(), report.triads.end(),
                                       [](const TriadOutcome& t) { return t.success; });
  report.accuracy = static_cast<double>(successes) / static_cast<double>(triads.size());
  return report;
}

std::string correlation_report_json(const CorrelationReport& report,
                                    const std::string& params_path) {
  json doc;
  doc["metric"] = report.metric;
  doc["n_train"] = report.n_train;
  doc["n_test"] = report.n_test;
  doc["test"] = {{"pearson", report.test.pearson},
                 {"kendall", report.test.kendall},
                 {"spearman", report.test.spearman}};
  if (report.fit) {
    doc["fit"] = {{"best_objective", report.fit->best_objective},
                  {"best_trial", report.fit->best_trial},
                  {"n_trials", report.fit->history.size()}};
    if (!params_path.empty()) doc["fit"]["params"] = params_path;
  }
  json rows = json::array();
  for (const PairOutcome& p : report.pairs) {
    rows.push_back({{"id", p.id},
                    {"human", p.human},
                    {"score", p.score},
                    {"split", p.in_train ? "train" : "test"}});
  }
  doc["pairs"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::string synthetic_report_json(const SyntheticReport& report) {
  json doc;
  doc["metric"] = report.metric;
  doc["accuracy"] = report.accuracy;
  json rows = json::array();
  for (const TriadOutcome& t : report.triads) {
    rows.push_back({{"id", t.id},
                    {"synonymous", t.synonymous_score},
                    {"antonymous", t.antonymous_score},
                    {"success", t.success}});
  }
  doc["triads"] = std::move(rows);
  return doc.dump(2) + "\n";
}

}  // namespace ratescore
