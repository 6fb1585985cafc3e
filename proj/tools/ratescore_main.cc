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

// ratescore: entity-aware report similarity from the command line.
//
// Exit codes: 0 success, 2 input error, 3 validation or degenerate data.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ratescore/bench.h"
#include "ratescore/curation.h"
#include "ratescore/engine.h"
#include "ratescore/errors.h"
#include "ratescore/io.h"
#include "ratescore/ner.h"
#include "ratescore/paramfit.h"
#include "ratescore/preprocess.h"

namespace {

using nlohmann::json;
using namespace ratescore;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitValidation = 3;

constexpr const char* kFormatsHelp = R"(File formats (UTF-8):
  report file      one report per line; line N of --ref pairs with line N of --cand
                     No evidence of pleural effusion.
  gazetteer        name<TAB>type, type in {Anatomy, Abnormality, Disease}
                     pleural effusion	Abnormality
  negation         kind<TAB>phrase, kind in {forward, backward, terminator, self};
                   replaces the built-in lexicon
                     forward	no evidence of
                     self	in situ
  predictions      token<TAB>tag per line, blank line between reports
                     effusion	B-NonAbnormality
  embedding table  header "#dim=D", then name<TAB>v1<TAB>...<TAB>vD
                     #dim=3
                     lung	0.1	0.9	0.0
  params           {"type_order": ["Anatomy","Abnormality","Disease","NonAbnormality","NonDisease"],
                    "W": [[...5 reals...], ... 5 rows], "p": 0.36}
                   rows index the reference type, columns the candidate type
  rated pairs      JSON lines {"id","reference","candidate","human"} or with
                   "error_count" and "potential_errors" instead of "human"
  triads           JSON lines {"id","original","synonymous","antonymous"}
)";

struct ResourceOptions {
  std::string gazetteer;
  std::string negation;
  std::string encoder = "hash";
  std::string table;
  std::size_t dimension = HashEncoder::kDefaultDimension;
  std::string params;

  void add_to(CLI::App* app, bool with_params = true) {
    app->add_option("--gazetteer", gazetteer, "Gazetteer TSV");
    app->add_option("--negation", negation, "Negation lexicon TSV (default: built-in)");
    app->add_option("--encoder", encoder, "Entity encoder")
        ->check(CLI::IsMember({"hash", "table"}));
    app->add_option("--table", table, "Embedding table TSV for --encoder table");
    app->add_option("--dim", dimension, "Hash encoder dimension");
    if (with_params) app->add_option("--params", params, "Params JSON (default: built-in)");
  }

  EngineConfig engine_config() const {
    return EngineConfig{gazetteer, negation, encoder, table, dimension, params};
  }
};

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::fwrite(content.data(), 1, content.size(), stdout);
  } else {
    write_text_file(path, content);
  }
}

std::vector<std::string> read_reports(const std::string& path) {
  const std::string content = read_text_file(path);
  std::vector<std::string> reports;
  for (std::string_view line : split_lines(content)) reports.emplace_back(line);
  return reports;
}

json matches_json(const std::vector<MatchRecord>& records) {
  json out = json::array();
  for (const MatchRecord& m : records) {
    out.push_back({{"candidate_index", m.candidate_index},
                   {"reference_index", m.reference_index},
                   {"raw_cosine", m.raw_cosine},
                   {"penalized_sim", m.penalized_sim},
                   {"weight", m.weight}});
  }
  return out;
}

json entities_json(const TaggedReport& report) {
  json out = json::array();
  for (const TypedEntity& e : report.entities) {
    json row = {{"name", e.name}, {"type", entity_type_name(e.type)}};
    if (e.span) {
      row["start"] = e.span->begin;
      row["end"] = e.span->end;
    }
    out.push_back(std::move(row));
  }
  return out;
}

// --- score -----------------------------------------------------------------

struct ScoreOptions {
  std::string ref, cand, output, ner = "gazetteer";
  bool explain = false;
  std::size_t threads = 0;
  ResourceOptions resources;
};

int run_score(const ScoreOptions& opt) {
  if (opt.ner == "gazetteer" && opt.resources.gazetteer.empty()) {
    throw InputError("--ner gazetteer requires --gazetteer");
  }
  const Engine engine = Engine::load(opt.resources.engine_config());

  std::vector<RateScore> results;
  std::vector<std::string> ids;
  if (opt.ner == "predictions") {
    const auto refs = load_predictions(opt.ref);
    const auto cands = load_predictions(opt.cand);
    results = engine.score_tagged(refs, cands, opt.explain, opt.threads);
  } else {
    const auto refs = read_reports(opt.ref);
    const auto cands = read_reports(opt.cand);
    if (refs.size() != cands.size()) {
      throw InputError(opt.ref + " has " + std::to_string(refs.size()) + " reports but " +
                       opt.cand + " has " + std::to_string(cands.size()));
    }
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t i = 0; i < refs.size(); ++i) pairs.emplace_back(refs[i], cands[i]);
    results = engine.score_corpus(pairs, opt.explain, opt.threads);
  }

  std::string out;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const RateScore& r = results[i];
    json row = {{"id", i + 1},
                {"ratescore", r.score},
                {"S_forward", r.forward},
                {"S_backward", r.backward}};
    if (opt.explain) {
      row["matches"] = {{"forward", matches_json(r.forward_matches)},
                        {"backward", matches_json(r.backward_matches)}};
    }
    out += row.dump();
    out += '\n';
  }
  emit(opt.output, out);
  return kExitOk;
}

// --- fit -------------------------------------------------------------------

struct FitOptions {
  std::string pairs, config, out_params, out_trials, scale = "unit";
  std::optional<std::uint64_t> seed;
  ResourceOptions resources;
};

RatingScale parse_scale(const std::string& scale) {
  return scale == "five" ? RatingScale::kFivePoint : RatingScale::kUnit;
}

int run_fit(const FitOptions& opt) {
  if (opt.resources.gazetteer.empty()) throw InputError("fit requires --gazetteer");
  FitConfig config = opt.config.empty()
                         ? FitConfig{}
                         : parse_fit_config(read_text_file(opt.config), opt.config);
  if (opt.seed) config.seed = *opt.seed;
  const auto pairs = load_rated_pairs(opt.pairs, parse_scale(opt.scale));
  if (pairs.empty()) throw InputError(opt.pairs + ": no rated pairs");

  const Engine engine = Engine::load(opt.resources.engine_config());
  config.initial = engine.params();
  RateScoreMetric metric(engine.pipeline(), engine.params());
  const FitResult result = *metric.fit(pairs, config);

  if (!opt.out_params.empty()) write_text_file(opt.out_params, format_params(result.params));
  if (!opt.out_trials.empty()) write_text_file(opt.out_trials, format_trials_csv(result.history));
  std::printf("best objective %.6f at trial %zu of %zu\n", result.best_objective,
              result.best_trial, result.history.size());
  return kExitOk;
}

// --- bench -----------------------------------------------------------------

struct BenchOptions {
  std::string task, data, metric = "all", config, output, out_params;
  double split = 0.8;
  std::uint64_t seed = 0;
  ResourceOptions resources;
};

std::vector<std::unique_ptr<Metric>> make_metrics(const BenchOptions& opt,
                                                  const std::vector<RatedPair>& pairs) {
  std::vector<std::unique_ptr<Metric>> metrics;
  const bool all = opt.metric == "all";
  if (all || opt.metric == "ratescore") {
    if (opt.resources.gazetteer.empty()) throw InputError("ratescore needs --gazetteer");
    const Engine engine = Engine::load(opt.resources.engine_config());
    metrics.push_back(std::make_unique<RateScoreMetric>(engine.pipeline(), engine.params()));
  }
  if (all || opt.metric == "bleu") metrics.push_back(std::make_unique<BleuMetric>());
  if (all || opt.metric == "rouge_l") metrics.push_back(std::make_unique<RougeLMetric>());
  if (opt.metric == "human") metrics.push_back(std::make_unique<HumanOracleMetric>(pairs));
  return metrics;
}

int run_bench(const BenchOptions& opt) {
  if (opt.task == "synthetic") {
    if (opt.metric == "human") throw InputError("the human oracle has no synthetic ratings");
    const auto triads = load_triads(opt.data);
    if (triads.empty()) throw InputError(opt.data + ": no triads");
    json reports = json::array();
    std::printf("%-12s %8s\n", "metric", "Acc");
    for (const auto& metric : make_metrics(opt, {})) {
      const SyntheticReport report = run_synthetic_task(triads, *metric);
      std::printf("%-12s %8.4f\n", report.metric.c_str(), report.accuracy);
      reports.push_back(json::parse(synthetic_report_json(report)));
    }
    if (!opt.output.empty()) write_text_file(opt.output, reports.dump(2) + "\n");
    return kExitOk;
  }

  const RatingScale scale =
      opt.task == "paragraph" ? RatingScale::kFivePoint : RatingScale::kUnit;
  const auto pairs = load_rated_pairs(opt.data, scale);
  if (pairs.empty()) throw InputError(opt.data + ": no rated pairs");

  CorrelationOptions options;
  options.split_ratio = opt.split;
  options.seed = opt.seed;
  if (!opt.config.empty()) options.fit = parse_fit_config(read_text_file(opt.config), opt.config);
  options.fit.seed = opt.seed;

  json reports = json::array();
  std::printf("%-12s %8s %8s %8s\n", "metric", "Pearson", "Kendall", "Spearman");
  for (const auto& metric : make_metrics(opt, pairs)) {
    if (auto* rs = dynamic_cast<RateScoreMetric*>(metric.get())) options.fit.initial = rs->params();
    const CorrelationReport report = run_correlation_task(pairs, *metric, options);
    std::printf("%-12s %8.4f %8.4f %8.4f\n", report.metric.c_str(), report.test.pearson,
                report.test.kendall, report.test.spearman);
    std::string params_ref;
    if (report.fit && !opt.out_params.empty()) {
      write_text_file(opt.out_params, format_params(report.fit->params));
      params_ref = opt.out_params;
    }
    reports.push_back(json::parse(correlation_report_json(report, params_ref)));
  }
  if (!opt.output.empty()) write_text_file(opt.output, reports.dump(2) + "\n");
  return kExitOk;
}

// --- tag -------------------------------------------------------------------

struct TagOptions {
  std::string input, gazetteer, negation, output, format = "jsonl";
};

int run_tag(const TagOptions& opt) {
  const GazetteerTagger tagger(load_gazetteer(opt.gazetteer),
                               opt.negation.empty() ? NegationLexicon::defaults()
                                                    : load_negation_lexicon(opt.negation));
  std::vector<TaggedReport> reports;
  for (const std::string& text : read_reports(opt.input)) reports.push_back(tagger.tag(text));

  if (opt.format == "iob") {
    emit(opt.output, format_predictions(reports));
    return kExitOk;
  }
  std::string out;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    json row = {{"id", i + 1}, {"text", reports[i].source_text},
                {"entities", entities_json(reports[i])}};
    out += row.dump();
    out += '\n';
  }
  emit(opt.output, out);
  return kExitOk;
}

// --- curate ----------------------------------------------------------------

struct CurateOptions {
  std::string input, gazetteer, negation, library, output, encoder = "hash", table;
  double similarity = kDefaultSimilarityThreshold;
  double density = kDefaultDensityThreshold;
};

int run_curate(const CurateOptions& opt) {
  const GazetteerTagger tagger(load_gazetteer(opt.gazetteer),
                               opt.negation.empty() ? NegationLexicon::defaults()
                                                    : load_negation_lexicon(opt.negation));
  const EmbeddingTable library = load_embedding_table(opt.library);
  const auto encoder = make_encoder(opt.encoder, opt.table, library.dimension());

  std::string out;
  for (const std::string& report : read_reports(opt.input)) {
    for (const Sentence& sentence : split_sentences(report)) {
      const TaggedReport tagged = tagger.tag(sentence.text);
      const auto decisions =
          similarity_decisions(tagged.entities, library, *encoder, opt.similarity);
      std::vector<TypedEntity> kept;
      json entities = json::array();
      for (const SimilarityDecision& d : decisions) {
        if (d.kept) kept.push_back(d.entity);
        entities.push_back({{"name", d.entity.name},
                            {"type", entity_type_name(d.entity.type)},
                            {"similarity", d.max_similarity},
                            {"nearest", d.nearest},
                            {"kept", d.kept}});
      }
      const DensityDecision density =
          filter_sentence_by_density(sentence.text, kept, opt.density);
      json row = {{"sentence", sentence.text},
                  {"keep", density.keep},
                  {"density", density.density},
                  {"entities", std::move(entities)}};
      if (density.empty_sentence) row["warning"] = "no content tokens";
      out += row.dump();
      out += '\n';
    }
  }
  emit(opt.output, out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entity-aware radiology report similarity (RaTEScore)"};
  app.footer(kFormatsHelp);
  app.require_subcommand(1);

  ScoreOptions score;
  CLI::App* score_cmd = app.add_subcommand("score", "Score candidate reports against references");
  score_cmd->add_option("--ref", score.ref, "Reference reports")->required();
  score_cmd->add_option("--cand", score.cand, "Candidate reports")->required();
  score_cmd->add_option("--ner", score.ner, "Entity source")
      ->check(CLI::IsMember({"gazetteer", "predictions"}));
  score_cmd->add_option("--output", score.output, "Output JSON lines (default: stdout)");
  score_cmd->add_flag("--explain", score.explain, "Include per-entity match records");
  score_cmd->add_option("--threads", score.threads, "Worker threads (0: all cores)");
  score.resources.add_to(score_cmd);

  FitOptions fit_opt;
  CLI::App* fit_cmd = app.add_subcommand("fit", "Fit W and p to human ratings with TPE");
  fit_cmd->add_option("--pairs", fit_opt.pairs, "Rated pairs JSON lines")->required();
  fit_cmd->add_option("--scale", fit_opt.scale, "Rating scale: unit ([0,1]) or five ({0..5})")
      ->check(CLI::IsMember({"unit", "five"}));
  fit_cmd->add_option("--config", fit_opt.config,
                      "Fit config JSON (n_trials, n_startup, gamma, n_candidates, seed, objective_kind)");
  fit_cmd->add_option("--seed", fit_opt.seed, "Random seed (overrides config)");
  fit_cmd->add_option("--out-params", fit_opt.out_params, "Fitted params JSON");
  fit_cmd->add_option("--out-trials", fit_opt.out_trials, "Trials log CSV");
  fit_opt.resources.add_to(fit_cmd);

  BenchOptions bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Run a benchmark task");
  bench_cmd->add_option("--task", bench.task, "sentence | paragraph | synthetic")->required();
  bench_cmd->add_option("--data", bench.data, "Rated pairs or triads JSON lines")->required();
  bench_cmd->add_option("--metric", bench.metric, "ratescore | bleu | rouge_l | human | all")
      ->check(CLI::IsMember({"ratescore", "bleu", "rouge_l", "human", "all"}));
  bench_cmd->add_option("--split", bench.split, "Train fraction");
  bench_cmd->add_option("--seed", bench.seed, "Split and fit seed");
  bench_cmd->add_option("--config", bench.config, "Fit config JSON");
  bench_cmd->add_option("--output", bench.output, "Report JSON");
  bench_cmd->add_option("--out-params", bench.out_params, "Fitted params JSON");
  bench.resources.add_to(bench_cmd);

  TagOptions tag;
  CLI::App* tag_cmd = app.add_subcommand("tag", "Tag reports with the gazetteer and negation lexicon");
  tag_cmd->add_option("--input", tag.input, "Reports, one per line")->required();
  tag_cmd->add_option("--gazetteer", tag.gazetteer, "Gazetteer TSV")->required();
  tag_cmd->add_option("--negation", tag.negation, "Negation lexicon TSV");
  tag_cmd->add_option("--output", tag.output, "Output (default: stdout)");
  tag_cmd->add_option("--format", tag.format, "jsonl or iob")
      ->check(CLI::IsMember({"jsonl", "iob"}));

  CurateOptions curate;
  CLI::App* curate_cmd =
      app.add_subcommand("curate", "Apply similarity and density filters to tagged sentences");
  curate_cmd->add_option("--input", curate.input, "Reports, one per line")->required();
  curate_cmd->add_option("--gazetteer", curate.gazetteer, "Gazetteer TSV")->required();
  curate_cmd->add_option("--negation", curate.negation, "Negation lexicon TSV");
  curate_cmd->add_option("--library", curate.library, "Entity library embedding table")->required();
  curate_cmd->add_option("--encoder", curate.encoder, "Entity encoder")
      ->check(CLI::IsMember({"hash", "table"}));
  curate_cmd->add_option("--table", curate.table, "Embedding table for --encoder table");
  curate_cmd->add_option("--similarity-threshold", curate.similarity, "Minimum library cosine");
  curate_cmd->add_option("--density-threshold", curate.density, "Minimum entity density");
  curate_cmd->add_option("--output", curate.output, "Output JSON lines (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*score_cmd) return run_score(score);
    if (*fit_cmd) return run_fit(fit_opt);
    if (*bench_cmd) {
      if (bench.task != "sentence" && bench.task != "paragraph" && bench.task != "synthetic") {
        throw InputError("unknown task '" + bench.task + "'");
      }
      return run_bench(bench);
    }
    if (*tag_cmd) return run_tag(tag);
    if (*curate_cmd) return run_curate(curate);
  } catch (const InputError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInput;
  } catch (const ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitValidation;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return kExitInput;
}
