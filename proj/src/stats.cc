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

#include "ratescore/stats.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "ratescore/errors.h"
#include "ratescore/preprocess.h"

namespace ratescore {
namespace {

void check_inputs(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw ValidationError("correlation inputs differ in length (" +
                          std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()) + ")");
  }
  if (a.size() < 2) throw ValidationError("correlation needs at least 2 points");
}

std::vector<std::string> lowered_tokens(std::string_view text) {
  std::vector<std::string> tokens = tokenize(text);
  for (auto& t : tokens) {
    for (char& c : t) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return tokens;
}

std::map<std::vector<std::string>, int> ngram_counts(
    const std::vector<std::string>& tokens, std::size_t n) {
  std::map<std::vector<std::string>, int> counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    ++counts[std::vector<std::string>(tokens.begin() + i, tokens.begin() + i + n)];
  }
  return counts;
}

}  // namespace

double pearson(std::span<const double> a, std::span<const double> b) {
  check_inputs(a, b);
  const double n = static_cast<double>(a.size());
  const double mean_a = std::accumulate(a.begin(), a.end(), 0.0) / n;
  const double mean_b = std::accumulate(b.begin(), b.end(), 0.0) / n;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double da = a[i] - mean_a;
    const double db = b[i] - mean_b;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  if (saa == 0.0 || sbb == 0.0) throw ValidationError("zero variance");
  return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

double kendall_tau_b(std::span<const double> a, std::span<const double> b) {
  check_inputs(a, b);
  long long concordant = 0, discordant = 0;
  long long ties_a = 0, ties_b = 0;  // pairs tied in a (resp. b), including joint ties
  long long pairs = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      ++pairs;
      const bool tie_a = a[i] == a[j];
      const bool tie_b = b[i] == b[j];
      if (tie_a) ++ties_a;
      if (tie_b) ++ties_b;
      if (tie_a || tie_b) continue;
      if ((a[i] < a[j]) == (b[i] < b[j])) {
        ++concordant;
      } else {
        ++discordant;
      }
    }
  }
  if (ties_a == pairs || ties_b == pairs) throw ValidationError("zero variance");
  const double denom = std::sqrt(static_cast<double>(pairs - ties_a) *
                                 static_cast<double>(pairs - ties_b));
  return std::clamp(static_cast<double>(concordant - discordant) / denom, -1.0, 1.0);
}

std::vector<double> mid_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return values[x] < values[y]; });
  std::vector<double> ranks(values.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    // Positions i..j (0-based) hold ranks i+1..j+1.
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

double spearman(std::span<const double> a, std::span<const double> b) {
  check_inputs(a, b);
  const auto ra = mid_ranks(a);
  const auto rb = mid_ranks(b);
  return pearson(ra, rb);
}

double correlation(CorrelationKind kind, std::span<const double> a,
                   std::span<const double> b) {
  switch (kind) {
    case CorrelationKind::kKendall:
      return kendall_tau_b(a, b);
    case CorrelationKind::kSpearman:
      return spearman(a, b);
    default:
      return pearson(a, b);
  }
}

double bleu(std::string_view reference, std::string_view candidate, int max_n) {
  const auto ref = lowered_tokens(reference);
  const auto cand = lowered_tokens(candidate);
  if (cand.empty() || ref.empty()) return 0.0;

  double log_sum = 0.0;
  int orders = 0;
  for (int n = 1; n <= max_n; ++n) {
    const auto cand_counts = ngram_counts(cand, static_cast<std::size_t>(n));
    const auto ref_counts = ngram_counts(ref, static_cast<std::size_t>(n));
    long long matches = 0;
    long long total = 0;
    for (const auto& [gram, count] : cand_counts) {
      total += count;
      auto it = ref_counts.find(gram);
      if (it != ref_counts.end()) matches += std::min(count, it->second);
    }
    // Orders longer than the candidate have no n-grams and are left out.
    if (total == 0) break;
    const double numerator = matches > 0 ? static_cast<double>(matches) : kBleuEpsilon;
    log_sum += std::log(numerator / static_cast<double>(total));
    ++orders;
  }
  const double c = static_cast<double>(cand.size());
  const double r = static_cast<double>(ref.size());
  const double brevity = c > r ? 1.0 : std::exp(1.0 - r / c);
  return std::clamp(brevity * std::exp(log_sum / orders), 0.0, 1.0);
}

double rouge_l(std::string_view reference, std::string_view candidate) {
  const auto ref = lowered_tokens(reference);
  const auto cand = lowered_tokens(candidate);
  if (ref.empty() || cand.empty()) return 0.0;
  std::vector<std::size_t> prev(cand.size() + 1, 0), cur(cand.size() + 1, 0);
  for (std::size_t i = 1; i <= ref.size(); ++i) {
    for (std::size_t j = 1; j <= cand.size(); ++j) {
      cur[j] = ref[i - 1] == cand[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  const double lcs = static_cast<double>(prev[cand.size()]);
  if (lcs == 0.0) return 0.0;
  const double precision = lcs / static_cast<double>(cand.size());
  const double recall = lcs / static_cast<double>(ref.size());
  return 2.0 * precision * recall / (precision + recall);
}

}  // namespace ratescore
