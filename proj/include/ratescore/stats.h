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

#ifndef RATESCORE_STATS_H_
#define RATESCORE_STATS_H_

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace ratescore {

// All correlations require equal lengths >= 2 and throw ValidationError
// ("zero variance") when either input is constant.

double pearson(std::span<const double> a, std::span<const double> b);

// Tau-b with tie correction, by enumerating all pairs.
double kendall_tau_b(std::span<const double> a, std::span<const double> b);

// Pearson correlation of mid-ranks.
double spearman(std::span<const double> a, std::span<const double> b);

// 1-based ranks; tied values share the mean of the ranks they span.
std::vector<double> mid_ranks(std::span<const double> values);

enum class CorrelationKind { kPearson, kKendall, kSpearman };

double correlation(CorrelationKind kind, std::span<const double> a,
                   std::span<const double> b);

inline constexpr double kBleuEpsilon = 1e-9;

// Sentence BLEU over lowercased tokens: geometric mean of clipped n-gram
// precisions for n = 1..max_n, zero matches replaced by kBleuEpsilon, times
// the brevity penalty. Orders longer than the candidate are skipped, so
// identical short texts still score 1.
double bleu(std::string_view reference, std::string_view candidate, int max_n = 4);

// Token LCS F1 (beta = 1).
double rouge_l(std::string_view reference, std::string_view candidate);

}  // namespace ratescore

#endif  // RATESCORE_STATS_H_
