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
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "ratescore/errors.h"
#include "ratescore/stats.h"

namespace ratescore {
namespace {

using V = std::vector<double>;

TEST(PearsonTest, KnownValues) {
  EXPECT_NEAR(pearson(V{1, 2, 3}, V{1, 2, 4}), 3.0 / std::sqrt(28.0 / 3.0), 1e-12);
  EXPECT_NEAR(pearson(V{1, 2, 3}, V{1, 2, 4}), 0.981981, 1e-6);
  EXPECT_NEAR(pearson(V{1, 2, 3}, V{3, 2, 1}), -1.0, 1e-12);
}

TEST(PearsonTest, Errors) {
  EXPECT_THROW(pearson(V{1, 1, 1}, V{1, 2, 3}), ValidationError);
  EXPECT_THROW(pearson(V{1}, V{1}), ValidationError);
  EXPECT_THROW(pearson(V{1, 2}, V{1, 2, 3}), ValidationError);
}

TEST(PearsonTest, AffineInvariance) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> n;
  for (int t = 0; t < 100; ++t) {
    V a(20), b(20), a2(20);
    for (std::size_t i = 0; i < a.size(); ++i) {
      a[i] = n(rng);
      b[i] = n(rng);
      a2[i] = 3.5 * a[i] - 7.0;
    }
    EXPECT_NEAR(pearson(a, b), pearson(a2, b), 1e-12);
    EXPECT_NEAR(pearson(a, b), pearson(b, a), 1e-15);
  }
}

TEST(KendallTest, KnownValues) {
  EXPECT_NEAR(kendall_tau_b(V{1, 2, 3, 4}, V{1, 3, 2, 4}), 4.0 / 6.0, 1e-12);
  // n0 = 6, n1 = 1, n2 = 0, concordant 5, discordant 0.
  EXPECT_NEAR(kendall_tau_b(V{1, 1, 2, 3}, V{1, 2, 3, 4}), 5.0 / std::sqrt(5.0 * 6.0), 1e-12);
  EXPECT_THROW(kendall_tau_b(V{2, 2, 2}, V{1, 2, 3}), ValidationError);
}

TEST(SpearmanTest, KnownValuesAndMidRanks) {
  EXPECT_EQ(mid_ranks(V{10, 20, 20, 5}), (V{2, 3.5, 3.5, 1}));
  EXPECT_NEAR(spearman(V{1, 2, 3, 4}, V{1, 4, 9, 16}), 1.0, 1e-12);
  EXPECT_NEAR(spearman(V{1, 2, 3, 4, 5}, V{5, 6, 7, 8, 7}), 0.8207826816681233, 1e-12);
}

TEST(RankCorrelationTest, MonotoneInvariance) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> d(0, 6);
  for (int t = 0; t < 100; ++t) {
    V a(15), b(15), a2(15);
    for (std::size_t i = 0; i < a.size(); ++i) {
      a[i] = d(rng);
      b[i] = d(rng);
      a2[i] = std::exp(a[i]);
    }
    try {
      EXPECT_NEAR(kendall_tau_b(a, b), kendall_tau_b(a2, b), 1e-12);
      EXPECT_NEAR(spearman(a, b), spearman(a2, b), 1e-12);
    } catch (const ValidationError&) {
    }
  }
}

TEST(CorrelationTest, DispatchesByKind) {
  const V a{1, 2, 3, 4}, b{1, 3, 2, 4};
  EXPECT_EQ(correlation(CorrelationKind::kPearson, a, b), pearson(a, b));
  EXPECT_EQ(correlation(CorrelationKind::kKendall, a, b), kendall_tau_b(a, b));
  EXPECT_EQ(correlation(CorrelationKind::kSpearman, a, b), spearman(a, b));
}

TEST(BleuTest, KnownValues) {
  EXPECT_NEAR(bleu("a b c d e", "a b c d e"), 1.0, 1e-12);
  EXPECT_NEAR(bleu("a b c d e", "a b c e d"), 0.003021375397356768, 1e-12);
  EXPECT_NEAR(bleu("a b c d e", "a b c"), 0.513417119032592, 1e-12);
  EXPECT_NEAR(bleu("No effusion.", "no effusion."), 1.0, 1e-12);
  EXPECT_EQ(bleu("a b", ""), 0.0);
}

TEST(RougeLTest, KnownValues) {
  EXPECT_NEAR(rouge_l("a b c d", "a c d"), 6.0 / 7.0, 1e-12);
  EXPECT_NEAR(rouge_l("a b", "a b"), 1.0, 1e-12);
  EXPECT_EQ(rouge_l("a b", "c d"), 0.0);
  EXPECT_EQ(rouge_l("", "c d"), 0.0);
}

}  // namespace
}  // namespace ratescore
