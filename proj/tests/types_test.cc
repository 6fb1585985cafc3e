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
#include <random>

#include <gtest/gtest.h>

#include "ratescore/errors.h"
#include "ratescore/types.h"

namespace ratescore {
namespace {

TEST(EntityTypeTest, CanonicalOrderAndNames) {
  ASSERT_EQ(kAllEntityTypes.size(), 5u);
  const char* names[] = {"Anatomy", "Abnormality", "Disease", "NonAbnormality", "NonDisease"};
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(type_index(kAllEntityTypes[i]), i);
    EXPECT_EQ(entity_type_name(kAllEntityTypes[i]), names[i]);
    EXPECT_EQ(parse_entity_type(names[i]), kAllEntityTypes[i]);
  }
  EXPECT_FALSE(parse_entity_type("Bogus"));
  EXPECT_FALSE(parse_entity_type("anatomy"));
}

TEST(EntityTypeTest, NegationIsIdempotent) {
  EXPECT_EQ(negate(EntityType::kAbnormality), EntityType::kNonAbnormality);
  EXPECT_EQ(negate(EntityType::kDisease), EntityType::kNonDisease);
  EXPECT_EQ(negate(EntityType::kAnatomy), EntityType::kAnatomy);
  for (EntityType t : kAllEntityTypes) EXPECT_EQ(negate(negate(t)), negate(t));
}

TEST(NormalizeNameTest, Examples) {
  EXPECT_EQ(normalize_name("Pleural  Effusion."), "pleural effusion");
  EXPECT_EQ(normalize_name("lung"), "lung");
  EXPECT_EQ(normalize_name("   "), "");
  EXPECT_EQ(normalize_name("..;!"), "");
  EXPECT_EQ(normalize_name(" ?In\tSitu! "), "in situ");
  EXPECT_EQ(normalize_name("air-filled"), "air-filled");
}

TEST(NormalizeNameTest, IdempotentOnRandomStrings) {
  std::mt19937_64 rng(7);
  const std::string alphabet = "aB z.,;:!?\t-3\n";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> len(0, 12);
  for (int i = 0; i < 2000; ++i) {
    std::string s;
    for (int k = len(rng); k > 0; --k) s += alphabet[pick(rng)];
    const std::string once = normalize_name(s);
    EXPECT_EQ(normalize_name(once), once) << "input: '" << s << "'";
  }
}

TEST(TaggedReportTest, OrderInvariantUnderPermutation) {
  std::vector<TypedEntity> entities = {
      {"effusion", EntityType::kAbnormality, Span{10, 18}},
      {"lung", EntityType::kAnatomy, Span{0, 4}},
      {"lung", EntityType::kAbnormality, Span{0, 4}},
      {"zeta", EntityType::kAnatomy, Span{20, 24}},
      {"alpha", EntityType::kAnatomy, Span{20, 25}},
      {"nospan", EntityType::kDisease, std::nullopt},
  };
  const std::string text(30, 'x');
  const auto expected = make_tagged_report(text, entities).entities;
  EXPECT_EQ(expected[0].name, "lung");
  EXPECT_EQ(expected[0].type, EntityType::kAnatomy);
  EXPECT_EQ(expected[3].name, "alpha");
  EXPECT_EQ(expected.back().name, "nospan");
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    std::shuffle(entities.begin(), entities.end(), rng);
    EXPECT_EQ(make_tagged_report(text, entities).entities, expected);
  }
}

TEST(TaggedReportTest, RejectsBadSpansAndEmptyNames) {
  EXPECT_THROW(make_tagged_report("abc", {{"x", EntityType::kAnatomy, Span{1, 5}}}),
               ValidationError);
  EXPECT_THROW(make_tagged_report("abc", {{"x", EntityType::kAnatomy, Span{2, 2}}}),
               ValidationError);
  EXPECT_THROW(make_tagged_report("abc", {{" . ", EntityType::kAnatomy, std::nullopt}}),
               ValidationError);
}

TEST(ScoreParamsTest, Validation) {
  ScoreParams params = ScoreParams::defaults();
  EXPECT_NO_THROW(params.validate());
  params.weights[2][3] = 0.0;
  EXPECT_THROW(params.validate(), ValidationError);
  params.weights[2][3] = 1e-6;
  EXPECT_NO_THROW(params.validate());
  params.penalty = 1.5;
  EXPECT_THROW(params.validate(), ValidationError);
  params.penalty = -0.1;
  EXPECT_THROW(params.validate(), ValidationError);
}

}  // namespace
}  // namespace ratescore
