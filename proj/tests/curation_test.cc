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

#include "ratescore/curation.h"
#include "ratescore/errors.h"
#include "ratescore/io.h"
#include "ratescore/ner.h"
#include "ratescore/preprocess.h"
#include "test_util.h"

namespace ratescore {
namespace {

using testing::data_path;
using T = EntityType;

std::vector<TypedEntity> entities_named(std::initializer_list<const char*> names) {
  std::vector<TypedEntity> out;
  for (const char* n : names) out.push_back({n, T::kAbnormality, std::nullopt});
  return out;
}

TEST(SimilarityFilterTest, VerbatimEntryKept) {
  const auto library = load_embedding_table(data_path("curation_library.tsv"));
  const HashEncoder encoder(library.dimension());
  const auto out = similarity_decisions(entities_named({"Pleural Effusion"}), library, encoder);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_TRUE(out[0].kept);
  EXPECT_NEAR(out[0].max_similarity, 1.0, 1e-12);
  EXPECT_EQ(out[0].nearest, "pleural effusion");
}

TEST(SimilarityFilterTest, ThresholdOneDropsAbsentEntity) {
  const auto library = load_embedding_table(data_path("curation_library.tsv"));
  const HashEncoder encoder(library.dimension());
  EXPECT_TRUE(
      filter_entities_by_similarity(entities_named({"bronchiectasis"}), library, encoder, 1.0)
          .empty());
}

TEST(SimilarityFilterTest, MatchesExhaustiveOracle) {
  const auto library = load_embedding_table(data_path("curation_library.tsv"));
  const HashEncoder encoder(library.dimension());
  const auto entities = entities_named({"pleural effusions", "lung", "left lungs", "mass",
                                        "bronchiectasis", "cardiac silhouette", "nodules",
                                        "free fluid", "heart", "edema"});
  for (double threshold : {0.0, 0.3, 0.5, 0.83, 1.0}) {
    const auto decisions = similarity_decisions(entities, library, encoder, threshold);
    ASSERT_EQ(decisions.size(), entities.size());
    for (std::size_t i = 0; i < entities.size(); ++i) {
      double best = 0.0;
      for (const auto& [name, row] : library.rows()) {
        best = std::max(best, cosine(hash_encode(entities[i].name, library.dimension()), row));
      }
      EXPECT_DOUBLE_EQ(decisions[i].max_similarity, best) << entities[i].name;
      EXPECT_EQ(decisions[i].kept, best >= threshold) << entities[i].name;
    }
    if (threshold == 0.0) {
      EXPECT_TRUE(std::all_of(decisions.begin(), decisions.end(),
                              [](const auto& d) { return d.kept; }));
    }
  }
}

TEST(SimilarityFilterTest, Errors) {
  const EmbeddingTable empty(8);
  EXPECT_THROW(filter_entities_by_similarity(entities_named({"x"}), empty, HashEncoder(8)),
               ValidationError);
  const auto library = load_embedding_table(data_path("curation_library.tsv"));
  EXPECT_THROW(filter_entities_by_similarity(entities_named({"x"}), library, HashEncoder(8)),
               ValidationError);
}

TEST(DensityFilterTest, Examples) {
  const std::string all = "pleural effusion";
  const auto full = filter_sentence_by_density(all, {{all, T::kAbnormality, Span{0, 16}}});
  EXPECT_EQ(full.density, 1.0);
  EXPECT_TRUE(full.keep);

  const auto none = filter_sentence_by_density("Nothing to report.", {});
  EXPECT_EQ(none.density, 0.0);
  EXPECT_FALSE(none.keep);

  const std::string ten = "a b c d e f g h i j";
  std::vector<TypedEntity> seven;
  for (std::size_t k = 0; k < 7; ++k) {
    seven.push_back({std::string(1, char('a' + k)), T::kAnatomy, Span{2 * k, 2 * k + 1}});
  }
  const auto boundary = filter_sentence_by_density(ten, seven);
  EXPECT_EQ(boundary.covered_tokens, 7u);
  EXPECT_EQ(boundary.content_tokens, 10u);
  EXPECT_DOUBLE_EQ(boundary.density, 0.7);
  EXPECT_TRUE(boundary.keep);

  const auto punct = filter_sentence_by_density(" . , ", {});
  EXPECT_TRUE(punct.empty_sentence);
  EXPECT_FALSE(punct.keep);
}

TEST(DensityFilterTest, PunctuationIsNotCounted) {
  const std::string s = "Effusion.";
  const auto d = filter_sentence_by_density(s, {{"Effusion", T::kAbnormality, Span{0, 8}}});
  EXPECT_EQ(d.content_tokens, 1u);
  EXPECT_TRUE(d.keep);
}

TEST(CurationTest, MonotoneInThresholdOnFixture) {
  const auto sentences = split_lines(read_text_file(data_path("curation_sentences.txt")));
  const auto library = load_embedding_table(data_path("curation_library.tsv"));
  const HashEncoder encoder(library.dimension());
  const GazetteerTagger tagger(load_gazetteer(data_path("radiology_gazetteer.tsv")),
                               NegationLexicon::defaults());
  std::size_t previous_sentences = SIZE_MAX, previous_entities = SIZE_MAX;
  for (double threshold : {0.5, 0.7, 0.83, 0.9, 1.0}) {
    std::size_t kept_sentences = 0, kept_entities = 0;
    for (const auto& s : sentences) {
      if (s.empty()) continue;
      const auto report = tagger.tag(s);
      kept_sentences += filter_sentence_by_density(s, report.entities, threshold).keep;
      kept_entities +=
          filter_entities_by_similarity(report.entities, library, encoder, threshold).size();
    }
    EXPECT_LE(kept_sentences, previous_sentences) << threshold;
    EXPECT_LE(kept_entities, previous_entities) << threshold;
    previous_sentences = kept_sentences;
    previous_entities = kept_entities;
  }
}

}  // namespace
}  // namespace ratescore
