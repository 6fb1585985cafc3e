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

#include <random>

#include <gtest/gtest.h>

#include "ratescore/preprocess.h"

namespace ratescore {
namespace {

std::vector<std::string> texts(const std::vector<Sentence>& sentences) {
  std::vector<std::string> out;
  for (const auto& s : sentences) out.push_back(s.text);
  return out;
}

TEST(SplitSentencesTest, Examples) {
  EXPECT_EQ(texts(split_sentences("No effusion. Heart normal.")),
            (std::vector<std::string>{"No effusion.", "Heart normal."}));
  EXPECT_TRUE(split_sentences("").empty());
  EXPECT_TRUE(split_sentences("   \n ").empty());
  EXPECT_EQ(split_sentences("ET tube terminates approximately 3.5 cm from the carina.").size(), 1u);
}

TEST(SplitSentencesTest, SpacedDecimalIsAKnownHazard) {
  // Whitespace after the period makes it a terminator.
  EXPECT_EQ(texts(split_sentences("ET tube terminates approximately 3 . 5 cm from the carina.")),
            (std::vector<std::string>{"ET tube terminates approximately 3 .",
                                      "5 cm from the carina."}));
}

TEST(SplitSentencesTest, IndexesAndOffsets) {
  const std::string report = "  Lungs clear!  Is there effusion? No";
  const auto sentences = split_sentences(report);
  ASSERT_EQ(sentences.size(), 3u);
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    EXPECT_EQ(sentences[i].index, i);
    EXPECT_EQ(report.substr(sentences[i].offset, sentences[i].text.size()), sentences[i].text);
  }
  EXPECT_EQ(sentences[2].text, "No");
}

TEST(SplitSentencesTest, PreservesEveryNonSpaceCharacter) {
  std::mt19937_64 rng(11);
  const std::string alphabet = "ab .!?3\n";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  for (int i = 0; i < 1000; ++i) {
    std::string report;
    for (int k = 0; k < 30; ++k) report += alphabet[pick(rng)];
    std::string joined;
    for (const auto& s : split_sentences(report)) joined += s.text + " ";
    std::string a, b;
    for (char c : report) if (!std::isspace(static_cast<unsigned char>(c))) a += c;
    for (char c : joined) if (!std::isspace(static_cast<unsigned char>(c))) b += c;
    EXPECT_EQ(a, b) << report;
  }
}

TEST(TokenizeTest, Examples) {
  EXPECT_EQ(tokenize("No effusion."), (std::vector<std::string>{"No", "effusion", "."}));
  EXPECT_EQ(tokenize("in situ"), (std::vector<std::string>{"in", "situ"}));
  EXPECT_EQ(tokenize("3.5cm"), (std::vector<std::string>{"3.5cm"}));
  EXPECT_EQ(tokenize("(left) lung;"),
            (std::vector<std::string>{"(", "left", ")", "lung", ";"}));
  EXPECT_EQ(tokenize("..."), (std::vector<std::string>{".", ".", "."}));
}

TEST(TokenizeTest, OffsetsPointIntoSource) {
  const std::string text = " Free air, under  the diaphragm.";
  for (const Token& t : tokenize_with_offsets(text)) {
    EXPECT_EQ(text.substr(t.begin, t.end - t.begin), t.text);
  }
}

TEST(DedupSentencesTest, Examples) {
  auto make = [](std::vector<std::string> items) {
    std::vector<Sentence> out;
    for (std::size_t i = 0; i < items.size(); ++i) out.push_back({items[i], i, 0});
    return out;
  };
  EXPECT_EQ(texts(dedup_sentences(make({"A.", "a.", "B."}))),
            (std::vector<std::string>{"A.", "B."}));
  EXPECT_TRUE(dedup_sentences({}).empty());
  EXPECT_EQ(texts(dedup_sentences(make({"X.", "Y.", "X."}))),
            (std::vector<std::string>{"X.", "Y."}));
  const auto once = dedup_sentences(make({"Q", "q.", "R", "Q!", "s"}));
  EXPECT_EQ(dedup_sentences(once), once);
}

}  // namespace
}  // namespace ratescore
