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

#ifndef RATESCORE_PREPROCESS_H_
#define RATESCORE_PREPROCESS_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ratescore {

struct Sentence {
  std::string text;
  std::size_t index = 0;
  // Offset of the trimmed sentence within the parent report.
  std::size_t offset = 0;

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

// Splits on '.', '!' or '?' when followed by whitespace or end of text, so
// "3.5 cm" stays intact. Sentences are trimmed; empty ones are dropped.
std::vector<Sentence> split_sentences(std::string_view report);

struct Token {
  std::string text;
  std::size_t begin = 0;
  std::size_t end = 0;
};

// Whitespace split, then each leading and trailing ASCII punctuation
// character becomes its own token. Internal punctuation ("3.5cm",
// "air-filled") stays attached.
std::vector<Token> tokenize_with_offsets(std::string_view text);
std::vector<std::string> tokenize(std::string_view text);

// True if the token has no alphanumeric character.
bool is_punctuation_token(std::string_view token);

// Keeps the first sentence of each normalized text, in order.
std::vector<Sentence> dedup_sentences(const std::vector<Sentence>& sentences);

}  // namespace ratescore

#endif  // RATESCORE_PREPROCESS_H_
