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

#include "ratescore/preprocess.h"

#include <cctype>
#include <unordered_set>

#include "ratescore/types.h"

namespace ratescore {
namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)); }

bool is_punct(char c) { return std::ispunct(static_cast<unsigned char>(c)); }

bool is_terminator(char c) { return c == '.' || c == '!' || c == '?'; }

void emit_sentence(std::string_view report, std::size_t begin, std::size_t end,
                   std::vector<Sentence>& out) {
  while (begin < end && is_space(report[begin])) ++begin;
  while (end > begin && is_space(report[end - 1])) --end;
  if (begin == end) return;
  out.push_back(Sentence{std::string(report.substr(begin, end - begin)),
                         out.size(), begin});
}

}  // namespace

std::vector<Sentence> split_sentences(std::string_view report) {
  std::vector<Sentence> sentences;
  std::size_t start = 0;
  for (std::size_t i = 0; i < report.size(); ++i) {
    if (!is_terminator(report[i])) continue;
    if (i + 1 == report.size() || is_space(report[i + 1])) {
      emit_sentence(report, start, i + 1, sentences);
      start = i + 1;
    }
  }
  emit_sentence(report, start, report.size(), sentences);
  return sentences;
}

std::vector<Token> tokenize_with_offsets(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    if (i == text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !is_space(text[j])) ++j;

    std::size_t core_begin = i;
    std::size_t core_end = j;
    while (core_begin < core_end && is_punct(text[core_begin])) ++core_begin;
    while (core_end > core_begin && is_punct(text[core_end - 1])) --core_end;

    for (std::size_t k = i; k < core_begin; ++k) {
      tokens.push_back(Token{std::string(1, text[k]), k, k + 1});
    }
    if (core_begin < core_end) {
      tokens.push_back(
          Token{std::string(text.substr(core_begin, core_end - core_begin)),
                core_begin, core_end});
    }
    for (std::size_t k = core_end; k < j; ++k) {
      tokens.push_back(Token{std::string(1, text[k]), k, k + 1});
    }
    i = j;
  }
  return tokens;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  for (Token& token : tokenize_with_offsets(text)) {
    out.push_back(std::move(token.text));
  }
  return out;
}

bool is_punctuation_token(std::string_view token) {
  for (char c : token) {
    const auto u = static_cast<unsigned char>(c);
    if (std::isalnum(u) || u >= 0x80) return false;
  }
  return true;
}

std::vector<Sentence> dedup_sentences(const std::vector<Sentence>& sentences) {
  std::vector<Sentence> out;
  std::unordered_set<std::string> seen;
  for (const Sentence& s : sentences) {
    if (seen.insert(normalize_name(s.text)).second) out.push_back(s);
  }
  return out;
}

}  // namespace ratescore
