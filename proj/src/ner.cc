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

#include "ratescore/ner.h"

#include <algorithm>
#include <cctype>

#include "ratescore/errors.h"
#include "ratescore/io.h"
#include "ratescore/preprocess.h"

namespace ratescore {
namespace {

std::string lowercase(std::string_view text) {
  std::string out(text);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

NegationLexicon::Phrase to_phrase(std::string_view phrase) {
  NegationLexicon::Phrase tokens = tokenize(lowercase(phrase));
  if (tokens.empty()) throw ValidationError("empty negation phrase");
  return tokens;
}

void add_unique(std::vector<NegationLexicon::Phrase>& phrases,
                NegationLexicon::Phrase phrase) {
  if (std::find(phrases.begin(), phrases.end(), phrase) == phrases.end()) {
    phrases.push_back(std::move(phrase));
  }
}

// Character spans of every occurrence of `phrase` in the token stream.
std::vector<Span> find_phrase(const std::vector<std::string>& lowered,
                              const std::vector<Token>& tokens,
                              const NegationLexicon::Phrase& phrase) {
  std::vector<Span> hits;
  if (phrase.size() > lowered.size()) return hits;
  for (std::size_t i = 0; i + phrase.size() <= lowered.size(); ++i) {
    if (std::equal(phrase.begin(), phrase.end(), lowered.begin() + i)) {
      hits.push_back(Span{tokens[i].begin, tokens[i + phrase.size() - 1].end});
    }
  }
  return hits;
}

std::vector<Span> find_all(const std::vector<std::string>& lowered,
                           const std::vector<Token>& tokens,
                           const std::vector<NegationLexicon::Phrase>& phrases,
                           const std::vector<Span>& exclude) {
  std::vector<Span> hits;
  for (const auto& phrase : phrases) {
    for (const Span& hit : find_phrase(lowered, tokens, phrase)) {
      const bool blocked =
          std::any_of(exclude.begin(), exclude.end(),
                      [&](const Span& e) { return e.overlaps(hit); });
      if (!blocked) hits.push_back(hit);
    }
  }
  return hits;
}

bool terminated(const std::vector<Span>& terminators, std::size_t from,
                std::size_t to) {
  return std::any_of(terminators.begin(), terminators.end(), [&](const Span& t) {
    return t.begin >= from && t.end <= to;
  });
}

}  // namespace

Gazetteer::Gazetteer(const std::map<std::string, EntityType>& entries) {
  for (const auto& [raw, type] : entries) {
    if (!is_base_type(type)) {
      throw ValidationError("gazetteer entry '" + raw + "' has negated type " +
                            std::string(entity_type_name(type)));
    }
    std::string name = normalize_name(raw);
    if (name.empty()) {
      throw ValidationError("gazetteer entry '" + raw +
                            "' is empty after normalization");
    }
    auto [it, inserted] = entries_.emplace(name, type);
    if (!inserted && it->second != type) {
      throw InputError("gazetteer entry '" + name + "' has conflicting types");
    }
    max_entry_tokens_ = std::max(max_entry_tokens_, tokenize(name).size());
  }
}

std::optional<EntityType> Gazetteer::lookup(std::string_view normalized_name) const {
  auto it = entries_.find(normalized_name);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

Gazetteer load_gazetteer(const std::string& path) {
  const std::string content = read_text_file(path);
  std::map<std::string, EntityType> entries;
  std::size_t line_no = 0;
  for (std::string_view line : split_lines(content)) {
    ++line_no;
    if (trim(line).empty() || line.front() == '#') continue;
    const auto fields = split_tabs(line);
    if (fields.size() != 2) {
      throw InputError(located(path, line_no, "expected name<TAB>type"));
    }
    const auto type = parse_entity_type(trim(fields[1]));
    if (!type || !is_base_type(*type)) {
      throw InputError(located(path, line_no,
                               "bad gazetteer type '" + std::string(fields[1]) +
                                   "' (expected Anatomy, Abnormality or Disease)"));
    }
    std::string name = normalize_name(fields[0]);
    if (name.empty()) {
      throw InputError(located(path, line_no, "empty entity name"));
    }
    auto [it, inserted] = entries.emplace(name, *type);
    if (!inserted && it->second != *type) {
      throw InputError(located(path, line_no,
                               "conflicting type for '" + name + "'"));
    }
  }
  return Gazetteer(entries);
}

void NegationLexicon::add_forward(std::string_view phrase) {
  add_unique(forward_triggers, to_phrase(phrase));
}

void NegationLexicon::add_backward(std::string_view phrase) {
  add_unique(backward_triggers, to_phrase(phrase));
}

void NegationLexicon::add_terminator(std::string_view phrase) {
  add_unique(terminators, to_phrase(phrase));
}

void NegationLexicon::add_self_negating(std::string_view name) {
  std::string normalized = normalize_name(name);
  if (normalized.empty()) throw ValidationError("empty self-negating name");
  if (!is_self_negating(normalized)) self_negating.push_back(std::move(normalized));
}

bool NegationLexicon::is_self_negating(std::string_view normalized_name) const {
  return std::find(self_negating.begin(), self_negating.end(),
                   normalized_name) != self_negating.end();
}

NegationLexicon NegationLexicon::defaults() {
  NegationLexicon lex;
  for (const char* p : {"no", "without", "no evidence of", "free of",
                        "absence of", "negative for"}) {
    lex.add_forward(p);
  }
  for (const char* p : {"unremarkable", "intact", "within normal limits",
                        "not identified", "not seen", "not in place",
                        "resolved"}) {
    lex.add_backward(p);
  }
  for (const char* p : {"but", "however", ";"}) lex.add_terminator(p);
  for (const char* p : {"in situ", "patent"}) lex.add_self_negating(p);
  return lex;
}

NegationLexicon load_negation_lexicon(const std::string& path) {
  const std::string content = read_text_file(path);
  NegationLexicon lex;
  std::size_t line_no = 0;
  for (std::string_view line : split_lines(content)) {
    ++line_no;
    if (trim(line).empty() || line.front() == '#') continue;
    const auto fields = split_tabs(line);
    if (fields.size() != 2) {
      throw InputError(located(path, line_no, "expected kind<TAB>phrase"));
    }
    const std::string_view kind = trim(fields[0]);
    try {
      if (kind == "forward") {
        lex.add_forward(fields[1]);
      } else if (kind == "backward") {
        lex.add_backward(fields[1]);
      } else if (kind == "terminator") {
        lex.add_terminator(fields[1]);
      } else if (kind == "self") {
        lex.add_self_negating(fields[1]);
      } else {
        throw InputError(located(path, line_no,
                                 "unknown negation kind '" + std::string(kind) +
                                     "'"));
      }
    } catch (const ValidationError& e) {
      throw InputError(located(path, line_no, e.what()));
    }
  }
  return lex;
}

std::vector<TypedEntity> gazetteer_tag(std::string_view sentence,
                                       const Gazetteer& gazetteer) {
  std::vector<TypedEntity> out;
  const std::vector<Token> tokens = tokenize_with_offsets(sentence);
  const std::size_t max_len = gazetteer.max_entry_tokens();
  std::size_t i = 0;
  while (i < tokens.size()) {
    std::size_t matched = 0;
    if (!is_punctuation_token(tokens[i].text)) {
      for (std::size_t len = std::min(max_len, tokens.size() - i); len >= 1; --len) {
        const Token& last = tokens[i + len - 1];
        if (is_punctuation_token(last.text)) continue;
        const std::string_view surface =
            sentence.substr(tokens[i].begin, last.end - tokens[i].begin);
        if (auto type = gazetteer.lookup(normalize_name(surface))) {
          out.push_back(TypedEntity{std::string(surface), *type,
                                    Span{tokens[i].begin, last.end}});
          matched = len;
          break;
        }
      }
    }
    i += matched > 0 ? matched : 1;
  }
  return out;
}

PolarityResult apply_polarity(std::string_view sentence,
                              const std::vector<TypedEntity>& entities,
                              const NegationLexicon& lexicon) {
  PolarityResult result;
  result.entities = entities;

  const std::vector<Token> tokens = tokenize_with_offsets(sentence);
  std::vector<std::string> lowered;
  lowered.reserve(tokens.size());
  for (const Token& t : tokens) lowered.push_back(lowercase(t.text));

  std::vector<Span> entity_spans;
  for (const TypedEntity& e : entities) {
    if (e.span) entity_spans.push_back(*e.span);
  }
  const auto forward = find_all(lowered, tokens, lexicon.forward_triggers, entity_spans);
  const auto backward = find_all(lowered, tokens, lexicon.backward_triggers, entity_spans);
  const auto stops = find_all(lowered, tokens, lexicon.terminators, entity_spans);

  for (TypedEntity& e : result.entities) {
    if (!e.span) {
      result.missing_spans = true;
      continue;
    }
    const Span& span = *e.span;
    bool negated = lexicon.is_self_negating(normalize_name(e.name));
    for (const Span& f : forward) {
      if (negated) break;
      negated = f.end <= span.begin && !terminated(stops, f.end, span.begin);
    }
    for (const Span& b : backward) {
      if (negated) break;
      negated = b.begin >= span.end && !terminated(stops, span.end, b.begin);
    }
    if (negated) e.type = negate(e.type);
  }
  return result;
}

TaggedReport GazetteerTagger::tag(std::string_view report) const {
  std::vector<TypedEntity> entities;
  for (const Sentence& sentence : split_sentences(report)) {
    auto tagged = gazetteer_tag(sentence.text, gazetteer_);
    auto polar = apply_polarity(sentence.text, tagged, lexicon_);
    for (TypedEntity& e : polar.entities) {
      e.span->begin += sentence.offset;
      e.span->end += sentence.offset;
      entities.push_back(std::move(e));
    }
  }
  return make_tagged_report(std::string(report), std::move(entities));
}

std::optional<IobTag> parse_iob_tag(std::string_view text) {
  if (text == "O") return IobTag::outside();
  if (text.size() < 3 || text[1] != '-') return std::nullopt;
  const auto type = parse_entity_type(text.substr(2));
  if (!type) return std::nullopt;
  if (text[0] == 'B') return IobTag::begin(*type);
  if (text[0] == 'I') return IobTag::inside(*type);
  return std::nullopt;
}

std::string to_string(const IobTag& tag) {
  switch (tag.prefix) {
    case IobTag::Prefix::kBegin:
      return "B-" + std::string(entity_type_name(tag.type));
    case IobTag::Prefix::kInside:
      return "I-" + std::string(entity_type_name(tag.type));
    default:
      return "O";
  }
}

std::vector<IobRun> iob_runs(std::span<const IobTag> tags) {
  std::vector<IobRun> runs;
  bool open = false;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    const IobTag& tag = tags[i];
    if (tag.prefix == IobTag::Prefix::kOutside) {
      open = false;
      continue;
    }
    const bool continues = tag.prefix == IobTag::Prefix::kInside && open &&
                           runs.back().type == tag.type;
    if (continues) {
      runs.back().end = i + 1;
    } else {
      runs.push_back(IobRun{i, i + 1, tag.type});
      open = true;
    }
  }
  return runs;
}

std::vector<IobTag> encode_iob(std::size_t num_tokens,
                               std::span<const IobRun> runs) {
  std::vector<IobTag> tags(num_tokens, IobTag::outside());
  for (const IobRun& run : runs) {
    for (std::size_t i = run.begin; i < run.end && i < num_tokens; ++i) {
      tags[i] = i == run.begin ? IobTag::begin(run.type) : IobTag::inside(run.type);
    }
  }
  return tags;
}

std::vector<IobTag> repair_iob(std::span<const IobTag> tags) {
  const auto runs = iob_runs(tags);
  return encode_iob(tags.size(), runs);
}

std::vector<TypedEntity> decode_iob(std::span<const std::string> tokens,
                                    std::span<const IobTag> tags,
                                    std::span<const Span> token_offsets) {
  if (tokens.size() != tags.size()) {
    throw InputError("malformed prediction: " + std::to_string(tokens.size()) +
                     " tokens but " + std::to_string(tags.size()) + " tags");
  }
  if (!token_offsets.empty() && token_offsets.size() != tokens.size()) {
    throw InputError("malformed prediction: token offsets do not match tokens");
  }
  std::vector<TypedEntity> entities;
  for (const IobRun& run : iob_runs(tags)) {
    TypedEntity entity;
    for (std::size_t i = run.begin; i < run.end; ++i) {
      if (i > run.begin) entity.name += ' ';
      entity.name += tokens[i];
    }
    entity.type = run.type;
    if (!token_offsets.empty()) {
      entity.span = Span{token_offsets[run.begin].begin,
                         token_offsets[run.end - 1].end};
    }
    entities.push_back(std::move(entity));
  }
  return entities;
}

std::vector<IobTag> encode_entities_iob(std::span<const Span> token_offsets,
                                        const std::vector<TypedEntity>& entities) {
  std::vector<IobRun> runs;
  for (const TypedEntity& e : entities) {
    if (!e.span) continue;
    IobRun run{token_offsets.size(), 0, e.type};
    for (std::size_t i = 0; i < token_offsets.size(); ++i) {
      const Span& t = token_offsets[i];
      if (t.begin >= e.span->begin && t.end <= e.span->end) {
        run.begin = std::min(run.begin, i);
        run.end = i + 1;
      }
    }
    if (run.begin < run.end) runs.push_back(run);
  }
  return encode_iob(token_offsets.size(), runs);
}

std::vector<TaggedReport> parse_predictions(std::string_view content,
                                            const std::string& source_name) {
  std::vector<TaggedReport> reports;
  std::vector<std::string> tokens;
  std::vector<IobTag> tags;

  auto flush = [&] {
    if (tokens.empty()) return;
    std::string text;
    std::vector<Span> offsets;
    for (const std::string& token : tokens) {
      if (!text.empty()) text += ' ';
      offsets.push_back(Span{text.size(), text.size() + token.size()});
      text += token;
    }
    auto entities = decode_iob(tokens, tags, offsets);
    reports.push_back(make_tagged_report(std::move(text), std::move(entities)));
    tokens.clear();
    tags.clear();
  };

  std::size_t line_no = 0;
  for (std::string_view line : split_lines(content)) {
    ++line_no;
    if (trim(line).empty()) {
      flush();
      continue;
    }
    const auto fields = split_tabs(line);
    if (fields.size() != 2 || trim(fields[0]).empty()) {
      throw InputError(located(source_name, line_no, "expected token<TAB>tag"));
    }
    const auto tag = parse_iob_tag(trim(fields[1]));
    if (!tag) {
      throw InputError(located(source_name, line_no,
                               "unknown tag '" + std::string(fields[1]) + "'"));
    }
    tokens.emplace_back(trim(fields[0]));
    tags.push_back(*tag);
  }
  flush();
  return reports;
}

std::vector<TaggedReport> load_predictions(const std::string& path) {
  return parse_predictions(read_text_file(path), path);
}

std::string format_predictions(const std::vector<TaggedReport>& reports) {
  std::string out;
  bool first = true;
  for (const TaggedReport& report : reports) {
    const std::vector<Token> tokens = tokenize_with_offsets(report.source_text);
    if (tokens.empty()) continue;
    if (!first) out += '\n';
    first = false;
    std::vector<Span> offsets;
    offsets.reserve(tokens.size());
    for (const Token& t : tokens) offsets.push_back(Span{t.begin, t.end});
    const auto tags = encode_entities_iob(offsets, report.entities);
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      out += tokens[i].text;
      out += '\t';
      out += to_string(tags[i]);
      out += '\n';
    }
  }
  return out;
}

}  // namespace ratescore
