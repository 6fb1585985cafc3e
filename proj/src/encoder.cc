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

#include "ratescore/encoder.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "ratescore/errors.h"
#include "ratescore/io.h"
#include "ratescore/types.h"

namespace ratescore {

EntityEmbedding EntityEmbedding::normalized(std::vector<double> values) {
  if (values.empty()) throw ValidationError("empty embedding");
  double sum_sq = 0.0;
  for (double v : values) {
    if (!std::isfinite(v)) throw ValidationError("non-finite embedding value");
    sum_sq += v * v;
  }
  if (sum_sq == 0.0) throw ValidationError("degenerate embedding");
  const double norm = std::sqrt(sum_sq);
  for (double& v : values) v /= norm;
  return EntityEmbedding(std::move(values));
}

double cosine(const EntityEmbedding& a, const EntityEmbedding& b) {
  if (a.dimension() != b.dimension()) {
    throw std::invalid_argument("cosine: dimension mismatch (" +
                                std::to_string(a.dimension()) + " vs " +
                                std::to_string(b.dimension()) + ")");
  }
  if (a == b) return 1.0;
  const auto x = a.values();
  const auto y = b.values();
  double dot = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) dot += x[i] * y[i];
  return std::clamp(dot, 0.0, 1.0);
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (char c : bytes) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

HashEncoder::HashEncoder(std::size_t dimension) : dimension_(dimension) {
  if (dimension_ == 0) throw ValidationError("hash encoder dimension must be positive");
}

EncodeResult HashEncoder::encode_with_info(std::string_view name) const {
  const std::string normalized = normalize_name(name);
  if (normalized.empty()) {
    throw ValidationError("unencodable entity '" + std::string(name) + "'");
  }
  const std::string padded = "#" + normalized + "#";
  std::vector<double> values(dimension_, 0.0);
  for (std::size_t i = 0; i + 3 <= padded.size(); ++i) {
    const std::uint64_t h = fnv1a64(std::string_view(padded).substr(i, 3));
    values[h % dimension_] += (h >> 63) ? -1.0 : 1.0;
  }
  if (std::all_of(values.begin(), values.end(), [](double v) { return v == 0.0; })) {
    values[fnv1a64(padded) % dimension_] = 1.0;
  }
  return {EntityEmbedding::normalized(std::move(values)), false};
}

EntityEmbedding hash_encode(std::string_view name, std::size_t dimension) {
  return HashEncoder(dimension).encode(name);
}

void EmbeddingTable::add(std::string_view name, std::vector<double> values) {
  std::string key = normalize_name(name);
  if (key.empty()) throw ValidationError("empty embedding name");
  if (values.size() != dimension_) {
    throw ValidationError("embedding for '" + key + "' has dimension " +
                          std::to_string(values.size()) + ", expected " +
                          std::to_string(dimension_));
  }
  if (index_.contains(key)) {
    throw ValidationError("duplicate embedding for '" + key + "'");
  }
  EntityEmbedding embedding = EntityEmbedding::normalized(std::move(values));
  index_.emplace(key, rows_.size());
  rows_.emplace_back(std::move(key), std::move(embedding));
}

const EntityEmbedding* EmbeddingTable::find(std::string_view normalized_name) const {
  auto it = index_.find(std::string(normalized_name));
  if (it == index_.end()) return nullptr;
  return &rows_[it->second].second;
}

EmbeddingTable parse_embedding_table(std::string_view content,
                                     const std::string& source_name) {
  const auto lines = split_lines(content);
  std::size_t line_no = 0;
  std::size_t dimension = 0;
  for (; line_no < lines.size(); ++line_no) {
    const std::string_view line = trim(lines[line_no]);
    if (line.empty()) continue;
    constexpr std::string_view kHeader = "#dim=";
    if (!line.starts_with(kHeader)) {
      throw InputError(located(source_name, line_no + 1, "expected header '#dim=D'"));
    }
    const std::string_view digits = line.substr(kHeader.size());
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), dimension);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || dimension == 0) {
      throw InputError(located(source_name, line_no + 1, "bad dimension in header"));
    }
    ++line_no;
    break;
  }
  if (dimension == 0) throw InputError(source_name + ": missing '#dim=D' header");

  EmbeddingTable table(dimension);
  for (; line_no < lines.size(); ++line_no) {
    const std::string_view line = lines[line_no];
    if (trim(line).empty() || line.front() == '#') continue;
    const auto fields = split_tabs(line);
    if (fields.size() != dimension + 1) {
      throw InputError(located(source_name, line_no + 1,
                               "expected " + std::to_string(dimension) +
                                   " values, found " +
                                   std::to_string(fields.size() - 1)));
    }
    std::vector<double> values(dimension);
    for (std::size_t d = 0; d < dimension; ++d) {
      const std::string_view field = trim(fields[d + 1]);
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), values[d]);
      if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw InputError(located(source_name, line_no + 1,
                                 "bad number '" + std::string(field) + "'"));
      }
    }
    try {
      table.add(fields[0], std::move(values));
    } catch (const ValidationError& e) {
      throw InputError(located(source_name, line_no + 1, e.what()));
    }
  }
  return table;
}

EmbeddingTable load_embedding_table(const std::string& path) {
  return parse_embedding_table(read_text_file(path), path);
}

TableEncoder::TableEncoder(std::shared_ptr<const EmbeddingTable> table)
    : table_(std::move(table)), fallback_(table_->dimension()) {}

EncodeResult TableEncoder::encode_with_info(std::string_view name) const {
  if (const EntityEmbedding* row = table_->find(normalize_name(name))) {
    return {*row, false};
  }
  EncodeResult result = fallback_.encode_with_info(name);
  result.out_of_vocabulary = true;
  return result;
}

}  // namespace ratescore
