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

#ifndef RATESCORE_ENCODER_H_
#define RATESCORE_ENCODER_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ratescore {

// Unit-length embedding of an entity name.
class EntityEmbedding {
 public:
  EntityEmbedding() = default;

  // L2-normalizes `values`. Throws ValidationError on an empty or zero
  // vector.
  static EntityEmbedding normalized(std::vector<double> values);

  std::size_t dimension() const { return values_.size(); }
  std::span<const double> values() const { return values_; }

  friend bool operator==(const EntityEmbedding&, const EntityEmbedding&) = default;

 private:
  explicit EntityEmbedding(std::vector<double> values) : values_(std::move(values)) {}

  std::vector<double> values_;
};

// Dot product of two unit vectors clamped to [0, 1]. Throws
// std::invalid_argument on a dimension mismatch.
double cosine(const EntityEmbedding& a, const EntityEmbedding& b);

struct EncodeResult {
  EntityEmbedding embedding;
  bool out_of_vocabulary = false;
};

class Encoder {
 public:
  virtual ~Encoder() = default;

  virtual std::size_t dimension() const = 0;
  virtual EncodeResult encode_with_info(std::string_view name) const = 0;

  EntityEmbedding encode(std::string_view name) const {
    return encode_with_info(name).embedding;
  }
};

// Signed feature hashing of character trigrams.
//
// The normalized name is padded as "#" + name + "#" and every 3-byte window
// is hashed with 64-bit FNV-1a. Bucket = hash % dimension; the sign is +1
// when bit 63 of the hash is clear and -1 otherwise. Counts are accumulated
// and the vector is L2-normalized. If all contributions cancel, the bucket
// of the whole padded name receives +1 instead.
class HashEncoder final : public Encoder {
 public:
  static constexpr std::size_t kDefaultDimension = 256;

  explicit HashEncoder(std::size_t dimension = kDefaultDimension);

  std::size_t dimension() const override { return dimension_; }
  // Throws ValidationError("unencodable entity") for a name that
  // normalizes to empty.
  EncodeResult encode_with_info(std::string_view name) const override;

 private:
  std::size_t dimension_;
};

EntityEmbedding hash_encode(std::string_view name,
                            std::size_t dimension = HashEncoder::kDefaultDimension);

std::uint64_t fnv1a64(std::string_view bytes);

// Name -> unit vector rows, keyed by normalized name.
class EmbeddingTable {
 public:
  explicit EmbeddingTable(std::size_t dimension) : dimension_(dimension) {}

  // Normalizes the name and vector. Throws ValidationError on a dimension
  // mismatch, duplicate name, empty name or zero vector.
  void add(std::string_view name, std::vector<double> values);

  const EntityEmbedding* find(std::string_view normalized_name) const;

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }

  // Insertion order.
  const std::vector<std::pair<std::string, EntityEmbedding>>& rows() const {
    return rows_;
  }

 private:
  std::size_t dimension_;
  std::vector<std::pair<std::string, EntityEmbedding>> rows_;
  std::unordered_map<std::string, std::size_t> index_;
};

// TSV with a "#dim=D" header line and rows "name<TAB>v1<TAB>...<TAB>vD".
// Throws InputError with the line number on any malformed row, including a
// zero vector ("degenerate embedding").
EmbeddingTable load_embedding_table(const std::string& path);
EmbeddingTable parse_embedding_table(std::string_view content,
                                     const std::string& source_name);

// Exact lookup on the normalized name; misses fall back to hash encoding
// with the table's dimension and are flagged out-of-vocabulary.
class TableEncoder final : public Encoder {
 public:
  explicit TableEncoder(std::shared_ptr<const EmbeddingTable> table);

  std::size_t dimension() const override { return table_->dimension(); }
  EncodeResult encode_with_info(std::string_view name) const override;

  const EmbeddingTable& table() const { return *table_; }

 private:
  std::shared_ptr<const EmbeddingTable> table_;
  HashEncoder fallback_;
};

}  // namespace ratescore

#endif  // RATESCORE_ENCODER_H_
