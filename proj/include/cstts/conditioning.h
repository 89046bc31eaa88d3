#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cstts {

inline constexpr std::size_t kLanguageEmbeddingDim = 64;
inline constexpr std::size_t kSpeakerEmbeddingDim = 256;
inline constexpr std::size_t kDefaultPhonemeEmbeddingDim = 512;
inline constexpr std::size_t kLanguageTableRows = 3;  // tokens 0, 1, 2

// 64-bit LCG (Knuth MMIX constants). Each draw advances the state first and
// then uses its high 53 bits.
class Lcg {
 public:
  static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
  static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;

  explicit Lcg(std::uint64_t seed) : state_(seed) {}

  std::uint64_t NextState() {
    state_ = state_ * kMultiplier + kIncrement;
    return state_;
  }
  // Uniform on [0, 1).
  double NextUniform() {
    return static_cast<double>(NextState() >> 11) * 0x1.0p-53;
  }
  // Uniform on [-0.1, 0.1).
  double NextEmbeddingValue() { return 0.2 * NextUniform() - 0.1; }

 private:
  std::uint64_t state_;
};

class EmbeddingTable {
 public:
  // Row-major values from Lcg(seed). Throws InvalidDimension on zero sizes.
  static EmbeddingTable Initialize(std::size_t vocab_size, std::size_t dim,
                                   std::uint64_t seed, std::string label = {});
  // Externally supplied values, e.g. a table loaded from file.
  static EmbeddingTable FromValues(std::size_t vocab_size, std::size_t dim,
                                   std::vector<double> values, std::uint64_t seed = 0,
                                   std::string label = {});

  std::span<const double> Row(std::size_t index) const {
    return std::span<const double>(values_).subspan(index * dim_, dim_);
  }
  std::size_t rows() const { return rows_; }
  std::size_t dim() const { return dim_; }
  std::uint64_t seed() const { return seed_; }
  const std::string& label() const { return label_; }
  const std::vector<double>& values() const { return values_; }

  bool operator==(const EmbeddingTable&) const = default;

 private:
  EmbeddingTable() = default;

  std::size_t rows_ = 0;
  std::size_t dim_ = 0;
  std::uint64_t seed_ = 0;
  std::string label_;
  std::vector<double> values_;
};

struct SpeakerEmbedding {
  std::string label;
  std::vector<double> values;  // kSpeakerEmbeddingDim entries
};

struct LayoutSegment {
  std::string name;
  std::size_t width = 0;

  bool operator==(const LayoutSegment&) const = default;
};

// T x D row-major matrix whose columns are labelled by consecutive segments.
class ConditionedMatrix {
 public:
  ConditionedMatrix(std::size_t rows, std::vector<LayoutSegment> layout);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<LayoutSegment>& layout() const { return layout_; }

  std::span<double> Row(std::size_t t) {
    return std::span<double>(data_).subspan(t * cols_, cols_);
  }
  std::span<const double> Row(std::size_t t) const {
    return std::span<const double>(data_).subspan(t * cols_, cols_);
  }
  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

  bool operator==(const ConditionedMatrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<LayoutSegment> layout_;
  std::vector<double> data_;
};

// Row t = phoneme_table[ids[t]] ++ language_table[lang_tokens[t]].
// Layout [("phoneme", Dp), ("language", 64)].
ConditionedMatrix EmbedSequence(std::span<const int> ids,
                                std::span<const int> lang_tokens,
                                const EmbeddingTable& phoneme_table,
                                const EmbeddingTable& language_table);

// Element-wise mean. Each coordinate is summed in sorted order with
// compensation, so the result does not depend on input order.
SpeakerEmbedding MeanSpeakerEmbedding(std::span<const std::vector<double>> embeddings,
                                      std::string label);

// Broadcasts the speaker vector onto every row; layout gains ("speaker", 256).
ConditionedMatrix AttachSpeaker(const ConditionedMatrix& encoder_like,
                                const SpeakerEmbedding& speaker);

}  // namespace cstts
