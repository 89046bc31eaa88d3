#include "cstts/conditioning.h"

#include <algorithm>
#include <cmath>

#include "cstts/errors.h"

namespace cstts {

EmbeddingTable EmbeddingTable::Initialize(std::size_t vocab_size, std::size_t dim,
                                          std::uint64_t seed, std::string label) {
  if (vocab_size == 0 || dim == 0) {
    throw Error(ErrorCode::kInvalidDimension,
                "embedding table needs vocab_size >= 1 and dim >= 1");
  }
  std::vector<double> values(vocab_size * dim);
  Lcg lcg(seed);
  for (double& v : values) v = lcg.NextEmbeddingValue();
  return FromValues(vocab_size, dim, std::move(values), seed, std::move(label));
}

EmbeddingTable EmbeddingTable::FromValues(std::size_t vocab_size, std::size_t dim,
                                          std::vector<double> values,
                                          std::uint64_t seed, std::string label) {
  if (vocab_size == 0 || dim == 0) {
    throw Error(ErrorCode::kInvalidDimension,
                "embedding table needs vocab_size >= 1 and dim >= 1");
  }
  if (values.size() != vocab_size * dim) {
    throw Error(ErrorCode::kDimensionMismatch,
                "expected " + std::to_string(vocab_size * dim) + " values, got " +
                    std::to_string(values.size()));
  }
  EmbeddingTable table;
  table.rows_ = vocab_size;
  table.dim_ = dim;
  table.seed_ = seed;
  table.label_ = std::move(label);
  table.values_ = std::move(values);
  return table;
}

ConditionedMatrix::ConditionedMatrix(std::size_t rows, std::vector<LayoutSegment> layout)
    : rows_(rows), cols_(0), layout_(std::move(layout)) {
  for (const auto& seg : layout_) cols_ += seg.width;
  data_.assign(rows_ * cols_, 0.0);
}

ConditionedMatrix EmbedSequence(std::span<const int> ids,
                                std::span<const int> lang_tokens,
                                const EmbeddingTable& phoneme_table,
                                const EmbeddingTable& language_table) {
  if (ids.size() != lang_tokens.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(ids.size()) + " ids vs " +
                    std::to_string(lang_tokens.size()) + " language tokens");
  }
  if (language_table.dim() != kLanguageEmbeddingDim) {
    throw Error(ErrorCode::kDimensionMismatch,
                "language embedding width must be 64, got " +
                    std::to_string(language_table.dim()));
  }
  const std::size_t dp = phoneme_table.dim();
  ConditionedMatrix out(ids.size(), {{"phoneme", dp}, {"language", kLanguageEmbeddingDim}});
  for (std::size_t t = 0; t < ids.size(); ++t) {
    if (ids[t] < 0 || static_cast<std::size_t>(ids[t]) >= phoneme_table.rows()) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "symbol id " + std::to_string(ids[t]) + " at position " + std::to_string(t));
    }
    if (lang_tokens[t] < 0 || lang_tokens[t] > 2 ||
        static_cast<std::size_t>(lang_tokens[t]) >= language_table.rows()) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "language token " + std::to_string(lang_tokens[t]) + " at position " +
                      std::to_string(t));
    }
    std::span<double> row = out.Row(t);
    const auto phon = phoneme_table.Row(static_cast<std::size_t>(ids[t]));
    const auto lang = language_table.Row(static_cast<std::size_t>(lang_tokens[t]));
    std::copy(phon.begin(), phon.end(), row.begin());
    std::copy(lang.begin(), lang.end(), row.begin() + static_cast<std::ptrdiff_t>(dp));
  }
  return out;
}

SpeakerEmbedding MeanSpeakerEmbedding(std::span<const std::vector<double>> embeddings,
                                      std::string label) {
  if (embeddings.empty()) throw Error(ErrorCode::kEmptyInput, "no utterance embeddings");
  for (std::size_t i = 0; i < embeddings.size(); ++i) {
    if (embeddings[i].size() != kSpeakerEmbeddingDim) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "embedding " + std::to_string(i) + " has " +
                      std::to_string(embeddings[i].size()) + " values, expected 256");
    }
  }
  SpeakerEmbedding mean{std::move(label), std::vector<double>(kSpeakerEmbeddingDim)};
  std::vector<double> column(embeddings.size());
  for (std::size_t d = 0; d < kSpeakerEmbeddingDim; ++d) {
    for (std::size_t i = 0; i < embeddings.size(); ++i) column[i] = embeddings[i][d];
    std::sort(column.begin(), column.end());
    if (column.front() == column.back()) {
      // n*x/n can round away from x; a constant column is its own mean.
      mean.values[d] = column.front();
      continue;
    }
    // Neumaier summation.
    double sum = 0.0;
    double comp = 0.0;
    for (double x : column) {
      const double t = sum + x;
      comp += std::fabs(sum) >= std::fabs(x) ? (sum - t) + x : (x - t) + sum;
      sum = t;
    }
    mean.values[d] = (sum + comp) / static_cast<double>(embeddings.size());
  }
  return mean;
}

ConditionedMatrix AttachSpeaker(const ConditionedMatrix& encoder_like,
                                const SpeakerEmbedding& speaker) {
  if (speaker.values.size() != kSpeakerEmbeddingDim) {
    throw Error(ErrorCode::kDimensionMismatch, "speaker embedding must have 256 values");
  }
  std::vector<LayoutSegment> layout = encoder_like.layout();
  layout.push_back({"speaker", kSpeakerEmbeddingDim});
  ConditionedMatrix out(encoder_like.rows(), std::move(layout));
  const std::size_t d = encoder_like.cols();
  for (std::size_t t = 0; t < out.rows(); ++t) {
    const auto src = encoder_like.Row(t);
    std::span<double> row = out.Row(t);
    std::copy(src.begin(), src.end(), row.begin());
    std::copy(speaker.values.begin(), speaker.values.end(),
              row.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return out;
}

}  // namespace cstts
