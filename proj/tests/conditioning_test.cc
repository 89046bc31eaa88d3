#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "cstts/conditioning.h"
#include "cstts/errors.h"
#include "oracles.h"

namespace cstts {
namespace {

// Seed 42, first six draws; computed with Python integer arithmetic.
constexpr double kSeed42[] = {0.013646065328781515, -0.05490731421044975,
                              -0.017432336234097637, 0.02607960996791958,
                              0.03602956144842312,   -0.09475421786001233};

TEST(LcgTest, FrozenValuesForSeed42) {
  Lcg lcg(42);
  for (double expected : kSeed42) EXPECT_EQ(lcg.NextEmbeddingValue(), expected);
  EXPECT_EQ(oracle::LcgValues(42, 6), std::vector<double>(std::begin(kSeed42), std::end(kSeed42)));
}

TEST(EmbeddingTableTest, InitializeFillsRowMajorFromLcg) {
  const auto table = EmbeddingTable::Initialize(5, 7, 42, "p");
  EXPECT_EQ(table.values(), oracle::LcgValues(42, 35));
  EXPECT_EQ(table.Row(1)[0], table.values()[7]);
  for (double v : table.values()) {
    EXPECT_GE(v, -0.1);
    EXPECT_LT(v, 0.1);
  }
  EXPECT_EQ(table, EmbeddingTable::Initialize(5, 7, 42, "p"));
  EXPECT_NE(table.values(), EmbeddingTable::Initialize(5, 7, 43, "p").values());
}

TEST(EmbeddingTableTest, ZeroSizesRejected) {
  for (auto [rows, dim] : {std::pair<std::size_t, std::size_t>{0, 4}, {4, 0}}) {
    try {
      EmbeddingTable::Initialize(rows, dim, 1);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidDimension);
    }
  }
  EXPECT_THROW(EmbeddingTable::FromValues(2, 2, {1.0, 2.0, 3.0}), Error);
}

class EmbedSequenceTest : public ::testing::Test {
 protected:
  EmbeddingTable phon_ = EmbeddingTable::Initialize(13, kDefaultPhonemeEmbeddingDim, 1);
  EmbeddingTable lang_ = EmbeddingTable::Initialize(kLanguageTableRows, kLanguageEmbeddingDim, 2);
  std::vector<int> ids_{12, 11, 7, 3, 5, 8, 6, 4, 5, 2, 4, 10, 4, 2};
  std::vector<int> lang_tokens_{0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 2};
};

TEST_F(EmbedSequenceTest, ShapeAndRowContents) {
  const auto m = EmbedSequence(ids_, lang_tokens_, phon_, lang_);
  EXPECT_EQ(m.rows(), 14u);
  EXPECT_EQ(m.cols(), 576u);
  EXPECT_EQ(m.layout(), (std::vector<LayoutSegment>{{"phoneme", 512}, {"language", 64}}));
  for (std::size_t t = 0; t < m.rows(); ++t) {
    const auto row = m.Row(t);
    ASSERT_TRUE(std::equal(row.begin(), row.begin() + 512, phon_.Row(ids_[t]).begin()));
    ASSERT_TRUE(std::equal(row.begin() + 512, row.end(), lang_.Row(lang_tokens_[t]).begin()));
  }
}

TEST_F(EmbedSequenceTest, AttachSpeakerBroadcasts) {
  SpeakerEmbedding spk{"s", std::vector<double>(256)};
  for (std::size_t i = 0; i < 256; ++i) spk.values[i] = static_cast<double>(i) / 256.0;
  const auto base = EmbedSequence(ids_, lang_tokens_, phon_, lang_);
  const auto m = AttachSpeaker(base, spk);
  EXPECT_EQ(m.rows(), 14u);
  EXPECT_EQ(m.cols(), 832u);
  EXPECT_EQ(m.layout().back(), (LayoutSegment{"speaker", 256}));
  for (std::size_t t = 0; t < m.rows(); ++t) {
    const auto row = m.Row(t);
    ASSERT_TRUE(std::equal(row.begin(), row.begin() + 576, base.Row(t).begin()));
    ASSERT_TRUE(std::equal(row.begin() + 576, row.end(), spk.values.begin()));
  }
  spk.values.pop_back();
  EXPECT_THROW(AttachSpeaker(base, spk), Error);
}

TEST_F(EmbedSequenceTest, EmptySequence) {
  const auto m = EmbedSequence({}, {}, phon_, lang_);
  EXPECT_EQ(m.rows(), 0u);
  EXPECT_EQ(m.cols(), 576u);
}

TEST_F(EmbedSequenceTest, Errors) {
  auto code_of = [&](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kFormat;
  };
  EXPECT_EQ(code_of([&] { EmbedSequence(std::vector<int>{2}, std::vector<int>{}, phon_, lang_); }),
            ErrorCode::kLengthMismatch);
  EXPECT_EQ(code_of([&] { EmbedSequence(std::vector<int>{13}, std::vector<int>{0}, phon_, lang_); }),
            ErrorCode::kIndexOutOfRange);
  EXPECT_EQ(code_of([&] { EmbedSequence(std::vector<int>{2}, std::vector<int>{3}, phon_, lang_); }),
            ErrorCode::kIndexOutOfRange);
  const auto narrow = EmbeddingTable::Initialize(3, 32, 2);
  EXPECT_EQ(code_of([&] { EmbedSequence(std::vector<int>{2}, std::vector<int>{0}, phon_, narrow); }),
            ErrorCode::kDimensionMismatch);
}

TEST_F(EmbedSequenceTest, PermutingPositionsPermutesRows) {
  std::mt19937 rng(5);
  std::vector<std::size_t> perm(ids_.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<int> ids, langs;
  for (std::size_t p : perm) {
    ids.push_back(ids_[p]);
    langs.push_back(lang_tokens_[p]);
  }
  const auto a = EmbedSequence(ids_, lang_tokens_, phon_, lang_);
  const auto b = EmbedSequence(ids, langs, phon_, lang_);
  for (std::size_t t = 0; t < perm.size(); ++t) {
    const auto rb = b.Row(t);
    const auto ra = a.Row(perm[t]);
    ASSERT_TRUE(std::equal(rb.begin(), rb.end(), ra.begin()));
  }
}

std::vector<std::vector<double>> RandomVectors(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  std::vector<std::vector<double>> out(n, std::vector<double>(256));
  for (auto& v : out) {
    for (double& x : v) x = dist(rng);
  }
  return out;
}

TEST(MeanSpeakerEmbeddingTest, SingleVectorIsFixedPoint) {
  const auto v = RandomVectors(1, 1);
  EXPECT_EQ(MeanSpeakerEmbedding(v, "s").values, v[0]);
}

TEST(MeanSpeakerEmbeddingTest, IdenticalVectorsAreFixedPoint) {
  const auto one = RandomVectors(1, 2)[0];
  const std::vector<std::vector<double>> many(37, one);
  EXPECT_EQ(MeanSpeakerEmbedding(many, "s").values, one);
}

TEST(MeanSpeakerEmbeddingTest, PermutationInvariantBitForBit) {
  auto v = RandomVectors(200, 3);
  const auto ref = MeanSpeakerEmbedding(v, "s").values;
  std::mt19937 rng(9);
  for (int k = 0; k < 10; ++k) {
    std::shuffle(v.begin(), v.end(), rng);
    ASSERT_EQ(MeanSpeakerEmbedding(v, "s").values, ref);
  }
}

TEST(MeanSpeakerEmbeddingTest, AgreesWithNaiveMean) {
  const auto v = RandomVectors(100, 4);
  const auto mean = MeanSpeakerEmbedding(v, "s").values;
  const auto naive = oracle::Mean(v);
  for (std::size_t d = 0; d < 256; ++d) EXPECT_NEAR(mean[d], naive[d], 1e-12);
}

TEST(MeanSpeakerEmbeddingTest, Errors) {
  try {
    MeanSpeakerEmbedding({}, "s");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyInput);
  }
  auto v = RandomVectors(2, 5);
  v[1].push_back(0.0);
  try {
    MeanSpeakerEmbedding(v, "s");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
}

}  // namespace
}  // namespace cstts
