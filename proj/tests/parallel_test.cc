#include <gtest/gtest.h>

#include "cstts/parallel.h"
#include "fuzz.h"
#include "test_util.h"

namespace cstts {
namespace {

using testing::BundledLexicons;

std::vector<std::string> Lines(std::size_t n, unsigned seed, bool with_errors) {
  const fuzz::CoveredPools pools(BundledLexicons());
  fuzz::Rng rng(seed);
  std::vector<std::string> lines;
  for (std::size_t i = 0; i < n; ++i) {
    std::string line = fuzz::RandomCoveredText(rng, pools, 10);
    if (with_errors && i % 17 == 5) line += " 42";
    lines.push_back(line);
  }
  return lines;
}

void ExpectSameOutcomes(const std::vector<SequenceOutcome>& a,
                        const std::vector<SequenceOutcome>& b) {
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    ASSERT_EQ(a[i].sequence, b[i].sequence) << i;
    ASSERT_EQ(a[i].warnings, b[i].warnings) << i;
    ASSERT_EQ(a[i].ok(), b[i].ok()) << i;
    if (!a[i].ok()) ASSERT_STREQ(a[i].error->what(), b[i].error->what());
  }
}

TEST(ParallelTest, BuildSequencesMatchesSerial) {
  const auto lines = Lines(700, 1, true);
  for (OovMode mode : {OovMode::kStrict, OovMode::kSkipOov}) {
    const auto serial = BuildSequencesSerial(lines, BundledLexicons(), mode);
    for (int threads : {1, 2, 4, 0}) {
      ExpectSameOutcomes(serial, BuildSequencesParallel(lines, BundledLexicons(), mode, threads));
    }
  }
  const auto strict = BuildSequencesSerial(lines, BundledLexicons(), OovMode::kStrict);
  EXPECT_FALSE(strict[5].ok());
  EXPECT_TRUE(strict[4].ok());
}

TEST(ParallelTest, CountPhonemesMatchesSerial) {
  std::vector<TaggedSequence> corpus;
  for (const auto& o : BuildSequencesSerial(Lines(500, 2, false), BundledLexicons(),
                                            OovMode::kStrict)) {
    corpus.push_back(o.sequence);
  }
  const auto serial = CountPhonemesSerial(corpus, "c");
  for (int threads : {1, 3, 0}) EXPECT_EQ(CountPhonemesParallel(corpus, "c", threads), serial);
  for (std::size_t shards : {1u, 2u, 7u, 499u, 500u, 900u}) {
    EXPECT_EQ(CountPhonemesSharded(corpus, "c", shards), serial) << shards;
  }
  EXPECT_EQ(CountPhonemesParallel({}, "c"), CountPhonemesSerial({}, "c"));
}

TEST(ParallelTest, AssembleBatchMatchesSerial) {
  std::vector<TaggedSequence> corpus;
  for (const auto& o : BuildSequencesSerial(Lines(120, 3, false), BundledLexicons(),
                                            OovMode::kStrict)) {
    corpus.push_back(o.sequence);
  }
  corpus.push_back(TaggedSequence{{"AA"}, {0}, ""});
  const auto vocab = SymbolVocabulary::Build(corpus);
  std::vector<EncodedSequence> batch;
  for (const auto& s : corpus) batch.push_back(Encode(s, vocab, true));
  const auto ptable = EmbeddingTable::Initialize(vocab.size(), 32, 1);
  const auto ltable = EmbeddingTable::Initialize(kLanguageTableRows, kLanguageEmbeddingDim, 2);
  const SpeakerEmbedding spk{"s", std::vector<double>(kSpeakerEmbeddingDim, 0.5)};
  for (const SpeakerEmbedding* speaker : {static_cast<const SpeakerEmbedding*>(nullptr), &spk}) {
    const auto serial = AssembleBatchSerial(batch, ptable, ltable, speaker);
    for (int threads : {1, 4, 0}) {
      EXPECT_EQ(AssembleBatchParallel(batch, ptable, ltable, speaker, threads), serial);
    }
  }
}

TEST(ParallelTest, AssembleErrorsSurfaceInInputOrder) {
  const auto ptable = EmbeddingTable::Initialize(4, 8, 1);
  const auto ltable = EmbeddingTable::Initialize(kLanguageTableRows, kLanguageEmbeddingDim, 2);
  std::vector<EncodedSequence> batch(64, EncodedSequence{{2}, {0}});
  batch[10] = EncodedSequence{{9}, {0}};
  batch[40] = EncodedSequence{{2, 3}, {0}};
  auto first_code = [&](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kFormat;
  };
  EXPECT_EQ(first_code([&] { AssembleBatchParallel(batch, ptable, ltable, nullptr, 4); }),
            ErrorCode::kIndexOutOfRange);
  EXPECT_EQ(first_code([&] { AssembleBatchSerial(batch, ptable, ltable, nullptr); }),
            ErrorCode::kIndexOutOfRange);
}

}  // namespace
}  // namespace cstts
