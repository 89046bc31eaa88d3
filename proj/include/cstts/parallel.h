#pragma once

// Batch kernels over independent utterances. Each *Parallel function has a
// *Serial counterpart with identical results; the serial versions are the
// reference the tests and benchmarks compare against.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cstts/conditioning.h"
#include "cstts/corpus_stats.h"
#include "cstts/errors.h"
#include "cstts/sequence.h"

namespace cstts {

struct SequenceOutcome {
  TaggedSequence sequence;
  std::vector<std::string> warnings;
  std::optional<Error> error;  // set when conversion failed

  bool ok() const { return !error.has_value(); }
};

// `threads` <= 0 means the OpenMP default. Output order always matches input.
std::vector<SequenceOutcome> BuildSequencesSerial(std::span<const std::string> lines,
                                                  const LexiconSet& lexicons, OovMode mode);
std::vector<SequenceOutcome> BuildSequencesParallel(std::span<const std::string> lines,
                                                    const LexiconSet& lexicons,
                                                    OovMode mode, int threads = 0);

// The parallel version counts `shards` contiguous slices independently and
// merges them in shard order.
FrequencyTable CountPhonemesSerial(std::span<const TaggedSequence> corpus, std::string label);
FrequencyTable CountPhonemesParallel(std::span<const TaggedSequence> corpus,
                                     std::string label, int threads = 0);
FrequencyTable CountPhonemesSharded(std::span<const TaggedSequence> corpus,
                                    std::string label, std::size_t shards);

// Embeds each encoded utterance, attaching `speaker` when given.
std::vector<ConditionedMatrix> AssembleBatchSerial(std::span<const EncodedSequence> batch,
                                                   const EmbeddingTable& phoneme_table,
                                                   const EmbeddingTable& language_table,
                                                   const SpeakerEmbedding* speaker);
std::vector<ConditionedMatrix> AssembleBatchParallel(std::span<const EncodedSequence> batch,
                                                     const EmbeddingTable& phoneme_table,
                                                     const EmbeddingTable& language_table,
                                                     const SpeakerEmbedding* speaker,
                                                     int threads = 0);

int MaxThreads();

}  // namespace cstts
