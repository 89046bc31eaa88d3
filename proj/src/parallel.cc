#include "cstts/parallel.h"

#include <omp.h>

#include <exception>

namespace cstts {
namespace {

int ResolveThreads(int threads) { return threads > 0 ? threads : omp_get_max_threads(); }

SequenceOutcome BuildOne(const std::string& line, const LexiconSet& lexicons, OovMode mode) {
  SequenceOutcome outcome;
  try {
    outcome.sequence = BuildSequence(line, lexicons, mode, &outcome.warnings);
  } catch (const Error& e) {
    outcome.sequence = TaggedSequence{{}, {}, line};
    outcome.error = e;
  }
  return outcome;
}

ConditionedMatrix AssembleOne(const EncodedSequence& enc, const EmbeddingTable& phoneme_table,
                              const EmbeddingTable& language_table,
                              const SpeakerEmbedding* speaker) {
  ConditionedMatrix m =
      EmbedSequence(enc.symbol_ids, enc.lang_tokens, phoneme_table, language_table);
  return speaker != nullptr ? AttachSpeaker(m, *speaker) : m;
}

}  // namespace

int MaxThreads() { return omp_get_max_threads(); }

std::vector<SequenceOutcome> BuildSequencesSerial(std::span<const std::string> lines,
                                                  const LexiconSet& lexicons, OovMode mode) {
  std::vector<SequenceOutcome> out;
  out.reserve(lines.size());
  for (const std::string& line : lines) out.push_back(BuildOne(line, lexicons, mode));
  return out;
}

std::vector<SequenceOutcome> BuildSequencesParallel(std::span<const std::string> lines,
                                                    const LexiconSet& lexicons,
                                                    OovMode mode, int threads) {
  std::vector<SequenceOutcome> out(lines.size());
  const auto n = static_cast<std::ptrdiff_t>(lines.size());
#pragma omp parallel for schedule(dynamic, 64) num_threads(ResolveThreads(threads))
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] =
        BuildOne(lines[static_cast<std::size_t>(i)], lexicons, mode);
  }
  return out;
}

FrequencyTable CountPhonemesSerial(std::span<const TaggedSequence> corpus, std::string label) {
  return CountPhonemes(corpus, std::move(label));
}

FrequencyTable CountPhonemesSharded(std::span<const TaggedSequence> corpus,
                                    std::string label, std::size_t shards) {
  if (shards == 0) shards = 1;
  std::vector<FrequencyTable> partial(shards);
  const std::size_t chunk = (corpus.size() + shards - 1) / shards;
  const auto n = static_cast<std::ptrdiff_t>(shards);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t s = 0; s < n; ++s) {
    const std::size_t begin = std::min(corpus.size(), static_cast<std::size_t>(s) * chunk);
    const std::size_t end = std::min(corpus.size(), begin + chunk);
    partial[static_cast<std::size_t>(s)] =
        CountPhonemes(corpus.subspan(begin, end - begin), {});
  }
  FrequencyTable merged(std::move(label));
  for (const FrequencyTable& t : partial) merged.Merge(t);
  return merged;
}

FrequencyTable CountPhonemesParallel(std::span<const TaggedSequence> corpus,
                                     std::string label, int threads) {
  return CountPhonemesSharded(corpus, std::move(label),
                              static_cast<std::size_t>(ResolveThreads(threads)));
}

std::vector<ConditionedMatrix> AssembleBatchSerial(std::span<const EncodedSequence> batch,
                                                   const EmbeddingTable& phoneme_table,
                                                   const EmbeddingTable& language_table,
                                                   const SpeakerEmbedding* speaker) {
  std::vector<ConditionedMatrix> out;
  out.reserve(batch.size());
  for (const auto& enc : batch) {
    out.push_back(AssembleOne(enc, phoneme_table, language_table, speaker));
  }
  return out;
}

std::vector<ConditionedMatrix> AssembleBatchParallel(std::span<const EncodedSequence> batch,
                                                     const EmbeddingTable& phoneme_table,
                                                     const EmbeddingTable& language_table,
                                                     const SpeakerEmbedding* speaker,
                                                     int threads) {
  std::vector<std::optional<ConditionedMatrix>> slots(batch.size());
  std::vector<std::exception_ptr> errors(batch.size());
  const auto n = static_cast<std::ptrdiff_t>(batch.size());
#pragma omp parallel for schedule(dynamic, 8) num_threads(ResolveThreads(threads))
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      slots[k].emplace(AssembleOne(batch[k], phoneme_table, language_table, speaker));
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  std::vector<ConditionedMatrix> out;
  out.reserve(batch.size());
  for (std::size_t k = 0; k < slots.size(); ++k) {
    if (errors[k]) std::rethrow_exception(errors[k]);
    out.push_back(std::move(*slots[k]));
  }
  return out;
}

}  // namespace cstts
