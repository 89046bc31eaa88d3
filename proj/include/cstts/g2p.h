#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cstts/lexicon.h"
#include "cstts/segmenter.h"

namespace cstts {

enum class Language { kEnglish, kMandarin };

// What to do with words missing from the English lexicon.
enum class OovMode { kStrict, kSkipOov };

// A base phoneme with its stress (English, 0-2) or tone (Mandarin, 1-6)
// digit still attached.
struct TonedPhoneme {
  std::string base;
  std::optional<int> digit;
  Language lang = Language::kEnglish;

  bool operator==(const TonedPhoneme&) const = default;
};

// Dictionary lookup of an EnglishWord token. In kSkipOov mode a miss yields
// an empty list and, when `warnings` is given, a message appended to it.
std::vector<TonedPhoneme> G2pEnglish(const Token& word,
                                     const EnglishLexicon& lexicon, OovMode mode,
                                     std::vector<std::string>* warnings = nullptr);

// hanzi -> pinyin -> CMU phonemes. Initials carry no digit; every phoneme of
// the final carries the syllable's tone.
std::vector<TonedPhoneme> G2pHanzi(const Token& hanzi, const PinyinLexicon& pinyin,
                                   const Pinyin2CmuTable& table);
std::vector<TonedPhoneme> G2pHanzi(const Token& hanzi, const LexiconSet& lexicons);

}  // namespace cstts
