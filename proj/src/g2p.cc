#include "cstts/g2p.h"

#include <stdexcept>

#include "cstts/errors.h"
#include "cstts/utf8.h"

namespace cstts {

std::vector<TonedPhoneme> G2pEnglish(const Token& word,
                                     const EnglishLexicon& lexicon, OovMode mode,
                                     std::vector<std::string>* warnings) {
  if (word.kind != TokenKind::kEnglishWord || word.surface.empty()) {
    throw std::invalid_argument("G2pEnglish expects a non-empty EnglishWord token");
  }
  const EnglishLexicon::Pronunciation* pron = lexicon.Find(word.surface);
  if (pron == nullptr) {
    if (mode == OovMode::kStrict) throw Error(ErrorCode::kOovWord, word.surface);
    if (warnings != nullptr) warnings->push_back("skipped OOV word '" + word.surface + "'");
    return {};
  }
  std::vector<TonedPhoneme> out;
  out.reserve(pron->size());
  for (const std::string& toned : *pron) {
    auto [base, digit] = SplitDigit(toned);
    out.push_back({std::string(base), digit, Language::kEnglish});
  }
  return out;
}

std::vector<TonedPhoneme> G2pHanzi(const Token& hanzi, const PinyinLexicon& pinyin,
                                   const Pinyin2CmuTable& table) {
  const std::u32string cps = utf8::Decode(hanzi.surface);
  if (hanzi.kind != TokenKind::kHanziChar || cps.size() != 1) {
    throw std::invalid_argument("G2pHanzi expects a single HanziChar token");
  }
  const PinyinReading* reading = pinyin.Find(cps[0]);
  if (reading == nullptr) throw Error(ErrorCode::kUnknownHanzi, hanzi.surface);
  const SyllablePhonemes* syllable = table.Find(reading->syllable);
  if (syllable == nullptr) throw Error(ErrorCode::kUnknownSyllable, reading->syllable);

  std::vector<TonedPhoneme> out;
  out.reserve(syllable->initials.size() + syllable->finals.size());
  for (const auto& ph : syllable->initials) {
    out.push_back({ph, std::nullopt, Language::kMandarin});
  }
  for (const auto& ph : syllable->finals) {
    out.push_back({ph, reading->tone, Language::kMandarin});
  }
  return out;
}

std::vector<TonedPhoneme> G2pHanzi(const Token& hanzi, const LexiconSet& lexicons) {
  return G2pHanzi(hanzi, lexicons.pinyin(), lexicons.pinyin2cmu());
}

}  // namespace cstts
