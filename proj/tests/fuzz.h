#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "cstts/lexicon.h"
#include "cstts/utf8.h"

namespace cstts::fuzz {

using Rng = std::mt19937_64;

inline std::size_t Uniform(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

// Arbitrary scalars weighted towards the interesting classes: ASCII, CJK,
// full-width forms, combining marks, Hangul jamo (NFC composes them),
// astral-plane characters. Never emits surrogates.
inline std::string RandomUnicode(Rng& rng, std::size_t max_len) {
  static constexpr std::pair<char32_t, char32_t> kRanges[] = {
      {0x20, 0x7E},       {0x09, 0x0D},       {0x4E00, 0x9FFF},  {0x3000, 0x303F},
      {0xFF01, 0xFF5E},   {0x0300, 0x036F},   {0x00C0, 0x017F},  {0x1100, 0x1175},
      {0xAC00, 0xD7A3},   {0x1F300, 0x1F64F}, {0x20000, 0x2A6DF}, {0xF900, 0xFAFF},
      {0x2000, 0x206F},   {0x0041, 0x005A}};
  const std::size_t len = Uniform(rng, max_len + 1);
  std::string out;
  for (std::size_t i = 0; i < len; ++i) {
    const auto& [lo, hi] = kRanges[Uniform(rng, std::size(kRanges))];
    utf8::Append(lo + static_cast<char32_t>(Uniform(rng, hi - lo + 1)), &out);
  }
  return out;
}

// Pools of inputs the bundled lexicons fully cover.
struct CoveredPools {
  std::vector<std::string> words;  // [A-Za-z']+ keys
  std::vector<std::string> hanzi;

  explicit CoveredPools(const LexiconSet& lexicons) {
    for (const auto& [word, pron] : lexicons.english().entries()) {
      bool plain = std::any_of(word.begin(), word.end(), [](char c) { return c >= 'A' && c <= 'Z'; });
      for (char c : word) plain = plain && ((c >= 'A' && c <= 'Z') || c == '\'');
      if (plain) words.push_back(word);
    }
    std::sort(words.begin(), words.end());
    std::vector<char32_t> cps;
    for (const auto& [cp, reading] : lexicons.pinyin().entries()) cps.push_back(cp);
    std::sort(cps.begin(), cps.end());
    for (char32_t cp : cps) hanzi.push_back(utf8::Encode(cp));
  }
};

inline std::string RandomCase(Rng& rng, std::string word) {
  const auto style = Uniform(rng, 3);
  for (char& c : word) {
    if (c >= 'A' && c <= 'Z' && (style == 0 || (style == 2 && Uniform(rng, 2) == 0))) {
      c = static_cast<char>(c - 'A' + 'a');
    }
  }
  return word;
}

// Mixed English/Mandarin text built only from covered words, hanzi,
// punctuation and whitespace, so strict conversion should accept it.
inline std::string RandomCoveredText(Rng& rng, const CoveredPools& pools, std::size_t max_parts) {
  static const char* kPunct[] = {".", ",", "!", "?", ";", ":", "(", ")", "-",  "\"",
                                 "。", "，", "！", "？", "；", "：", "、", "“", "”", "…"};
  static const char* kSpace[] = {" ", "  ", "\t", "　"};
  const std::size_t parts = Uniform(rng, max_parts + 1);
  std::string out;
  bool last_was_word = false;
  for (std::size_t i = 0; i < parts; ++i) {
    switch (Uniform(rng, 4)) {
      case 0: {
        // Keep adjacent words apart so they stay separate tokens.
        if (last_was_word) out += ' ';
        out += RandomCase(rng, pools.words[Uniform(rng, pools.words.size())]);
        last_was_word = true;
        continue;
      }
      case 1: {
        const std::size_t run = 1 + Uniform(rng, 4);
        for (std::size_t k = 0; k < run; ++k) out += pools.hanzi[Uniform(rng, pools.hanzi.size())];
        break;
      }
      case 2:
        out += kPunct[Uniform(rng, std::size(kPunct))];
        break;
      default:
        out += kSpace[Uniform(rng, std::size(kSpace))];
        break;
    }
    last_was_word = false;
  }
  return out;
}

}  // namespace cstts::fuzz
