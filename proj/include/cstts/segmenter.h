#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace cstts {

enum class TokenKind { kEnglishWord, kHanziChar, kPunctuation, kWhitespace, kOther };

const char* TokenKindName(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::kOther;
  // Exact span of the NFC-normalized input.
  std::string surface;
  // Offset of the first scalar of `surface`, counted in scalars of the
  // normalized text.
  std::size_t char_offset = 0;
  // The symbol downstream stages consume. Equal to `surface` except for
  // punctuation, where full-width and CJK marks fold to ASCII ("。" -> ".").
  std::string normalized;

  bool operator==(const Token&) const = default;
};

// Splits text into classified tokens. The input is NFC-normalized first;
// concatenating the surfaces of the result reproduces that normalized text.
std::vector<Token> Segment(std::string_view text);

// ASCII replacement for a CJK or full-width punctuation mark, or the mark
// itself when no ASCII equivalent exists.
std::string FoldPunctuation(char32_t cp);

}  // namespace cstts
