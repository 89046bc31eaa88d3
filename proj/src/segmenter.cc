#include "cstts/segmenter.h"

#include <unicode/uchar.h>

#include "cstts/utf8.h"

namespace cstts {
namespace {

bool IsAsciiLetter(char32_t c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
}

bool IsAsciiPunct(char32_t c) {
  return (c >= 0x21 && c <= 0x2F) || (c >= 0x3A && c <= 0x40) ||
         (c >= 0x5B && c <= 0x60) || (c >= 0x7B && c <= 0x7E);
}

bool IsFullWidthPunct(char32_t c) {
  return c >= 0xFF01 && c <= 0xFF5E && IsAsciiPunct(c - 0xFEE0);
}

bool IsPunct(char32_t c) {
  return IsAsciiPunct(c) || IsFullWidthPunct(c) ||
         u_ispunct(static_cast<UChar32>(c));
}

bool IsSpace(char32_t c) { return u_isUWhiteSpace(static_cast<UChar32>(c)); }

}  // namespace

const char* TokenKindName(TokenKind kind) {
  switch (kind) {
    case TokenKind::kEnglishWord: return "EnglishWord";
    case TokenKind::kHanziChar: return "HanziChar";
    case TokenKind::kPunctuation: return "Punctuation";
    case TokenKind::kWhitespace: return "Whitespace";
    case TokenKind::kOther: return "Other";
  }
  return "Other";
}

std::string FoldPunctuation(char32_t cp) {
  if (IsFullWidthPunct(cp)) return std::string(1, static_cast<char>(cp - 0xFEE0));
  switch (cp) {
    case 0x3002:  // 。
    case 0xFF61:  // ｡
    case 0x2026:  // …
      return ".";
    case 0x3001:  // 、
    case 0xFF64:  // ､
      return ",";
    case 0x201C: case 0x201D:  // “ ”
    case 0x300C: case 0x300D:  // 「 」
    case 0x300E: case 0x300F:  // 『 』
    case 0x300A: case 0x300B:  // 《 》
    case 0x3008: case 0x3009:  // 〈 〉
      return "\"";
    case 0x2018: case 0x2019:  // ‘ ’
      return "'";
    case 0x3010: case 0x3014:  // 【 〔
      return "(";
    case 0x3011: case 0x3015:  // 】 〕
      return ")";
    case 0x2013: case 0x2014:  // en and em dash
      return "-";
    default:
      return utf8::Encode(cp);
  }
}

std::vector<Token> Segment(std::string_view text) {
  const std::u32string cps = utf8::Decode(utf8::NormalizeNfc(text));
  std::vector<Token> tokens;
  auto emit = [&](TokenKind kind, std::size_t begin, std::size_t end) {
    Token tok;
    tok.kind = kind;
    tok.surface = utf8::Encode(std::u32string_view(cps).substr(begin, end - begin));
    tok.char_offset = begin;
    tok.normalized =
        kind == TokenKind::kPunctuation ? FoldPunctuation(cps[begin]) : tok.surface;
    tokens.push_back(std::move(tok));
  };

  std::size_t i = 0;
  while (i < cps.size()) {
    const char32_t c = cps[i];
    if (IsAsciiLetter(c) || c == '\'') {
      std::size_t j = i;
      bool has_letter = false;
      while (j < cps.size() && (IsAsciiLetter(cps[j]) || cps[j] == '\'')) {
        has_letter = has_letter || IsAsciiLetter(cps[j]);
        ++j;
      }
      if (has_letter) {
        emit(TokenKind::kEnglishWord, i, j);
      } else {
        for (std::size_t k = i; k < j; ++k) emit(TokenKind::kPunctuation, k, k + 1);
      }
      i = j;
    } else if (IsSpace(c)) {
      std::size_t j = i + 1;
      while (j < cps.size() && IsSpace(cps[j])) ++j;
      emit(TokenKind::kWhitespace, i, j);
      i = j;
    } else if (utf8::IsHanzi(c)) {
      emit(TokenKind::kHanziChar, i, i + 1);
      ++i;
    } else if (IsPunct(c)) {
      emit(TokenKind::kPunctuation, i, i + 1);
      ++i;
    } else {
      emit(TokenKind::kOther, i, i + 1);
      ++i;
    }
  }
  return tokens;
}

}  // namespace cstts
