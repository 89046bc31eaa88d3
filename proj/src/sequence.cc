#include "cstts/sequence.h"

#include <algorithm>

#include "cstts/errors.h"
#include "cstts/segmenter.h"
#include "digest.h"

namespace cstts {
namespace {

int LangTokenFor(Language lang) {
  return lang == Language::kEnglish ? kEnglishLangToken : kMandarinLangToken;
}

void AppendPhonemes(const std::vector<TonedPhoneme>& phonemes, TaggedSequence* seq) {
  for (const TonedPhoneme& ph : phonemes) {
    const int token = LangTokenFor(ph.lang);
    seq->symbols.push_back(ph.base);
    seq->lang_tokens.push_back(token);
    if (ph.digit) {
      seq->symbols.push_back(std::to_string(*ph.digit));
      seq->lang_tokens.push_back(token);
    }
  }
}

}  // namespace

bool IsDigitSymbol(std::string_view symbol) {
  return symbol.size() == 1 && symbol[0] >= '0' && symbol[0] <= '9';
}

bool IsPhonemeSymbol(std::string_view symbol) {
  return !symbol.empty() && std::all_of(symbol.begin(), symbol.end(),
                                        [](char c) { return c >= 'A' && c <= 'Z'; });
}

std::optional<std::string> FindAlignmentViolation(const TaggedSequence& seq) {
  if (seq.symbols.size() != seq.lang_tokens.size()) {
    return "symbols/lang_tokens length mismatch (" + std::to_string(seq.symbols.size()) +
           " vs " + std::to_string(seq.lang_tokens.size()) + ")";
  }
  for (std::size_t i = 0; i < seq.symbols.size(); ++i) {
    const std::string& sym = seq.symbols[i];
    const int token = seq.lang_tokens[i];
    const std::string at = " at position " + std::to_string(i);
    if (token < kEnglishLangToken || token > kNeutralLangToken) {
      return "language token out of range" + at;
    }
    if (IsDigitSymbol(sym)) {
      if (i == 0 || !IsPhonemeSymbol(seq.symbols[i - 1]) ||
          seq.lang_tokens[i - 1] != token) {
        return "digit not preceded by a same-language phoneme" + at;
      }
      if (token == kNeutralLangToken) return "digit carries token 2" + at;
    } else if (IsPhonemeSymbol(sym)) {
      if (token == kNeutralLangToken) return "phoneme carries token 2" + at;
    } else if (token != kNeutralLangToken) {
      return "punctuation without token 2" + at;
    }
  }
  return std::nullopt;
}

TaggedSequence BuildSequence(std::string_view text, const LexiconSet& lexicons,
                             OovMode mode, std::vector<std::string>* warnings) {
  TaggedSequence seq;
  seq.source_text = std::string(text);
  for (const Token& tok : Segment(text)) {
    switch (tok.kind) {
      case TokenKind::kEnglishWord:
        AppendPhonemes(G2pEnglish(tok, lexicons.english(), mode, warnings), &seq);
        break;
      case TokenKind::kHanziChar:
        AppendPhonemes(G2pHanzi(tok, lexicons), &seq);
        break;
      case TokenKind::kPunctuation:
        seq.symbols.push_back(tok.normalized);
        seq.lang_tokens.push_back(kNeutralLangToken);
        break;
      case TokenKind::kWhitespace:
        break;
      case TokenKind::kOther:
        if (mode == OovMode::kStrict) {
          throw Error(ErrorCode::kUnsupportedCharacter,
                      "'" + tok.surface + "' at offset " + std::to_string(tok.char_offset));
        }
        if (warnings != nullptr) {
          warnings->push_back("skipped unsupported character '" + tok.surface + "'");
        }
        break;
    }
  }
  return seq;
}

SymbolVocabulary::SymbolVocabulary(std::vector<std::string> sorted_unique)
    : symbols_(std::move(sorted_unique)) {
  std::string framed;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    ids_.emplace(symbols_[i], static_cast<int>(i) + 2);
    internal::AppendLengthPrefixed(symbols_[i], &framed);
  }
  version_tag_ = internal::Sha256Hex(framed);
}

SymbolVocabulary SymbolVocabulary::Build(std::span<const TaggedSequence> corpus) {
  if (corpus.empty()) throw Error(ErrorCode::kEmptyCorpus, "no sequences");
  std::vector<std::string> all;
  for (const TaggedSequence& seq : corpus) {
    all.insert(all.end(), seq.symbols.begin(), seq.symbols.end());
  }
  return FromSymbols(std::move(all));
}

SymbolVocabulary SymbolVocabulary::FromSymbols(std::vector<std::string> symbols) {
  std::sort(symbols.begin(), symbols.end());
  symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
  for (const auto& s : symbols) {
    if (s.empty() || s == kEosSymbol) {
      throw Error(ErrorCode::kFormat, "reserved or empty symbol '" + s + "'");
    }
  }
  return SymbolVocabulary(std::move(symbols));
}

SymbolVocabulary SymbolVocabulary::FromIds(const std::map<std::string, int>& ids) {
  std::vector<std::string> symbols;
  symbols.reserve(ids.size());
  for (const auto& [symbol, id] : ids) symbols.push_back(symbol);
  SymbolVocabulary vocab = FromSymbols(std::move(symbols));
  for (const auto& [symbol, id] : ids) {
    if (vocab.Id(symbol) != id) {
      throw Error(ErrorCode::kFormat, "vocabulary id for '" + symbol +
                                          "' is not in sorted order from 2");
    }
  }
  return vocab;
}

std::optional<int> SymbolVocabulary::Id(std::string_view symbol) const {
  auto it = ids_.find(symbol);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

const std::string& SymbolVocabulary::Symbol(int id) const {
  static const std::string kEos(kEosSymbol);
  if (id == kEosId) return kEos;
  if (id < 2 || static_cast<std::size_t>(id - 2) >= symbols_.size()) {
    throw Error(ErrorCode::kUnknownId, std::to_string(id));
  }
  return symbols_[static_cast<std::size_t>(id - 2)];
}

std::map<std::string, int> SymbolVocabulary::symbol_ids() const {
  return {ids_.begin(), ids_.end()};
}

EncodedSequence Encode(const TaggedSequence& seq, const SymbolVocabulary& vocab,
                       bool append_eos) {
  if (seq.symbols.size() != seq.lang_tokens.size()) {
    throw Error(ErrorCode::kLengthMismatch, "symbols and lang_tokens differ in length");
  }
  EncodedSequence out;
  out.symbol_ids.reserve(seq.size() + 1);
  for (const std::string& sym : seq.symbols) {
    const std::optional<int> id = vocab.Id(sym);
    if (!id) throw Error(ErrorCode::kUnknownSymbol, sym);
    out.symbol_ids.push_back(*id);
  }
  out.lang_tokens = seq.lang_tokens;
  if (append_eos) {
    out.symbol_ids.push_back(SymbolVocabulary::kEosId);
    out.lang_tokens.push_back(kNeutralLangToken);
  }
  return out;
}

std::vector<std::string> Decode(std::span<const int> symbol_ids,
                                const SymbolVocabulary& vocab) {
  std::vector<std::string> out;
  out.reserve(symbol_ids.size());
  for (int id : symbol_ids) out.push_back(vocab.Symbol(id));
  return out;
}

}  // namespace cstts
