#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cstts/g2p.h"
#include "cstts/lexicon.h"

namespace cstts {

// Per-symbol language IDs of the second input stream.
inline constexpr int kEnglishLangToken = 0;
inline constexpr int kMandarinLangToken = 1;
inline constexpr int kNeutralLangToken = 2;  // punctuation, EOS

// Phoneme stream and language-token stream, always the same length.
struct TaggedSequence {
  std::vector<std::string> symbols;
  std::vector<int> lang_tokens;
  std::string source_text;

  std::size_t size() const { return symbols.size(); }
  bool operator==(const TaggedSequence&) const = default;
};

bool IsDigitSymbol(std::string_view symbol);    // "0".."9"
bool IsPhonemeSymbol(std::string_view symbol);  // [A-Z]+

// Returns a description of the first broken alignment rule, if any: equal
// lengths, tokens in {0,1,2}, every digit preceded by a same-language
// phoneme, token 2 exactly on non-phoneme non-digit symbols.
std::optional<std::string> FindAlignmentViolation(const TaggedSequence& seq);

// segment -> per-token G2P -> flatten. Digits become their own symbols after
// the phoneme they were attached to. Whitespace emits nothing; Other tokens
// raise UnsupportedCharacter in strict mode and are dropped otherwise.
TaggedSequence BuildSequence(std::string_view text, const LexiconSet& lexicons,
                             OovMode mode = OovMode::kStrict,
                             std::vector<std::string>* warnings = nullptr);

struct EncodedSequence {
  std::vector<int> symbol_ids;
  std::vector<int> lang_tokens;

  bool operator==(const EncodedSequence&) const = default;
};

// Symbol <-> id table. Ids 0 and 1 are PAD and EOS; the remaining symbols
// are sorted bytewise and numbered from 2.
class SymbolVocabulary {
 public:
  static constexpr int kPadId = 0;
  static constexpr int kEosId = 1;
  static constexpr std::string_view kEosSymbol = "<eos>";

  // Throws EmptyCorpus when `corpus` is empty.
  static SymbolVocabulary Build(std::span<const TaggedSequence> corpus);
  // Duplicates are collapsed.
  static SymbolVocabulary FromSymbols(std::vector<std::string> symbols);
  // Inverse of symbol_ids(); ids must be exactly 2..N+1 in sorted symbol order.
  static SymbolVocabulary FromIds(const std::map<std::string, int>& ids);

  std::optional<int> Id(std::string_view symbol) const;
  // "<eos>" for EOS; throws UnknownId for PAD and unassigned ids.
  const std::string& Symbol(int id) const;

  // Including the two reserved ids.
  std::size_t size() const { return symbols_.size() + 2; }
  const std::vector<std::string>& symbols() const { return symbols_; }
  std::map<std::string, int> symbol_ids() const;
  const std::string& version_tag() const { return version_tag_; }

 private:
  explicit SymbolVocabulary(std::vector<std::string> sorted_unique);

  std::vector<std::string> symbols_;  // id - 2 -> symbol
  std::map<std::string, int, std::less<>> ids_;
  std::string version_tag_;
};

// Throws UnknownSymbol. With `append_eos` the EOS id is added with token 2.
EncodedSequence Encode(const TaggedSequence& seq, const SymbolVocabulary& vocab,
                       bool append_eos);

std::vector<std::string> Decode(std::span<const int> symbol_ids,
                                const SymbolVocabulary& vocab);

}  // namespace cstts
