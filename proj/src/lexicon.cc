#include "cstts/lexicon.h"

#include <cstdlib>
#include <fstream>
#include <istream>
#include <sstream>

#include "cstts/errors.h"
#include "cstts/utf8.h"
#include "digest.h"

#ifndef CSTTS_DATA_DIR
#define CSTTS_DATA_DIR "data"
#endif

namespace cstts {
namespace {

// getline that also drops a trailing '\r'.
bool ReadLine(std::istream& in, std::string* line) {
  if (!std::getline(in, *line)) return false;
  if (!line->empty() && line->back() == '\r') line->pop_back();
  return true;
}

std::vector<std::string> SplitWhitespace(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string Slurp(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Line iteration over an in-memory buffer; drops a trailing '\r'.
class LineCursor {
 public:
  explicit LineCursor(std::string_view text) : rest_(text) {}

  bool Next(std::string_view* line) {
    if (rest_.empty()) return false;
    const std::size_t nl = rest_.find('\n');
    *line = rest_.substr(0, nl);
    rest_.remove_prefix(nl == std::string_view::npos ? rest_.size() : nl + 1);
    if (!line->empty() && line->back() == '\r') line->remove_suffix(1);
    return true;
  }

 private:
  std::string_view rest_;
};

void SplitFields(std::string_view s, std::vector<std::string_view>* out) {
  out->clear();
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out->push_back(s.substr(i, j - i));
    i = j;
  }
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

bool IsBlank(std::string_view s) { return Trim(s).empty(); }

bool IsLowerAlpha(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < 'a' || c > 'z') return false;
  }
  return true;
}

// "WORD(2)" style alternate-pronunciation keys.
bool IsAlternateKey(std::string_view word) {
  if (word.size() < 4 || word.back() != ')') return false;
  const std::size_t open = word.rfind('(');
  if (open == std::string_view::npos || open == 0 || open + 2 > word.size() - 1) {
    return false;
  }
  for (std::size_t i = open + 1; i + 1 < word.size(); ++i) {
    if (word[i] < '0' || word[i] > '9') return false;
  }
  return true;
}

std::string AsciiUpper(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  }
  return out;
}

std::vector<std::string> ParsePhonemeGroup(std::string_view group,
                                           const PhonemeInventory& inventory,
                                           std::size_t line_no) {
  std::vector<std::string> phonemes = SplitWhitespace(group);
  for (const auto& ph : phonemes) {
    if (!inventory.Contains(ph)) {
      throw LexiconLineError(ErrorCode::kMalformedLexiconLine, line_no,
                             "unknown phoneme '" + ph + "'");
    }
  }
  return phonemes;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

PhonemeInventory PhonemeInventory::Load(std::istream& in) {
  PhonemeInventory inv;
  std::string line;
  std::size_t line_no = 0;
  while (ReadLine(in, &line)) {
    ++line_no;
    if (IsBlank(line)) continue;
    auto fields = SplitWhitespace(line);
    if (fields.size() > 2) {
      throw LexiconLineError(ErrorCode::kMalformedLexiconLine, line_no,
                             "expected 'PHONEME [class]'");
    }
    const bool vowel = fields.size() == 2 && fields[1] == "vowel";
    inv.is_vowel_.emplace(fields[0], vowel);
  }
  return inv;
}

bool PhonemeInventory::Contains(std::string_view phoneme) const {
  return is_vowel_.find(phoneme) != is_vowel_.end();
}

bool PhonemeInventory::IsVowel(std::string_view phoneme) const {
  auto it = is_vowel_.find(phoneme);
  return it != is_vowel_.end() && it->second;
}

std::optional<bool> PhonemeInventory::Lookup(std::string_view phoneme) const {
  auto it = is_vowel_.find(phoneme);
  if (it == is_vowel_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> PhonemeInventory::Phonemes() const {
  std::vector<std::string> out;
  out.reserve(is_vowel_.size());
  for (const auto& [ph, vowel] : is_vowel_) out.push_back(ph);
  return out;
}

std::pair<std::string_view, std::optional<int>> SplitDigit(
    std::string_view toned) {
  if (toned.size() >= 2 && toned.back() >= '0' && toned.back() <= '9') {
    return {toned.substr(0, toned.size() - 1), toned.back() - '0'};
  }
  return {toned, std::nullopt};
}

const EnglishLexicon::Pronunciation* EnglishLexicon::Find(
    std::string_view word) const {
  auto it = entries_.find(AsciiUpper(word));
  return it == entries_.end() ? nullptr : &it->second;
}

EnglishLexicon LoadEnglishLexicon(std::istream& in,
                                  const PhonemeInventory& inventory) {
  const std::string text = Slurp(in);
  EnglishLexicon lex;
  lex.entries_.reserve(text.size() / 32);
  LineCursor lines(text);
  std::string_view line;
  std::vector<std::string_view> fields;
  std::size_t line_no = 0;
  while (lines.Next(&line)) {
    ++line_no;
    if (IsBlank(line) || line.starts_with(";;;")) continue;
    SplitFields(line, &fields);
    if (fields.size() < 2) {
      throw LexiconLineError(ErrorCode::kMalformedLexiconLine, line_no,
                             "expected a word followed by phonemes");
    }
    if (IsAlternateKey(fields[0])) continue;
    EnglishLexicon::Pronunciation pron;
    pron.reserve(fields.size() - 1);
    for (std::size_t i = 1; i < fields.size(); ++i) {
      auto [base, digit] = SplitDigit(fields[i]);
      const auto kind = inventory.Lookup(base);
      if (!kind) {
        throw LexiconLineError(ErrorCode::kMalformedLexiconLine, line_no,
                               "unknown phoneme '" + std::string(fields[i]) + "'");
      }
      if (digit && (*digit > 2 || !*kind)) {
        throw LexiconLineError(ErrorCode::kMalformedLexiconLine, line_no,
                               "invalid stress mark on '" + std::string(fields[i]) + "'");
      }
      pron.emplace_back(fields[i]);
    }
    lex.entries_.try_emplace(AsciiUpper(fields[0]), std::move(pron));
  }
  return lex;
}

const SyllablePhonemes* Pinyin2CmuTable::Find(std::string_view syllable) const {
  auto it = entries_.find(syllable);
  return it == entries_.end() ? nullptr : &it->second;
}

Pinyin2CmuTable LoadPinyin2Cmu(std::istream& in,
                               const PhonemeInventory& inventory) {
  Pinyin2CmuTable table;
  std::string line;
  std::size_t line_no = 0;
  while (ReadLine(in, &line)) {
    ++line_no;
    if (IsBlank(line)) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw LexiconLineError(ErrorCode::kMalformedLexiconLine, line_no,
                             "expected 'syllable<TAB>INITIALS|FINALS'");
    }
    const std::string_view syllable = Trim(std::string_view(line).substr(0, tab));
    const std::string_view rhs = std::string_view(line).substr(tab + 1);
    const std::size_t bar = rhs.find('|');
    if (!IsLowerAlpha(syllable) || bar == std::string_view::npos ||
        rhs.find('|', bar + 1) != std::string_view::npos) {
      throw LexiconLineError(ErrorCode::kMalformedLexiconLine, line_no,
                             "expected 'syllable<TAB>INITIALS|FINALS'");
    }
    SyllablePhonemes entry;
    entry.initials = ParsePhonemeGroup(rhs.substr(0, bar), inventory, line_no);
    entry.finals = ParsePhonemeGroup(rhs.substr(bar + 1), inventory, line_no);
    if (entry.finals.empty()) {
      throw LexiconLineError(ErrorCode::kEmptyFinal, line_no,
                             "syllable '" + std::string(syllable) +
                                 "' has no final phonemes");
    }
    if (!table.entries_.emplace(std::string(syllable), std::move(entry)).second) {
      throw LexiconLineError(ErrorCode::kMalformedLexiconLine, line_no,
                             "duplicate syllable '" + std::string(syllable) + "'");
    }
  }
  return table;
}

std::string PinyinReading::ToString() const {
  return syllable + std::to_string(tone);
}

const PinyinReading* PinyinLexicon::Find(char32_t hanzi) const {
  auto it = entries_.find(hanzi);
  return it == entries_.end() ? nullptr : &it->second;
}

PinyinLexicon LoadPinyinLexicon(std::istream& in,
                                const Pinyin2CmuTable* cross_check) {
  PinyinLexicon lex;
  std::string line;
  std::size_t line_no = 0;
  while (ReadLine(in, &line)) {
    ++line_no;
    if (IsBlank(line)) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw LexiconLineError(ErrorCode::kMalformedLexiconLine, line_no,
                             "expected 'hanzi<TAB>pinyin'");
    }
    const std::u32string key = utf8::Decode(Trim(std::string_view(line).substr(0, tab)));
    if (key.size() != 1 || !utf8::IsHanzi(key[0])) {
      throw LexiconLineError(ErrorCode::kMalformedLexiconLine, line_no,
                             "key must be a single hanzi");
    }
    const std::string_view value = Trim(std::string_view(line).substr(tab + 1));
    if (value.size() < 2 || value.back() < '1' || value.back() > '6' ||
        !IsLowerAlpha(value.substr(0, value.size() - 1))) {
      throw LexiconLineError(ErrorCode::kMalformedLexiconLine, line_no,
                             "pinyin '" + std::string(value) +
                                 "' must be lowercase letters plus tone 1-6");
    }
    PinyinReading reading{std::string(value.substr(0, value.size() - 1)),
                          value.back() - '0'};
    if (cross_check != nullptr && !cross_check->Contains(reading.syllable)) {
      throw LexiconLineError(ErrorCode::kUnknownSyllable, line_no,
                             "syllable '" + reading.syllable +
                                 "' missing from pinyin-to-CMU table");
    }
    lex.entries_.try_emplace(key[0], std::move(reading));
  }
  return lex;
}

LexiconPaths LexiconPaths::InDirectory(const std::filesystem::path& dir) {
  return LexiconPaths{dir / "phoneme_inventory.txt", dir / "cmudict.dict",
                      dir / "pinyin_lexicon.tsv", dir / "pinyin2cmu.tsv"};
}

std::filesystem::path DefaultDataDir() {
  if (const char* env = std::getenv("CSTTS_DATA_DIR"); env != nullptr && *env) {
    return env;
  }
  return CSTTS_DATA_DIR;
}

LexiconSources LexiconSources::Read(const LexiconPaths& paths) {
  return LexiconSources{ReadFile(paths.inventory), ReadFile(paths.english),
                        ReadFile(paths.pinyin), ReadFile(paths.pinyin2cmu)};
}

LexiconSet LexiconSet::FromSources(const LexiconSources& sources) {
  LexiconSet set;
  {
    std::istringstream in(sources.inventory);
    set.inventory_ = PhonemeInventory::Load(in);
  }
  {
    std::istringstream in(sources.english);
    set.english_ = LoadEnglishLexicon(in, set.inventory_);
  }
  {
    std::istringstream in(sources.pinyin2cmu);
    set.pinyin2cmu_ = LoadPinyin2Cmu(in, set.inventory_);
  }
  {
    std::istringstream in(sources.pinyin);
    set.pinyin_ = LoadPinyinLexicon(in, &set.pinyin2cmu_);
  }
  std::string framed;
  framed.reserve(sources.inventory.size() + sources.english.size() +
                 sources.pinyin.size() + sources.pinyin2cmu.size() + 32);
  for (const std::string* part : {&sources.inventory, &sources.english,
                                  &sources.pinyin, &sources.pinyin2cmu}) {
    internal::AppendLengthPrefixed(*part, &framed);
  }
  set.version_tag_ = internal::Sha256Hex(framed);
  return set;
}

LexiconSet LexiconSet::FromFiles(const LexiconPaths& paths) {
  return FromSources(LexiconSources::Read(paths));
}

}  // namespace cstts
