#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cstts {

// Closed set of base phonemes every lexicon entry must draw from. File
// format: one phoneme per line, optionally followed by whitespace and a
// class name ("vowel", "stop", ...). Only vowels may carry stress digits.
class PhonemeInventory {
 public:
  static PhonemeInventory Load(std::istream& in);

  bool Contains(std::string_view phoneme) const;
  bool IsVowel(std::string_view phoneme) const;
  // nullopt when absent, otherwise whether it is a vowel.
  std::optional<bool> Lookup(std::string_view phoneme) const;
  std::vector<std::string> Phonemes() const;
  std::size_t size() const { return is_vowel_.size(); }

 private:
  std::map<std::string, bool, std::less<>> is_vowel_;
};

// "IY1" -> ("IY", 1); "CH" -> ("CH", nullopt). Only a single trailing ASCII
// digit is split off.
std::pair<std::string_view, std::optional<int>> SplitDigit(
    std::string_view toned);

class EnglishLexicon {
 public:
  using Pronunciation = std::vector<std::string>;

  // Case-insensitive; returns nullptr when absent.
  const Pronunciation* Find(std::string_view word) const;
  std::size_t size() const { return entries_.size(); }
  const std::unordered_map<std::string, Pronunciation>& entries() const {
    return entries_;
  }

 private:
  friend EnglishLexicon LoadEnglishLexicon(std::istream&,
                                           const PhonemeInventory&);
  std::unordered_map<std::string, Pronunciation> entries_;
};

// CMU-dict line format "WORD  PH1 PH2 ...". Lines starting with ";;;" and
// blank lines are skipped, as are alternate pronunciations "WORD(2)".
EnglishLexicon LoadEnglishLexicon(std::istream& in,
                                  const PhonemeInventory& inventory);

struct SyllablePhonemes {
  std::vector<std::string> initials;
  std::vector<std::string> finals;  // never empty

  bool operator==(const SyllablePhonemes&) const = default;
};

class Pinyin2CmuTable {
 public:
  const SyllablePhonemes* Find(std::string_view syllable) const;
  bool Contains(std::string_view syllable) const {
    return Find(syllable) != nullptr;
  }
  std::size_t size() const { return entries_.size(); }
  const std::map<std::string, SyllablePhonemes, std::less<>>& entries() const {
    return entries_;
  }

 private:
  friend Pinyin2CmuTable LoadPinyin2Cmu(std::istream&,
                                        const PhonemeInventory&);
  std::map<std::string, SyllablePhonemes, std::less<>> entries_;
};

// Lines "syllable<TAB>INITIALS|FINALS", phonemes space separated.
Pinyin2CmuTable LoadPinyin2Cmu(std::istream& in,
                               const PhonemeInventory& inventory);

struct PinyinReading {
  std::string syllable;  // toneless, e.g. "cheng"
  int tone = 0;          // 1..6

  std::string ToString() const;
  bool operator==(const PinyinReading&) const = default;
};

class PinyinLexicon {
 public:
  const PinyinReading* Find(char32_t hanzi) const;
  std::size_t size() const { return entries_.size(); }
  const std::unordered_map<char32_t, PinyinReading>& entries() const {
    return entries_;
  }

 private:
  friend PinyinLexicon LoadPinyinLexicon(std::istream&,
                                         const Pinyin2CmuTable*);
  std::unordered_map<char32_t, PinyinReading> entries_;
};

// Lines "字<TAB>syllable+tone". The first reading of a repeated hanzi wins.
// When `cross_check` is given, every syllable must be one of its keys.
PinyinLexicon LoadPinyinLexicon(std::istream& in,
                                const Pinyin2CmuTable* cross_check = nullptr);

struct LexiconPaths {
  std::filesystem::path inventory;
  std::filesystem::path english;
  std::filesystem::path pinyin;
  std::filesystem::path pinyin2cmu;

  static LexiconPaths InDirectory(const std::filesystem::path& dir);
};

// Directory holding the bundled lexicons. CSTTS_DATA_DIR in the environment
// overrides the compiled-in location.
std::filesystem::path DefaultDataDir();

// Raw bytes of the four resources. Kept separate from parsing so the
// version tag is a function of file contents only.
struct LexiconSources {
  std::string inventory;
  std::string english;
  std::string pinyin;
  std::string pinyin2cmu;

  static LexiconSources Read(const LexiconPaths& paths);
};

class LexiconSet {
 public:
  static LexiconSet FromSources(const LexiconSources& sources);
  static LexiconSet FromFiles(const LexiconPaths& paths);

  const PhonemeInventory& inventory() const { return inventory_; }
  const EnglishLexicon& english() const { return english_; }
  const PinyinLexicon& pinyin() const { return pinyin_; }
  const Pinyin2CmuTable& pinyin2cmu() const { return pinyin2cmu_; }
  // Hex SHA-256 over the four source streams.
  const std::string& version_tag() const { return version_tag_; }

 private:
  LexiconSet() = default;

  PhonemeInventory inventory_;
  EnglishLexicon english_;
  PinyinLexicon pinyin_;
  Pinyin2CmuTable pinyin2cmu_;
  std::string version_tag_;
};

}  // namespace cstts
