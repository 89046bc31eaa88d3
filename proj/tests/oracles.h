#pragma once

// Independent reference computations used to derive and check expected
// values. Nothing here calls into the library paths under test.

#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace cstts::oracle {

// Standalone LCG draw: advance, take high 53 bits, map to [-0.1, 0.1).
inline std::vector<double> LcgValues(std::uint64_t seed, std::size_t n) {
  std::vector<double> out;
  std::uint64_t s = seed;
  for (std::size_t i = 0; i < n; ++i) {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    const double u = static_cast<double>(s >> 11) / 9007199254740992.0;  // 2^53
    out.push_back(0.2 * u - 0.1);
  }
  return out;
}

// Flatten every symbol list, keep those in the phoneme set, tally.
inline std::map<std::string, std::uint64_t> TallyPhonemes(
    const std::vector<std::vector<std::string>>& symbol_lists,
    const std::set<std::string>& phoneme_set) {
  std::vector<std::string> flat;
  for (const auto& list : symbol_lists) flat.insert(flat.end(), list.begin(), list.end());
  std::map<std::string, std::uint64_t> tally;
  for (const auto& s : flat) {
    if (phoneme_set.count(s)) ++tally[s];
  }
  return tally;
}

// Per-coordinate sum then divide, in input order.
inline std::vector<double> Mean(const std::vector<std::vector<double>>& vectors) {
  std::vector<double> sum(vectors.front().size(), 0.0);
  for (const auto& v : vectors) {
    for (std::size_t d = 0; d < v.size(); ++d) sum[d] += v[d];
  }
  for (double& x : sum) x /= static_cast<double>(vectors.size());
  return sum;
}

struct RawSyllable {
  std::string syllable;
  std::vector<std::string> initials;
  std::vector<std::string> finals;
};

// Re-reads the pinyin-to-CMU file with stringstream splitting.
inline std::vector<RawSyllable> ReadRawPinyinTable(const std::string& path) {
  std::ifstream in(path);
  std::vector<RawSyllable> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    RawSyllable row;
    std::istringstream fields(line);
    std::string rhs;
    std::getline(fields, row.syllable, '\t');
    std::getline(fields, rhs);
    const auto bar = rhs.find('|');
    std::istringstream ini(rhs.substr(0, bar)), fin(rhs.substr(bar + 1));
    for (std::string ph; ini >> ph;) row.initials.push_back(ph);
    for (std::string ph; fin >> ph;) row.finals.push_back(ph);
    out.push_back(row);
  }
  return out;
}

// Every base phoneme in a CMU-format lexicon file, alternates included,
// digits stripped.
inline std::set<std::string> RawEnglishPhonemes(const std::string& path) {
  std::ifstream in(path);
  std::set<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(";;;", 0) == 0 || line.empty()) continue;
    std::istringstream fields(line);
    std::string word, ph;
    fields >> word;
    while (fields >> ph) {
      while (!ph.empty() && ph.back() >= '0' && ph.back() <= '9') ph.pop_back();
      out.insert(ph);
    }
  }
  return out;
}

}  // namespace cstts::oracle
