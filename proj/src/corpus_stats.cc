#include "cstts/corpus_stats.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace cstts {

void FrequencyTable::Add(std::string_view phoneme, std::uint64_t n) {
  if (n == 0) return;
  if (!IsPhonemeSymbol(phoneme)) {
    throw std::invalid_argument("not a phoneme symbol: " + std::string(phoneme));
  }
  auto it = counts_.find(phoneme);
  if (it == counts_.end()) {
    counts_.emplace(std::string(phoneme), n);
  } else {
    it->second += n;
  }
  total_ += n;
}

void FrequencyTable::Merge(const FrequencyTable& other) {
  for (const auto& [ph, n] : other.counts_) Add(ph, n);
}

std::uint64_t FrequencyTable::Count(std::string_view phoneme) const {
  auto it = counts_.find(phoneme);
  return it == counts_.end() ? 0 : it->second;
}

void AccumulatePhonemes(const TaggedSequence& seq, FrequencyTable* table) {
  for (const std::string& sym : seq.symbols) {
    if (IsPhonemeSymbol(sym)) table->Add(sym);
  }
}

FrequencyTable CountPhonemes(std::span<const TaggedSequence> corpus, std::string label) {
  FrequencyTable table(std::move(label));
  for (const TaggedSequence& seq : corpus) AccumulatePhonemes(seq, &table);
  return table;
}

CoverageDiff CompareCoverage(const FrequencyTable& a, const FrequencyTable& b) {
  CoverageDiff diff;
  for (const auto& [ph, n] : a.counts()) {
    (b.Count(ph) > 0 ? diff.shared : diff.only_in_a).insert(ph);
  }
  for (const auto& [ph, n] : b.counts()) {
    if (a.Count(ph) == 0) diff.only_in_b.insert(ph);
  }
  return diff;
}

namespace {

std::string RightTrim(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

std::string Pad(const std::string& s, std::size_t width, bool right_align) {
  if (s.size() >= width) return s;
  const std::string fill(width - s.size(), ' ');
  return right_align ? fill + s : s + fill;
}

}  // namespace

std::string RenderTable(std::span<const FrequencyTable> tables) {
  if (tables.empty()) throw std::invalid_argument("RenderTable needs at least one table");

  std::set<std::string> all;
  for (const auto& t : tables) {
    for (const auto& [ph, n] : t.counts()) all.insert(ph);
  }
  std::vector<std::string> rows(all.begin(), all.end());
  const FrequencyTable& first = tables.front();
  std::stable_sort(rows.begin(), rows.end(), [&](const auto& x, const auto& y) {
    return first.Count(x) > first.Count(y);
  });

  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"Phoneme"};
  for (const auto& t : tables) header.push_back(t.label());
  cells.push_back(header);
  for (const auto& ph : rows) {
    std::vector<std::string> line{ph};
    for (const auto& t : tables) {
      const std::uint64_t n = t.Count(ph);
      line.push_back(n == 0 ? "" : std::to_string(n));
    }
    cells.push_back(std::move(line));
  }

  std::vector<std::size_t> widths(header.size(), 0);
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      widths[c] = std::max(widths[c], line[c].size());
    }
  }

  std::ostringstream out;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    std::string text;
    for (std::size_t c = 0; c < cells[r].size(); ++c) {
      if (c > 0) text += "  ";
      text += Pad(cells[r][c], widths[c], c > 0);
    }
    out << RightTrim(text) << '\n';
    if (r == 0) {
      std::size_t rule = 0;
      for (std::size_t c = 0; c < widths.size(); ++c) rule += widths[c] + (c > 0 ? 2 : 0);
      out << std::string(rule, '-') << '\n';
    }
  }
  return out.str();
}

std::string RenderCoverage(const CoverageDiff& diff, std::string_view label_a,
                           std::string_view label_b) {
  auto join = [](const std::set<std::string>& s) {
    std::string text;
    for (const auto& ph : s) {
      if (!text.empty()) text += ' ';
      text += ph;
    }
    return text;
  };
  std::ostringstream out;
  out << RightTrim("only in " + std::string(label_a) + ": " + join(diff.only_in_a)) << '\n';
  out << RightTrim("only in " + std::string(label_b) + ": " + join(diff.only_in_b)) << '\n';
  out << RightTrim("shared: " + join(diff.shared)) << '\n';
  return out.str();
}

}  // namespace cstts
