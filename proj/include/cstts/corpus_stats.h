#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>

#include "cstts/sequence.h"

namespace cstts {

// Base-phoneme token counts for one corpus. Digits and punctuation are
// never keys; zero counts are never stored.
class FrequencyTable {
 public:
  explicit FrequencyTable(std::string label = {}) : label_(std::move(label)) {}

  void Add(std::string_view phoneme, std::uint64_t n = 1);
  // Associative and commutative; keeps this table's label.
  void Merge(const FrequencyTable& other);

  std::uint64_t Count(std::string_view phoneme) const;
  std::uint64_t total() const { return total_; }
  const std::string& label() const { return label_; }
  const std::map<std::string, std::uint64_t, std::less<>>& counts() const {
    return counts_;
  }

  bool operator==(const FrequencyTable&) const = default;

 private:
  std::string label_;
  std::map<std::string, std::uint64_t, std::less<>> counts_;
  std::uint64_t total_ = 0;
};

void AccumulatePhonemes(const TaggedSequence& seq, FrequencyTable* table);

FrequencyTable CountPhonemes(std::span<const TaggedSequence> corpus, std::string label);

struct CoverageDiff {
  std::set<std::string> only_in_a;
  std::set<std::string> only_in_b;
  std::set<std::string> shared;

  bool operator==(const CoverageDiff&) const = default;
};

CoverageDiff CompareCoverage(const FrequencyTable& a, const FrequencyTable& b);

// One row per phoneme, one count column per table. Rows are ordered by
// descending count in the first table, then alphabetically; a phoneme a
// corpus lacks gets a blank cell.
std::string RenderTable(std::span<const FrequencyTable> tables);

std::string RenderCoverage(const CoverageDiff& diff, std::string_view label_a,
                           std::string_view label_b);

}  // namespace cstts
