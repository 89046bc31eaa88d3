#pragma once

#include <filesystem>
#include <iosfwd>
#include <nlohmann/json.hpp>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cstts/conditioning.h"
#include "cstts/corpus_stats.h"
#include "cstts/sequence.h"

namespace cstts::io {

// {"text", "symbols", "lang_tokens"} plus "symbol_ids" when `encoded` is given.
nlohmann::json SequenceToJson(const TaggedSequence& seq,
                              const EncodedSequence* encoded = nullptr);
// Throws FormatError on missing/mistyped fields or broken alignment.
TaggedSequence SequenceFromJson(const nlohmann::json& record);

// One record per non-blank line; errors name the 1-based line.
std::vector<TaggedSequence> ReadSequencesJsonl(std::istream& in);

// {"pad_id":0,"eos_id":1,"symbols":{symbol:id}}
nlohmann::json VocabularyToJson(const SymbolVocabulary& vocab);
SymbolVocabulary VocabularyFromJson(const nlohmann::json& doc);

// {"label", "counts", "total"}
nlohmann::json FrequencyTableToJson(const FrequencyTable& table);
FrequencyTable FrequencyTableFromJson(const nlohmann::json& doc);

// Row-major doubles as little-endian IEEE-754 binary64.
std::string EncodeFloat64Le(std::span<const double> values);
std::vector<double> DecodeFloat64Le(std::string_view bytes);

// Table header JSON at `header_path`; values go next to it in a .bin file
// named by the header's "data" field.
void SaveEmbeddingTable(const EmbeddingTable& table, const std::filesystem::path& header_path);
EmbeddingTable LoadEmbeddingTable(const std::filesystem::path& header_path);

// {"label": ..., "values": [256 floats]}
nlohmann::json SpeakerToJson(const SpeakerEmbedding& speaker);
SpeakerEmbedding SpeakerFromJson(const nlohmann::json& doc);
SpeakerEmbedding LoadSpeakerEmbedding(const std::filesystem::path& path);

// Writes <stem>.bin and the sidecar <stem>.json {"T", "D", "column_layout",
// "data", ...extra}.
void SaveConditionedMatrix(const ConditionedMatrix& matrix, const std::filesystem::path& stem,
                           const nlohmann::json& extra = nlohmann::json::object());
ConditionedMatrix LoadConditionedMatrix(const std::filesystem::path& sidecar_path);

std::string ReadFileBytes(const std::filesystem::path& path);
void WriteFileBytes(const std::filesystem::path& path, std::string_view bytes);

}  // namespace cstts::io
