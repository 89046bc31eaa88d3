#include "cstts/io.h"

#include <bit>
#include <cstdint>
#include <fstream>
#include <istream>
#include <sstream>

#include "cstts/errors.h"

namespace cstts::io {

using nlohmann::json;

namespace {

[[noreturn]] void FormatError(const std::string& what) {
  throw Error(ErrorCode::kFormat, what);
}

const json& Field(const json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) {
    FormatError(std::string("missing field \"") + name + "\"");
  }
  return doc.at(name);
}

template <typename T>
T As(const json& value, const char* name) {
  try {
    return value.get<T>();
  } catch (const json::exception&) {
    FormatError(std::string("field \"") + name + "\" has the wrong type");
  }
}

json ParseJson(std::string_view text, const std::string& where) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    FormatError(where + ": " + e.what());
  }
}

}  // namespace

json SequenceToJson(const TaggedSequence& seq, const EncodedSequence* encoded) {
  json record;
  record["text"] = seq.source_text;
  record["symbols"] = seq.symbols;
  record["lang_tokens"] = seq.lang_tokens;
  if (encoded != nullptr) {
    record["symbol_ids"] = encoded->symbol_ids;
    if (encoded->lang_tokens.size() != seq.lang_tokens.size()) {
      // EOS appended: the encoded stream carries its own tokens.
      record["encoded_lang_tokens"] = encoded->lang_tokens;
    }
  }
  return record;
}

TaggedSequence SequenceFromJson(const json& record) {
  TaggedSequence seq;
  seq.source_text = As<std::string>(Field(record, "text"), "text");
  seq.symbols = As<std::vector<std::string>>(Field(record, "symbols"), "symbols");
  seq.lang_tokens = As<std::vector<int>>(Field(record, "lang_tokens"), "lang_tokens");
  if (auto violation = FindAlignmentViolation(seq)) FormatError(*violation);
  return seq;
}

std::vector<TaggedSequence> ReadSequencesJsonl(std::istream& in) {
  std::vector<TaggedSequence> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = "line " + std::to_string(line_no);
    try {
      out.push_back(SequenceFromJson(ParseJson(line, where)));
    } catch (const Error& e) {
      if (e.detail().starts_with(where)) throw;
      FormatError(where + ": " + e.detail());
    }
  }
  return out;
}

json VocabularyToJson(const SymbolVocabulary& vocab) {
  json doc;
  doc["pad_id"] = SymbolVocabulary::kPadId;
  doc["eos_id"] = SymbolVocabulary::kEosId;
  doc["symbols"] = vocab.symbol_ids();
  return doc;
}

SymbolVocabulary VocabularyFromJson(const json& doc) {
  if (As<int>(Field(doc, "pad_id"), "pad_id") != SymbolVocabulary::kPadId ||
      As<int>(Field(doc, "eos_id"), "eos_id") != SymbolVocabulary::kEosId) {
    FormatError("vocabulary must use pad_id 0 and eos_id 1");
  }
  return SymbolVocabulary::FromIds(
      As<std::map<std::string, int>>(Field(doc, "symbols"), "symbols"));
}

json FrequencyTableToJson(const FrequencyTable& table) {
  json counts = json::object();
  for (const auto& [ph, n] : table.counts()) counts[ph] = n;
  return json{{"label", table.label()}, {"counts", counts}, {"total", table.total()}};
}

FrequencyTable FrequencyTableFromJson(const json& doc) {
  FrequencyTable table(As<std::string>(Field(doc, "label"), "label"));
  for (const auto& [ph, n] :
       As<std::map<std::string, std::uint64_t>>(Field(doc, "counts"), "counts")) {
    if (!IsPhonemeSymbol(ph)) FormatError("'" + ph + "' is not a phoneme");
    table.Add(ph, n);
  }
  if (As<std::uint64_t>(Field(doc, "total"), "total") != table.total()) {
    FormatError("total does not equal the sum of counts");
  }
  return table;
}

std::string EncodeFloat64Le(std::span<const double> values) {
  std::string bytes(values.size() * 8, '\0');
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto bits = std::bit_cast<std::uint64_t>(values[i]);
    for (int b = 0; b < 8; ++b) {
      bytes[i * 8 + static_cast<std::size_t>(b)] = static_cast<char>((bits >> (8 * b)) & 0xFF);
    }
  }
  return bytes;
}

std::vector<double> DecodeFloat64Le(std::string_view bytes) {
  if (bytes.size() % 8 != 0) FormatError("binary payload is not a multiple of 8 bytes");
  std::vector<double> values(bytes.size() / 8);
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::uint64_t bits = 0;
    for (int b = 0; b < 8; ++b) {
      bits |= static_cast<std::uint64_t>(
                  static_cast<unsigned char>(bytes[i * 8 + static_cast<std::size_t>(b)]))
              << (8 * b);
    }
    values[i] = std::bit_cast<double>(bits);
  }
  return values;
}

std::string ReadFileBytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFileBytes(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path.string());
}

void SaveEmbeddingTable(const EmbeddingTable& table, const std::filesystem::path& header_path) {
  std::filesystem::path bin_path = header_path;
  bin_path.replace_extension(".bin");
  json header{{"dim", table.dim()},
              {"vocab_size", table.rows()},
              {"seed", table.seed()},
              {"label", table.label()},
              {"dtype", "float64"},
              {"byte_order", "little"},
              {"data", bin_path.filename().string()}};
  WriteFileBytes(bin_path, EncodeFloat64Le(table.values()));
  WriteFileBytes(header_path, header.dump(2) + "\n");
}

EmbeddingTable LoadEmbeddingTable(const std::filesystem::path& header_path) {
  const json header = ParseJson(ReadFileBytes(header_path), header_path.string());
  const auto dim = As<std::size_t>(Field(header, "dim"), "dim");
  const auto vocab_size = As<std::size_t>(Field(header, "vocab_size"), "vocab_size");
  const auto seed = As<std::uint64_t>(Field(header, "seed"), "seed");
  const auto label = As<std::string>(Field(header, "label"), "label");
  const auto data = As<std::string>(Field(header, "data"), "data");
  std::vector<double> values = DecodeFloat64Le(ReadFileBytes(header_path.parent_path() / data));
  return EmbeddingTable::FromValues(vocab_size, dim, std::move(values), seed, label);
}

json SpeakerToJson(const SpeakerEmbedding& speaker) {
  return json{{"label", speaker.label}, {"values", speaker.values}};
}

SpeakerEmbedding SpeakerFromJson(const json& doc) {
  SpeakerEmbedding speaker{As<std::string>(Field(doc, "label"), "label"),
                           As<std::vector<double>>(Field(doc, "values"), "values")};
  if (speaker.values.size() != kSpeakerEmbeddingDim) {
    throw Error(ErrorCode::kDimensionMismatch,
                "speaker embedding has " + std::to_string(speaker.values.size()) +
                    " values, expected 256");
  }
  return speaker;
}

SpeakerEmbedding LoadSpeakerEmbedding(const std::filesystem::path& path) {
  return SpeakerFromJson(ParseJson(ReadFileBytes(path), path.string()));
}

void SaveConditionedMatrix(const ConditionedMatrix& matrix, const std::filesystem::path& stem,
                           const json& extra) {
  std::filesystem::path bin_path = stem;
  bin_path += ".bin";
  std::filesystem::path json_path = stem;
  json_path += ".json";
  json layout = json::array();
  for (const auto& seg : matrix.layout()) {
    layout.push_back({{"name", seg.name}, {"width", seg.width}});
  }
  json sidecar = extra.is_object() ? extra : json::object();
  sidecar["T"] = matrix.rows();
  sidecar["D"] = matrix.cols();
  sidecar["column_layout"] = layout;
  sidecar["dtype"] = "float64";
  sidecar["byte_order"] = "little";
  sidecar["data"] = bin_path.filename().string();
  WriteFileBytes(bin_path, EncodeFloat64Le(matrix.data()));
  WriteFileBytes(json_path, sidecar.dump(2) + "\n");
}

ConditionedMatrix LoadConditionedMatrix(const std::filesystem::path& sidecar_path) {
  const json sidecar = ParseJson(ReadFileBytes(sidecar_path), sidecar_path.string());
  const auto rows = As<std::size_t>(Field(sidecar, "T"), "T");
  const auto cols = As<std::size_t>(Field(sidecar, "D"), "D");
  std::vector<LayoutSegment> layout;
  for (const json& seg : Field(sidecar, "column_layout")) {
    layout.push_back({As<std::string>(Field(seg, "name"), "name"),
                      As<std::size_t>(Field(seg, "width"), "width")});
  }
  ConditionedMatrix matrix(rows, std::move(layout));
  if (matrix.cols() != cols) FormatError("D does not equal the sum of layout widths");
  std::vector<double> values = DecodeFloat64Le(ReadFileBytes(
      sidecar_path.parent_path() / As<std::string>(Field(sidecar, "data"), "data")));
  if (values.size() != rows * cols) FormatError("binary payload size does not match T x D");
  matrix.data() = std::move(values);
  return matrix;
}

}  // namespace cstts::io
