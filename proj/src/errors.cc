#include "cstts/errors.h"

namespace cstts {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedLexiconLine: return "MalformedLexiconLine";
    case ErrorCode::kEmptyFinal: return "EmptyFinal";
    case ErrorCode::kUnknownSyllable: return "UnknownSyllable";
    case ErrorCode::kOovWord: return "OovWord";
    case ErrorCode::kUnknownHanzi: return "UnknownHanzi";
    case ErrorCode::kUnsupportedCharacter: return "UnsupportedCharacter";
    case ErrorCode::kUnknownSymbol: return "UnknownSymbol";
    case ErrorCode::kUnknownId: return "UnknownId";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kInvalidDimension: return "InvalidDimension";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kFormat: return "FormatError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + detail),
      code_(code),
      detail_(detail) {}

LexiconLineError::LexiconLineError(ErrorCode code, std::size_t line,
                                   const std::string& detail)
    : Error(code, "line " + std::to_string(line) + ": " + detail), line_(line) {}

}  // namespace cstts
