#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cstts {

enum class ErrorCode {
  // Lexicon loading.
  kMalformedLexiconLine,
  kEmptyFinal,
  kUnknownSyllable,
  // Conversion.
  kOovWord,
  kUnknownHanzi,
  kUnsupportedCharacter,
  kUnknownSymbol,
  kUnknownId,
  kEmptyCorpus,
  // Shapes and dimensions.
  kInvalidDimension,
  kLengthMismatch,
  kIndexOutOfRange,
  kEmptyInput,
  kDimensionMismatch,
  // Files.
  kIo,
  kFormat,
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

// Thrown for a bad line in one of the lexicon files; `line` is 1-based.
class LexiconLineError : public Error {
 public:
  LexiconLineError(ErrorCode code, std::size_t line, const std::string& detail);

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace cstts
