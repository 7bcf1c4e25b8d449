#ifndef CLEANTABLES_ERROR_H_
#define CLEANTABLES_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace cleantables {

// Stable error codes. The string form (ErrorCodeName) is part of the public
// interface: it is printed by the CLI and exposed to Python.
enum class ErrorCode {
  kDuplicateDocId,
  kBadDocId,
  kMetaLengthMismatch,
  kIo,
  kInvalidUtf8,
  kMalformedLine,
  kBadHead,
  kUnknownColumn,
  kMissingColumn,
  kRange,
  kDimMismatch,
  kEmptyLexicon,
  kUnknownTable,
  kBadRange,
  kEmptyVocab,
  kKTooLarge,
  kRefuseOverwrite,
  kParseError,
  kSchemaMismatch,
  kValidation,
  kUsage,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cleantables

#endif  // CLEANTABLES_ERROR_H_
