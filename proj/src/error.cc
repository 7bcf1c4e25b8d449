#include "cleantables/error.h"

namespace cleantables {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateDocId: return "DUPLICATE_DOC_ID";
    case ErrorCode::kBadDocId: return "BAD_DOC_ID";
    case ErrorCode::kMetaLengthMismatch: return "META_LENGTH_MISMATCH";
    case ErrorCode::kIo: return "IO_ERROR";
    case ErrorCode::kInvalidUtf8: return "INVALID_UTF8";
    case ErrorCode::kMalformedLine: return "MALFORMED_LINE";
    case ErrorCode::kBadHead: return "BAD_HEAD";
    case ErrorCode::kUnknownColumn: return "UNKNOWN_COLUMN";
    case ErrorCode::kMissingColumn: return "MISSING_COLUMN";
    case ErrorCode::kRange: return "RANGE";
    case ErrorCode::kDimMismatch: return "DIM_MISMATCH";
    case ErrorCode::kEmptyLexicon: return "EMPTY_LEXICON";
    case ErrorCode::kUnknownTable: return "UNKNOWN_TABLE";
    case ErrorCode::kBadRange: return "BAD_RANGE";
    case ErrorCode::kEmptyVocab: return "EMPTY_VOCAB";
    case ErrorCode::kKTooLarge: return "K_TOO_LARGE";
    case ErrorCode::kRefuseOverwrite: return "REFUSE_OVERWRITE";
    case ErrorCode::kParseError: return "PARSE_ERROR";
    case ErrorCode::kSchemaMismatch: return "SCHEMA_MISMATCH";
    case ErrorCode::kValidation: return "VALIDATION";
    case ErrorCode::kUsage: return "USAGE";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace cleantables
