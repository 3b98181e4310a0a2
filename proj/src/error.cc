#include "lextopic/error.h"

namespace lextopic {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMissingField: return "MissingField";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kUnknownLawType: return "UnknownLawType";
    case ErrorCode::kMalformedDate: return "MalformedDate";
    case ErrorCode::kStructureMismatch: return "StructureMismatch";
    case ErrorCode::kEmptyContent: return "EmptyContent";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kEmptyDocument: return "EmptyDocument";
    case ErrorCode::kEmptyVocabulary: return "EmptyVocabulary";
    case ErrorCode::kAllZero: return "AllZero";
    case ErrorCode::kEmptyMatrix: return "EmptyMatrix";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kVocabularyMismatch: return "VocabularyMismatch";
    case ErrorCode::kAlignmentMismatch: return "AlignmentMismatch";
    case ErrorCode::kMissingYear: return "MissingYear";
    case ErrorCode::kUnknownTopicId: return "UnknownTopicId";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string module, std::string detail)
    : std::runtime_error(module + ": " + std::string(error_code_name(code)) +
                         "(" + detail + ")"),
      code_(code),
      module_(std::move(module)),
      detail_(std::move(detail)) {}

}  // namespace lextopic
