#ifndef LEXTOPIC_ERROR_H_
#define LEXTOPIC_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace lextopic {

enum class ErrorCode {
  kMissingField,
  kDuplicateId,
  kUnknownLawType,
  kMalformedDate,
  kStructureMismatch,
  kEmptyContent,
  kInvalidConfig,
  kEmptyDocument,
  kEmptyVocabulary,
  kAllZero,
  kEmptyMatrix,
  kTooLarge,
  kVocabularyMismatch,
  kAlignmentMismatch,
  kMissingYear,
  kUnknownTopicId,
  kIo,
};

std::string_view error_code_name(ErrorCode code);

// Every failure raised by the library. what() reads
// "<module>: <Code>(<detail>)" so the CLI can report the origin verbatim.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string module, std::string detail);

  ErrorCode code() const { return code_; }
  const std::string& module() const { return module_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string module_;
  std::string detail_;
};

}  // namespace lextopic

#endif  // LEXTOPIC_ERROR_H_
