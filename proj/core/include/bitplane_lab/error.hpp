#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bpl {

enum class Errc {
  FileNotFound,
  UnsupportedFormat,
  CorruptData,
  IoError,
  DimensionMismatch,
  InvalidParams,
  WindowTooLarge,
  DegenerateHistogram,
  EmptyDataset,
  InsufficientData,
  LayoutNotRecognized,
  MissingImage,
  DuplicateId,
  FeatureJoinMismatch,
  SchemaMismatch,
  RaggedRows,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the Errc codes so callers
/// (and the CLI exit-code mapping) can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }
  /// The message without the code prefix that what() carries.
  const std::string& message() const noexcept { return message_; }

 private:
  Errc code_;
  std::string message_;
};

}  // namespace bpl
