#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lgc {

enum class ErrorCode {
  // tables and class matrix
  MissingHeader,
  RowArityMismatch,
  UnknownCellToken,
  DuplicateFeatureId,
  UnknownSlot,
  UnknownValueToken,
  DuplicateClassId,
  UnknownClass,
  InconsistentMatrix,
  // script and templates
  ScriptSyntax,
  DuplicateRule,
  NestedAlternation,
  UnterminatedGroup,
  MalformedPlaceholder,
  KindMismatch,
  // realization
  UnboundPlaceholder,
  UnknownSymbolicToken,
  MorphoSyntax,
  // serialization and stats
  SchemaViolation,
  UnknownFormatVersion,
  ZeroInitial,
  RecordsSyntax,
  // internal
  InvariantViolation,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. `source` and `line` locate the
/// offending input when one exists (line 0 means "no line").
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string source = {}, std::size_t line = 0);

  ErrorCode code() const noexcept { return code_; }
  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::string source_;
  std::size_t line_;
};

}  // namespace lgc
