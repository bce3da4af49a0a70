#include "lgc/error.hpp"

namespace lgc {

namespace {

std::string locate(ErrorCode code, const std::string& message, const std::string& source,
                   std::size_t line) {
  std::string out;
  if (!source.empty()) {
    out += source;
    if (line > 0) out += ":" + std::to_string(line);
    out += ": ";
  } else if (line > 0) {
    out += "line " + std::to_string(line) + ": ";
  }
  out += to_string(code);
  out += ": ";
  out += message;
  return out;
}

}  // namespace

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MissingHeader: return "MissingHeader";
    case ErrorCode::RowArityMismatch: return "RowArityMismatch";
    case ErrorCode::UnknownCellToken: return "UnknownCellToken";
    case ErrorCode::DuplicateFeatureId: return "DuplicateFeatureId";
    case ErrorCode::UnknownSlot: return "UnknownSlot";
    case ErrorCode::UnknownValueToken: return "UnknownValueToken";
    case ErrorCode::DuplicateClassId: return "DuplicateClassId";
    case ErrorCode::UnknownClass: return "UnknownClass";
    case ErrorCode::InconsistentMatrix: return "InconsistentMatrix";
    case ErrorCode::ScriptSyntax: return "ScriptSyntax";
    case ErrorCode::DuplicateRule: return "DuplicateRule";
    case ErrorCode::NestedAlternation: return "NestedAlternation";
    case ErrorCode::UnterminatedGroup: return "UnterminatedGroup";
    case ErrorCode::MalformedPlaceholder: return "MalformedPlaceholder";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::UnboundPlaceholder: return "UnboundPlaceholder";
    case ErrorCode::UnknownSymbolicToken: return "UnknownSymbolicToken";
    case ErrorCode::MorphoSyntax: return "MorphoSyntax";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
    case ErrorCode::UnknownFormatVersion: return "UnknownFormatVersion";
    case ErrorCode::ZeroInitial: return "ZeroInitial";
    case ErrorCode::RecordsSyntax: return "RecordsSyntax";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::string source, std::size_t line)
    : std::runtime_error(locate(code, message, source, line)),
      code_(code),
      source_(std::move(source)),
      line_(line) {}

}  // namespace lgc
