#pragma once

#include <string>
#include <string_view>

namespace lgc {

enum class IssueKind {
  SingleTokenResidue,
  AmalgamSuspect,
  EmptySurface,
  EmptyEntry,
  DuplicateOfBase,
  CrossTableDuplicate,
  DuplicateVariant,
  AgreementUnchecked,
};

std::string_view to_string(IssueKind kind) noexcept;

/// A review-queue item. Issues are data: nothing is dropped because of one.
struct ValidationIssue {
  std::string entry_id;
  IssueKind kind;
  std::string detail;

  bool operator==(const ValidationIssue&) const = default;
};

}  // namespace lgc
