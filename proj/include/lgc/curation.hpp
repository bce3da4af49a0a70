#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lgc/issue.hpp"
#include "lgc/lex_entry.hpp"

namespace lgc {

/// NFC, case-folded, whitespace-collapsed, with U+2019 read as U+0027.
std::string canonical_key(std::string_view rendered);
inline std::string canonical_key(const SurfaceForm& surface) { return canonical_key(surface.rendered); }

struct DuplicateRecord {
  std::string kept;
  std::vector<std::string> removed;  // rank order
  std::string key;
  IssueKind kind = IssueKind::DuplicateVariant;  // CrossTableDuplicate, DuplicateOfBase or DuplicateVariant

  bool operator==(const DuplicateRecord&) const = default;
};

/// CrossTableDuplicate if any removed id comes from another table than the
/// survivor, else DuplicateOfBase when the survivor is a base entry, else
/// DuplicateVariant.
IssueKind classify_duplicate(std::string_view kept_id, bool kept_is_base,
                             const std::vector<std::string>& removed_table_ids, std::string_view kept_table);

/// Survivor order: base before generated, then table id, row, pass, ordinal.
bool rank_less(const LexEntry& a, const LexEntry& b);

struct DedupResult {
  std::vector<LexEntry> entries;
  std::vector<DuplicateRecord> duplicates;
};

/// One survivor per canonical key; empty surfaces are never merged. Output
/// keeps input order; removed provenance is folded into the survivor.
DedupResult dedup(std::vector<LexEntry> entries);

std::vector<ValidationIssue> flag_suspicious(const LexEntry& entry);

/// Tab-separated review queue: a header line, then one line per issue and
/// per duplicate record, grouped by kind.
std::string review_report(const std::vector<ValidationIssue>& issues,
                          const std::vector<DuplicateRecord>& duplicates);

}  // namespace lgc
