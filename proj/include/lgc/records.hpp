#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "lgc/expansion.hpp"
#include "lgc/stats.hpp"

namespace lgc {

enum class RecordStatus { Kept, Duplicate, Rejected };

std::string_view to_string(RecordStatus status) noexcept;

/// One line of the records.tsv sidecar.
struct RecordRow {
  std::string entry_id;
  std::string parent_id;  // empty for base rows
  ProvenanceKind kind = ProvenanceKind::Base;
  std::string feature_id;
  std::string template_text;
  std::string surface;
  RecordStatus status = RecordStatus::Kept;
  std::string survivor;  // set for Duplicate rows

  bool operator==(const RecordRow&) const = default;
};

struct RecordsFile {
  std::size_t initial = 0;
  std::vector<RecordRow> rows;

  bool operator==(const RecordsFile&) const = default;
};

/// Generated entries in pipeline order, then base entries that were removed
/// or rejected.
RecordsFile make_records(const std::vector<LexEntry>& base, const PipelineResult& result);

void write_records(std::ostream& out, const RecordsFile& file);
/// Throws Error(RecordsSyntax).
RecordsFile read_records(std::istream& in, const std::string& source_name = {});

/// Recomputes the stats without re-running the passes.
StatsReport stats_from_records(const RecordsFile& file);

}  // namespace lgc
