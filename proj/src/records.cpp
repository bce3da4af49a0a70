#include "lgc/records.hpp"

#include <charconv>
#include <map>

#include "lgc/error.hpp"
#include "lgc/text.hpp"

namespace lgc {

namespace {

constexpr std::string_view kHeader = "# lgc records v1";
constexpr std::string_view kColumns = "entry_id\tparent_id\tpass\tfeature_id\ttemplate\tsurface\tstatus\tsurvivor";

std::string clean(std::string s) {
  for (auto& c : s) {
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  }
  return s;
}

}  // namespace

std::string_view to_string(RecordStatus status) noexcept {
  switch (status) {
    case RecordStatus::Kept: return "kept";
    case RecordStatus::Duplicate: return "duplicate";
    case RecordStatus::Rejected: return "rejected";
  }
  return "kept";
}

RecordsFile make_records(const std::vector<LexEntry>& base, const PipelineResult& result) {
  std::map<std::string, std::string, std::less<>> survivor_of;
  for (const auto& d : result.duplicates) {
    for (const auto& id : d.removed) survivor_of[id] = d.kept;
  }
  std::map<std::string, bool, std::less<>> rejected;
  for (const auto& id : result.rejected) rejected[id] = true;

  auto status_of = [&](const std::string& id, RecordRow& row) {
    if (const auto it = survivor_of.find(id); it != survivor_of.end()) {
      row.status = RecordStatus::Duplicate;
      row.survivor = it->second;
    } else if (rejected.count(id)) {
      row.status = RecordStatus::Rejected;
    }
  };

  RecordsFile file;
  file.initial = base.size();
  for (const auto& r : result.records) {
    RecordRow row{r.new_entry.entry_id, r.parent_id, r.kind, r.feature_id, r.template_text,
                  r.new_entry.surface.rendered, RecordStatus::Kept, {}};
    status_of(row.entry_id, row);
    file.rows.push_back(std::move(row));
  }
  for (const auto& e : base) {
    RecordRow row{e.entry_id, {}, ProvenanceKind::Base, {}, {}, e.surface.rendered, RecordStatus::Kept, {}};
    status_of(row.entry_id, row);
    if (row.status != RecordStatus::Kept) file.rows.push_back(std::move(row));
  }
  return file;
}

void write_records(std::ostream& out, const RecordsFile& file) {
  out << kHeader << '\n' << "# initial\t" << file.initial << '\n' << kColumns << '\n';
  for (const auto& r : file.rows) {
    out << clean(r.entry_id) << '\t' << clean(r.parent_id) << '\t' << to_string(r.kind) << '\t'
        << clean(r.feature_id) << '\t' << clean(r.template_text) << '\t' << clean(r.surface) << '\t'
        << to_string(r.status) << '\t' << clean(r.survivor) << '\n';
  }
}

RecordsFile read_records(std::istream& in, const std::string& source_name) {
  RecordsFile file;
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& message) { return Error(ErrorCode::RecordsSyntax, message, source_name, line_no); };

  if (!text::read_line(in, line, line_no) || line != kHeader) throw fail("expected '" + std::string(kHeader) + "'");
  if (!text::read_line(in, line, line_no)) throw fail("missing initial count");
  {
    const auto parts = text::split(line, '\t');
    if (parts.size() != 2 || parts[0] != "# initial") throw fail("expected '# initial<TAB>count'");
    const auto& n = parts[1];
    const auto [ptr, ec] = std::from_chars(n.data(), n.data() + n.size(), file.initial);
    if (ec != std::errc() || ptr != n.data() + n.size() || n.empty()) throw fail("bad initial count '" + n + "'");
  }
  if (!text::read_line(in, line, line_no) || line != kColumns) throw fail("missing column header");

  while (text::read_line(in, line, line_no)) {
    if (line.empty()) continue;
    const auto parts = text::split(line, '\t');
    if (parts.size() != 8) throw fail("expected 8 columns, found " + std::to_string(parts.size()));
    RecordRow row;
    row.entry_id = parts[0];
    row.parent_id = parts[1];
    const auto kind = provenance_kind_from(parts[2]);
    if (!kind) throw fail("unknown pass '" + parts[2] + "'");
    row.kind = *kind;
    row.feature_id = parts[3];
    row.template_text = parts[4];
    row.surface = parts[5];
    if (parts[6] == "kept") {
      row.status = RecordStatus::Kept;
    } else if (parts[6] == "duplicate") {
      row.status = RecordStatus::Duplicate;
    } else if (parts[6] == "rejected") {
      row.status = RecordStatus::Rejected;
    } else {
      throw fail("unknown status '" + parts[6] + "'");
    }
    row.survivor = parts[7];
    if (row.entry_id.empty()) throw fail("empty entry id");
    file.rows.push_back(std::move(row));
  }
  return file;
}

StatsReport stats_from_records(const RecordsFile& file) {
  std::vector<std::pair<std::string, std::size_t>> added;
  for (auto kind : kPassOrder) added.emplace_back(std::string(to_string(kind)), 0);
  std::size_t duplicates = 0;
  std::size_t rejected = 0;
  for (const auto& r : file.rows) {
    if (r.kind != ProvenanceKind::Base) ++added[pass_rank(r.kind) - 1].second;
    if (r.status == RecordStatus::Duplicate) ++duplicates;
    if (r.status == RecordStatus::Rejected) ++rejected;
  }
  return compute_stats(file.initial, added, duplicates, rejected);
}

}  // namespace lgc
