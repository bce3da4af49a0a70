#include "lgc/curation.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include <unicode/normalizer2.h>
#include <unicode/unistr.h>

#include "lgc/text.hpp"

namespace lgc {

namespace {

std::string replace_all(std::string s, std::string_view from, std::string_view to) {
  std::size_t pos = 0;
  while ((pos = s.find(from, pos)) != std::string::npos) {
    s.replace(pos, from.size(), to);
    pos += to.size();
  }
  return s;
}

auto rank_tuple(const LexEntry& e) {
  const auto parsed = parse_entry_id(e.entry_id);
  const std::size_t row = parsed ? parsed->row : static_cast<std::size_t>(-1);
  const std::size_t ordinal = parsed ? parsed->ordinal : 0;
  return std::make_tuple(!e.is_base(), std::string_view(e.table_id), row, pass_rank(e.provenance.kind), ordinal,
                         std::string_view(e.entry_id));
}

std::string sanitize(std::string s) {
  std::replace(s.begin(), s.end(), '\t', ' ');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}


}  // namespace

std::string_view to_string(IssueKind kind) noexcept {
  switch (kind) {
    case IssueKind::SingleTokenResidue: return "SingleTokenResidue";
    case IssueKind::AmalgamSuspect: return "AmalgamSuspect";
    case IssueKind::EmptySurface: return "EmptySurface";
    case IssueKind::EmptyEntry: return "EmptyEntry";
    case IssueKind::DuplicateOfBase: return "DuplicateOfBase";
    case IssueKind::CrossTableDuplicate: return "CrossTableDuplicate";
    case IssueKind::DuplicateVariant: return "DuplicateVariant";
    case IssueKind::AgreementUnchecked: return "AgreementUnchecked";
  }
  return "EmptySurface";
}

std::string canonical_key(std::string_view rendered) {
  const auto unified = replace_all(std::string(rendered), "\xE2\x80\x99", "'");
  UErrorCode status = U_ZERO_ERROR;
  const auto* nfc = icu::Normalizer2::getNFCInstance(status);
  auto ustr = icu::UnicodeString::fromUTF8(unified);
  std::string out;
  if (U_SUCCESS(status)) {
    auto normalized = nfc->normalize(ustr, status);
    if (U_SUCCESS(status)) ustr = normalized;
  }
  ustr.foldCase();
  ustr.toUTF8String(out);
  return text::normalize_space(out);
}

IssueKind classify_duplicate(std::string_view, bool kept_is_base, const std::vector<std::string>& removed_table_ids,
                             std::string_view kept_table) {
  for (const auto& t : removed_table_ids) {
    if (t != kept_table) return IssueKind::CrossTableDuplicate;
  }
  return kept_is_base ? IssueKind::DuplicateOfBase : IssueKind::DuplicateVariant;
}

bool rank_less(const LexEntry& a, const LexEntry& b) { return rank_tuple(a) < rank_tuple(b); }

DedupResult dedup(std::vector<LexEntry> entries) {
  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    auto key = canonical_key(entries[i].surface);
    if (key.empty()) continue;
    groups[std::move(key)].push_back(i);
  }

  std::vector<bool> removed(entries.size(), false);
  std::vector<std::pair<std::size_t, DuplicateRecord>> records;  // (kept index, record)
  for (auto& [key, members] : groups) {
    if (members.size() < 2) continue;
    std::sort(members.begin(), members.end(),
              [&](std::size_t a, std::size_t b) { return rank_less(entries[a], entries[b]); });
    auto& survivor = entries[members.front()];
    DuplicateRecord record;
    record.kept = survivor.entry_id;
    record.key = key;
    std::vector<std::string> tables;
    for (std::size_t m = 1; m < members.size(); ++m) {
      auto& gone = entries[members[m]];
      removed[members[m]] = true;
      record.removed.push_back(gone.entry_id);
      tables.push_back(gone.table_id);
      survivor.merged.push_back({gone.entry_id, gone.provenance});
      for (auto& inner : gone.merged) survivor.merged.push_back(std::move(inner));
    }
    record.kind = classify_duplicate(survivor.entry_id, survivor.is_base(), tables, survivor.table_id);
    records.emplace_back(members.front(), std::move(record));
  }

  std::sort(records.begin(), records.end(),
            [&](const auto& a, const auto& b) { return rank_less(entries[a.first], entries[b.first]); });

  DedupResult result;
  result.entries.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!removed[i]) result.entries.push_back(std::move(entries[i]));
  }
  for (auto& [index, record] : records) result.duplicates.push_back(std::move(record));
  return result;
}

std::vector<ValidationIssue> flag_suspicious(const LexEntry& entry) {
  std::vector<ValidationIssue> issues;
  const auto& rendered = entry.surface.rendered;
  if (rendered.empty()) {
    issues.push_back({entry.entry_id, IssueKind::EmptySurface, "surface realizes to nothing"});
    return issues;
  }
  const auto words = text::split_ws(rendered);
  const auto kind = entry.provenance.kind;
  if ((kind == ProvenanceKind::Deletion || kind == ProvenanceKind::Permutation) && words.size() == 1) {
    issues.push_back({entry.entry_id, IssueKind::SingleTokenResidue, "single token '" + rendered + "'"});
  }
  for (const auto& w : words) {
    const bool dangling = w.size() > 1 && w.back() == '-';
    const bool hostless = w == "-ci" || w == "-là";
    if (dangling || hostless) {
      issues.push_back({entry.entry_id, IssueKind::AmalgamSuspect, "token '" + w + "' in '" + rendered + "'"});
      break;
    }
  }
  if (kind == ProvenanceKind::Transformation) {
    issues.push_back({entry.entry_id, IssueKind::AgreementUnchecked,
                      "gender/number agreement not checked for '" + rendered + "'"});
  }
  return issues;
}

std::string review_report(const std::vector<ValidationIssue>& issues,
                          const std::vector<DuplicateRecord>& duplicates) {
  struct Line {
    IssueKind kind;
    std::string entry_id;
    std::string detail;
  };
  std::vector<Line> lines;
  for (const auto& i : issues) lines.push_back({i.kind, i.entry_id, i.detail});
  for (const auto& d : duplicates) {
    lines.push_back({d.kind, d.kept, "key=" + d.key + "; removed=" + text::join(d.removed, ",")});
  }
  std::stable_sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) { return a.kind < b.kind; });

  std::string out = "# lgc review v1\nkind\tentry_id\tdetail\n";
  for (const auto& l : lines) {
    out += to_string(l.kind);
    out += '\t';
    out += sanitize(l.entry_id);
    out += '\t';
    out += sanitize(l.detail);
    out += '\n';
  }
  return out;
}

}  // namespace lgc
