#include "lgc/stats.hpp"

#include <map>

#include "lgc/error.hpp"

namespace lgc {

std::size_t StatsReport::total_added() const noexcept {
  std::size_t sum = 0;
  for (const auto& p : per_pass) sum += p.added;
  return sum;
}

std::int64_t StatsReport::total_percentage() const {
  const auto net = static_cast<std::int64_t>(final_count) - static_cast<std::int64_t>(initial);
  const auto magnitude = rounded_percentage(static_cast<std::size_t>(net < 0 ? -net : net), initial);
  return net < 0 ? -magnitude : magnitude;
}

std::int64_t rounded_percentage(std::size_t added, std::size_t initial) {
  if (initial == 0) throw Error(ErrorCode::ZeroInitial, "percentage against an initial count of 0");
  const auto a = static_cast<std::uint64_t>(added);
  const auto n = static_cast<std::uint64_t>(initial);
  return static_cast<std::int64_t>((200 * a + n) / (2 * n));
}

StatsReport compute_stats(std::size_t initial, const std::vector<std::pair<std::string, std::size_t>>& added,
                          std::size_t duplicates, std::size_t rejected) {
  if (initial == 0 && !added.empty()) {
    throw Error(ErrorCode::ZeroInitial, "pass percentages requested with an initial count of 0");
  }
  StatsReport report;
  report.initial = initial;
  for (const auto& [label, count] : added) {
    report.per_pass.push_back({label, count, rounded_percentage(count, initial)});
  }
  report.duplicates_removed = duplicates;
  report.rejected = rejected;
  const auto gross = initial + report.total_added();
  if (duplicates + rejected > gross) {
    throw Error(ErrorCode::InvariantViolation, "more entries removed than exist");
  }
  report.final_count = gross - duplicates - rejected;
  return report;
}

StatsReport summary_grouping(const StatsReport& report) {
  static const std::map<std::string, std::string, std::less<>> groups = {
      {"ParaphraseDirect", "Paraphrases"},       {"ParaphraseConstruction", "Paraphrases"},
      {"Deletion", "Other structures"},          {"Permutation", "Other structures"},
      {"Transformation", "Other structures"},    {"Intensification", "Intensifying features"},
  };
  std::vector<std::pair<std::string, std::size_t>> rows;
  for (const auto& p : report.per_pass) {
    const auto it = groups.find(p.label);
    const auto& label = it == groups.end() ? p.label : it->second;
    auto row = rows.begin();
    while (row != rows.end() && row->first != label) ++row;
    if (row == rows.end()) {
      rows.emplace_back(label, p.added);
    } else {
      row->second += p.added;
    }
  }
  return compute_stats(report.initial, rows, report.duplicates_removed, report.rejected);
}

std::string format_stats(const StatsReport& report) {
  auto signed_pct = [](std::int64_t p) { return (p < 0 ? "" : "+") + std::to_string(p) + "%"; };
  std::string out = "Initial entries\t" + std::to_string(report.initial) + "\n";
  for (const auto& p : report.per_pass) {
    out += p.label + "\t" + std::to_string(p.added) + "\t" + signed_pct(p.percentage) + "\n";
  }
  out += "Added\t" + std::to_string(report.total_added());
  if (report.initial > 0) out += "\t" + signed_pct(rounded_percentage(report.total_added(), report.initial));
  out += "\n";
  out += "Duplicates removed\t" + std::to_string(report.duplicates_removed) + "\n";
  out += "Rejected\t" + std::to_string(report.rejected) + "\n";
  out += "Final entries\t" + std::to_string(report.final_count);
  if (report.initial > 0) out += "\t" + signed_pct(report.total_percentage());
  out += "\n";
  return out;
}

}  // namespace lgc
