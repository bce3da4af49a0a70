#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace lgc {

struct PassStat {
  std::string label;
  std::size_t added = 0;
  std::int64_t percentage = 0;

  bool operator==(const PassStat&) const = default;
};

struct StatsReport {
  std::size_t initial = 0;
  std::vector<PassStat> per_pass;
  std::size_t duplicates_removed = 0;
  std::size_t rejected = 0;
  std::size_t final_count = 0;

  std::size_t total_added() const noexcept;
  /// Net growth (final - initial) over initial.
  std::int64_t total_percentage() const;
  bool operator==(const StatsReport&) const = default;
};

/// round-half-away-from-zero(100 * added / initial), integer-exact.
/// Throws Error(ZeroInitial) when initial is 0.
std::int64_t rounded_percentage(std::size_t added, std::size_t initial);

/// final = initial + sum(added) - duplicates - rejected. Throws
/// Error(ZeroInitial) for a zero initial with pass rows, and
/// Error(InvariantViolation) if removals exceed the total.
StatsReport compute_stats(std::size_t initial, const std::vector<std::pair<std::string, std::size_t>>& added,
                          std::size_t duplicates, std::size_t rejected);

/// Regroups per-pass rows into paraphrases / other structures /
/// intensifying features. Unknown labels are kept as their own rows.
StatsReport summary_grouping(const StatsReport& report);

/// Tab-separated, one row per pass, then duplicates, rejected, final.
std::string format_stats(const StatsReport& report);

}  // namespace lgc
