#pragma once

#include <array>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lgc/curation.hpp"
#include "lgc/feature_script.hpp"
#include "lgc/lex_entry.hpp"
#include "lgc/realizer.hpp"
#include "lgc/stats.hpp"

namespace lgc {

/// Enabled passes; they always run in kPassOrder.
class PassConfig {
 public:
  static PassConfig all();
  static PassConfig none() { return {}; }
  /// "all", "none", or a comma list of pass names: tags (pd, del, ...),
  /// kind names, or long forms (deletion, paraphrase-direct, ...).
  static PassConfig parse(std::string_view spec);

  void enable(ProvenanceKind kind);
  bool enabled(ProvenanceKind kind) const;
  std::vector<ProvenanceKind> passes() const;

 private:
  std::array<bool, kPassOrder.size()> on_{};
};

struct ExpansionRecord {
  LexEntry new_entry;
  std::string parent_id;
  ProvenanceKind kind = ProvenanceKind::ParaphraseDirect;
  std::string feature_id;
  std::string template_text;

  bool operator==(const ExpansionRecord&) const = default;
};

/// Pass a rule feeds, or Base when the rule generates nothing.
ProvenanceKind pass_of(const ScriptRule& rule) noexcept;

/// Every Plus feature whose rule feeds `kind`, in column order, times every
/// flat template, in template order. `entry` must be a base entry.
std::vector<ExpansionRecord> expand_pass(ProvenanceKind kind, const LexEntry& entry,
                                         const ExtractionScript& script, const Realizer& realizer);

std::vector<ExpansionRecord> expand_paraphrase_direct(const LexEntry& entry, const ExtractionScript& script,
                                                      const Realizer& realizer = Realizer());
std::vector<ExpansionRecord> expand_paraphrase_construction(const LexEntry& entry, const ExtractionScript& script,
                                                            const Realizer& realizer = Realizer());
std::vector<ExpansionRecord> expand_deletion(const LexEntry& entry, const ExtractionScript& script,
                                             const Realizer& realizer = Realizer());
std::vector<ExpansionRecord> expand_permutation(const LexEntry& entry, const ExtractionScript& script,
                                                const Realizer& realizer = Realizer());
std::vector<ExpansionRecord> expand_transformation(const LexEntry& entry, const ExtractionScript& script,
                                                   const Realizer& realizer = Realizer());
std::vector<ExpansionRecord> expand_intensify(const LexEntry& entry, const ExtractionScript& script,
                                              const Realizer& realizer = Realizer());

/// Records the variants of `parent` in its lexical_info sections.
void attach_back_references(LexEntry& parent, const std::vector<ExpansionRecord>& records);

struct PipelineConfig {
  PassConfig passes = PassConfig::all();
  unsigned jobs = 1;
  std::set<std::string> reject;  // entry ids dropped after dedup
};

struct PipelineResult {
  std::vector<LexEntry> entries;
  std::vector<ExpansionRecord> records;  // all generated, before dedup
  std::vector<DuplicateRecord> duplicates;
  std::vector<std::string> rejected;  // ids actually dropped
  std::vector<ValidationIssue> issues;
  StatsReport stats;
};

/// Per-pass raw added counts in kPassOrder.
std::vector<std::pair<std::string, std::size_t>> pass_counts(const std::vector<ExpansionRecord>& records);

/// Expand, merge in parent order, dedup, reject, flag. Throws
/// Error(InvariantViolation) if a parent is not a base entry or the stats
/// identity fails.
PipelineResult run_pipeline(const std::vector<LexEntry>& base, const ExtractionScript& script,
                            const Realizer& realizer, const PipelineConfig& config = {});

}  // namespace lgc
