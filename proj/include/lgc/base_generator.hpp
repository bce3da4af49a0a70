#pragma once

#include <string>
#include <vector>

#include "lgc/feature_script.hpp"
#include "lgc/lex_entry.hpp"
#include "lgc/lg_table.hpp"
#include "lgc/realizer.hpp"

namespace lgc {

/// A table with its script rules resolved: every column gets its final kind,
/// and every template placeholder is checked against the table's columns.
class TableBinding {
 public:
  /// Throws Error(KindMismatch) when a rule targets a column of the wrong kind
  /// and Error(UnboundPlaceholder) when a template names a missing column.
  TableBinding(const LgTable& table, const ExtractionScript& script);

  const LgTable& table() const noexcept { return table_; }
  FeatureKind kind(std::size_t column) const { return table_.features[column].kind; }
  const ScriptRule* rule(std::size_t column) const { return rules_[column]; }
  const std::string& structure_label() const noexcept { return structure_label_; }
  const std::string& structure_template() const noexcept { return structure_template_; }
  const std::string& category() const noexcept { return category_; }

  Bindings bindings(const TableRow& row) const;

 private:
  LgTable table_;
  std::vector<const ScriptRule*> rules_;
  std::string structure_label_;
  std::string structure_template_;
  std::string category_;
};

/// One Base entry per row, in row order. `table` must already have been
/// through resolve_features.
std::vector<LexEntry> generate_base(const LgTable& table, const ExtractionScript& script,
                                    const Realizer& realizer = Realizer());

}  // namespace lgc
