#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lgc/lg_table.hpp"
#include "lgc/template.hpp"

namespace lgc {

enum class ActionKind {
  EmitConstruction,    // construction id; with templates it also carries paraphrases
  EmitParaphrase,      // direct paraphrase feature
  EmitSubstructure,    // deletion or permutation, see ScriptRule::substructure
  EmitTransformation,
  EmitIntensified,
  Note,                // lexical column copied into the usage note
  Binary,              // plain binary feature, stated explicitly
};

enum class SubstructureKind { Deletion, Permutation };

std::string_view to_string(ActionKind kind) noexcept;

/// `*` or a comma-separated list of table ids.
struct TablePattern {
  bool wildcard = false;
  std::vector<std::string> tables;

  bool matches(std::string_view table_id) const;
  std::string str() const;
  bool operator==(const TablePattern&) const = default;
};

struct ScriptRule {
  std::string feature_id;
  TablePattern applies_to;
  ActionKind action = ActionKind::Binary;
  SubstructureKind substructure = SubstructureKind::Deletion;
  std::string structure_label;  // substructure / transformation variants
  std::vector<FactorizedTemplate> templates;
  std::size_t line = 0;

  /// Feature kind this rule assigns to the column it names.
  FeatureKind feature_kind() const noexcept;
  bool operator==(const ScriptRule&) const = default;
};

/// Per-table settings: lexical category and the class structure.
struct TableDirective {
  TablePattern applies_to;
  std::optional<std::string> category;
  std::optional<std::string> structure_label;
  std::optional<std::string> structure_template;
  std::size_t line = 0;

  bool operator==(const TableDirective&) const = default;
};

struct ExtractionScript {
  std::vector<ScriptRule> rules;  // declaration order
  std::vector<TableDirective> directives;
  std::vector<std::string> symbols;  // closed list of symbolic literals
  std::string hash;                  // of the source bytes

  /// Rule for (table, feature); an explicit table list beats the wildcard.
  const ScriptRule* find(std::string_view table_id, std::string_view feature_id) const;
  std::string category_for(std::string_view table_id) const;
  std::optional<std::string> structure_label_for(std::string_view table_id) const;
  std::optional<std::string> structure_template_for(std::string_view table_id) const;
};

inline constexpr std::string_view kDefaultCategory = "adverb";

/// Line-oriented script:
///   symbols "Poss2" "Ddef" ...
///   PATTERN : category "adverb"
///   PATTERN : structure "label" ["template"]
///   PATTERN : "feature id" => ACTION [as "label"] ["template" {, "template"}]
/// `#` starts a comment outside quotes; a trailing `\` continues the line.
ExtractionScript parse_script(std::istream& source, const std::string& source_name = {});

/// FNV-1a 64-bit, lowercase hex.
std::string content_hash(std::string_view bytes);

}  // namespace lgc
