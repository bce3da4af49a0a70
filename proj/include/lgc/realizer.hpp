#pragma once

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lgc/lg_table.hpp"
#include "lgc/template.hpp"

namespace lgc {

struct SurfaceForm {
  std::vector<std::string> tokens;  // before contraction and elision
  std::string rendered;

  bool empty() const noexcept { return rendered.empty(); }
  bool operator==(const SurfaceForm&) const = default;
};

struct ContractionRule {
  std::string left;
  std::string right;
  std::string result;

  bool operator==(const ContractionRule&) const = default;
};

struct ElisionRule {
  std::string word;    // de
  std::string elided;  // d'

  bool operator==(const ElisionRule&) const = default;
};

/// Closed, ordered rule tables. First matching contraction wins.
struct MorphoRules {
  std::vector<ContractionRule> contractions;
  std::vector<ElisionRule> elisions;
  std::vector<std::string> aspirated_h;  // h-initial words that block elision

  static const MorphoRules& french();

  const ElisionRule* elision_for(std::string_view word) const;
  /// Vowel or mute-h onset.
  bool vowel_onset(std::string_view token) const;
};

/// Plain sectioned format:
///   [contraction]   de le = du
///   [elision]       de = d'
///   [aspirated-h]   haut
/// A loaded file replaces the built-in tables entirely.
MorphoRules parse_morpho(std::istream& source, const std::string& source_name = {});

/// How symbolic template literals (Poss2, Ddef, ...) are realized. A symbol
/// without a replacement is kept verbatim.
class SymbolPolicy {
 public:
  /// Poss2 → son, Ddef → la; N and Nhum kept.
  static SymbolPolicy defaults();
  static SymbolPolicy keep_all() { return {}; }
  /// "default", "keep", optionally followed by ",SYM=value" overrides.
  static SymbolPolicy parse(std::string_view spec);

  void set(std::string symbol, std::string replacement);
  std::optional<std::string> replacement(std::string_view symbol) const;
  const std::map<std::string, std::string, std::less<>>& entries() const noexcept { return map_; }

 private:
  std::map<std::string, std::string, std::less<>> map_;
};

/// Placeholder values for one table row: entry components by slot name and
/// the other lexical/binary columns by feature id.
class Bindings {
 public:
  void bind_component(std::string slot, CellValue value);
  void bind_feature(std::string feature_id, CellValue value);

  /// `@<ENT>X@` looks up component X. `@X@` looks up column X and falls back
  /// to component X.
  const CellValue* lookup(const PlaceholderRef& ref) const;

 private:
  std::map<std::string, CellValue, std::less<>> components_;
  std::map<std::string, CellValue, std::less<>> features_;
};

std::vector<std::string> contract(std::vector<std::string> tokens,
                                  const MorphoRules& rules = MorphoRules::french());
std::vector<std::string> elide(std::vector<std::string> tokens,
                               const MorphoRules& rules = MorphoRules::french());
/// Single spaces, none after a token ending in an apostrophe or a hyphen.
std::string render(const std::vector<std::string>& tokens);

bool is_symbolic_literal(std::string_view token) noexcept;

class Realizer {
 public:
  Realizer();
  Realizer(MorphoRules rules, SymbolPolicy policy, std::vector<std::string> symbols);

  /// Throws Error(UnboundPlaceholder | UnknownSymbolicToken | MalformedPlaceholder).
  SurfaceForm realize(std::string_view flat_template, const Bindings& bindings) const;

  const MorphoRules& rules() const noexcept { return rules_; }
  const SymbolPolicy& policy() const noexcept { return policy_; }

 private:
  bool known_symbol(std::string_view token) const;

  MorphoRules rules_;
  SymbolPolicy policy_;
  std::vector<std::string> symbols_;
};

SurfaceForm realize(std::string_view flat_template, const Bindings& bindings,
                    const SymbolPolicy& policy = SymbolPolicy::defaults());

}  // namespace lgc
