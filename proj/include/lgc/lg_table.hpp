#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lgc/issue.hpp"

namespace lgc {

enum class FeatureKind {
  Binary,
  EntryComponent,
  AuxLexical,
  Construction,
  ParaphraseDirect,
  Deletion,
  Permutation,
  Transformation,
  Intensifier,
};

std::string_view to_string(FeatureKind kind) noexcept;

inline constexpr std::string_view kEntryMarker = "<ENT>";
inline constexpr std::string_view kEmptySymbol = "<E>";

/// A lexical component symbol (Prép1, Det, Modif pré-adj, ...). The set of
/// names is closed.
class SlotRef {
 public:
  /// Throws Error(UnknownSlot) for names outside the closed set.
  static SlotRef parse(std::string_view name);
  static bool is_known(std::string_view name) noexcept;

  const std::string& name() const noexcept { return name_; }
  auto operator<=>(const SlotRef&) const = default;

 private:
  explicit SlotRef(std::string name) : name_(std::move(name)) {}
  std::string name_;
};

struct FeatureDef {
  std::string id;
  FeatureKind kind = FeatureKind::Binary;
  bool synthetic = false;  // appended by resolve_features

  bool is_entry_component() const noexcept { return kind == FeatureKind::EntryComponent; }
  bool is_lexical() const noexcept {
    return kind == FeatureKind::EntryComponent || kind == FeatureKind::AuxLexical;
  }
  /// Slot name for `<ENT>X` columns, the id itself otherwise.
  std::string_view slot_name() const noexcept;

  bool operator==(const FeatureDef&) const = default;
};

class CellValue {
 public:
  enum class Kind { Plus, Minus, Lex, Empty };

  static CellValue plus() { return CellValue(Kind::Plus, {}); }
  static CellValue minus() { return CellValue(Kind::Minus, {}); }
  static CellValue empty() { return CellValue(Kind::Empty, {}); }
  static CellValue lex(std::string text) { return CellValue(Kind::Lex, std::move(text)); }
  /// Classifies a raw cell token: `+`, `-`, `<E>`, anything else is text.
  static CellValue classify(std::string_view token);

  Kind kind() const noexcept { return kind_; }
  bool is_binary() const noexcept { return kind_ == Kind::Plus || kind_ == Kind::Minus; }
  bool is_plus() const noexcept { return kind_ == Kind::Plus; }
  const std::string& text() const noexcept { return text_; }
  /// The cell as written in a table file.
  std::string token() const;

  bool operator==(const CellValue&) const = default;

 private:
  CellValue(Kind kind, std::string text) : kind_(kind), text_(std::move(text)) {}
  Kind kind_;
  std::string text_;
};

struct TableRow {
  std::vector<CellValue> cells;
  std::size_t line = 0;  // source line, 0 for synthetic rows

  bool operator==(const TableRow& other) const { return cells == other.cells; }
};

struct LgTable {
  std::string table_id;
  std::vector<SlotRef> structure;  // `<ENT>` columns in header order
  std::vector<FeatureDef> features;
  std::vector<TableRow> rows;

  std::optional<std::size_t> column(std::string_view feature_id) const;
  std::optional<std::size_t> entry_column(std::string_view slot) const;
  /// "Prép1 Det1 C1 ..." built from the structure slots.
  std::string structure_label() const;

  bool operator==(const LgTable&) const = default;
};

/// Parses a tab-delimited table: line 1 holds the feature ids, every other
/// non-blank line is a row. Cells are trimmed.
LgTable parse_table(std::istream& source, std::string table_id, const std::string& source_name = {});
std::string serialize_table(const LgTable& table);

/// Reports structural problems without touching the table.
std::vector<ValidationIssue> validate_table(const LgTable& table);

// ---------------------------------------------------------------------------

enum class ClassValidity { AlwaysValid, AlwaysInvalid, PerEntry, Undefined };

std::string_view to_string(ClassValidity v) noexcept;

struct ClassMatrix {
  std::vector<std::string> classes;
  std::vector<std::string> features;
  std::vector<std::vector<ClassValidity>> cells;  // [class][feature]

  bool has_class(std::string_view id) const;
  ClassValidity at(std::string_view class_id, std::string_view feature_id) const;
};

/// Header row lists feature ids after a leading label cell; the first cell of
/// each other row is a class id. Alphabet: `+`, `-`, `o`, blank.
ClassMatrix parse_class_matrix(std::istream& source, const std::string& source_name = {});

/// Appends all-Plus / all-Minus columns for class-constant features the table
/// does not carry. Idempotent.
LgTable resolve_features(const LgTable& table, const ClassMatrix& classes);

}  // namespace lgc
