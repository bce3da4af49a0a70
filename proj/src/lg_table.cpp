#include "lgc/lg_table.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "lgc/error.hpp"
#include "lgc/lex_entry.hpp"
#include "lgc/text.hpp"

namespace lgc {

namespace {

constexpr std::array<std::string_view, 21> kSlotNames = {
    "Prép", "Prép1", "Prép2", "Prépv", "Det", "Det1", "Det2", "Detv",  "C",     "C1",   "C2",
    "Cv",   "Modif pré-adj", "Adj", "N", "N1",  "N2",   "V",    "Conjc", "ConjS", "Adv"};

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

}  // namespace

std::string_view to_string(FeatureKind kind) noexcept {
  switch (kind) {
    case FeatureKind::Binary: return "Binary";
    case FeatureKind::EntryComponent: return "EntryComponent";
    case FeatureKind::AuxLexical: return "AuxLexical";
    case FeatureKind::Construction: return "Construction";
    case FeatureKind::ParaphraseDirect: return "ParaphraseDirect";
    case FeatureKind::Deletion: return "Deletion";
    case FeatureKind::Permutation: return "Permutation";
    case FeatureKind::Transformation: return "Transformation";
    case FeatureKind::Intensifier: return "Intensifier";
  }
  return "Binary";
}

std::string_view to_string(ClassValidity v) noexcept {
  switch (v) {
    case ClassValidity::AlwaysValid: return "AlwaysValid";
    case ClassValidity::AlwaysInvalid: return "AlwaysInvalid";
    case ClassValidity::PerEntry: return "PerEntry";
    case ClassValidity::Undefined: return "Undefined";
  }
  return "Undefined";
}

bool SlotRef::is_known(std::string_view name) noexcept {
  return std::find(kSlotNames.begin(), kSlotNames.end(), name) != kSlotNames.end();
}

SlotRef SlotRef::parse(std::string_view name) {
  if (!is_known(name)) {
    throw Error(ErrorCode::UnknownSlot, "unknown component symbol '" + std::string(name) + "'");
  }
  return SlotRef(std::string(name));
}

std::string_view FeatureDef::slot_name() const noexcept {
  std::string_view s = id;
  if (starts_with(s, kEntryMarker)) s.remove_prefix(kEntryMarker.size());
  return s;
}

CellValue CellValue::classify(std::string_view token) {
  if (token == "+") return plus();
  if (token == "-") return minus();
  if (token == kEmptySymbol) return empty();
  return lex(std::string(token));
}

std::string CellValue::token() const {
  switch (kind_) {
    case Kind::Plus: return "+";
    case Kind::Minus: return "-";
    case Kind::Empty: return std::string(kEmptySymbol);
    case Kind::Lex: return text_;
  }
  return text_;
}

std::optional<std::size_t> LgTable::column(std::string_view feature_id) const {
  for (std::size_t i = 0; i < features.size(); ++i) {
    if (features[i].id == feature_id) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> LgTable::entry_column(std::string_view slot) const {
  for (std::size_t i = 0; i < features.size(); ++i) {
    if (features[i].is_entry_component() && features[i].slot_name() == slot) return i;
  }
  return std::nullopt;
}

std::string LgTable::structure_label() const {
  std::vector<std::string> names;
  names.reserve(structure.size());
  for (const auto& slot : structure) names.push_back(slot.name());
  return text::join(names, " ");
}

LgTable parse_table(std::istream& source, std::string table_id, const std::string& source_name) {
  LgTable table;
  table.table_id = std::move(table_id);

  std::string line;
  std::size_t line_no = 0;
  if (!text::read_line(source, line, line_no) || text::trim(line).empty()) {
    throw Error(ErrorCode::MissingHeader, "table has no header line", source_name, line_no);
  }

  std::set<std::string> seen;
  for (const auto& raw : text::split(line, '\t')) {
    FeatureDef def;
    def.id = std::string(text::trim(raw));
    if (def.id.empty()) {
      throw Error(ErrorCode::MissingHeader, "empty feature id in header", source_name, line_no);
    }
    if (!seen.insert(def.id).second) {
      throw Error(ErrorCode::DuplicateFeatureId, "feature '" + def.id + "' appears twice",
                  source_name, line_no);
    }
    if (starts_with(def.id, kEntryMarker)) {
      def.kind = FeatureKind::EntryComponent;
      try {
        table.structure.push_back(SlotRef::parse(def.slot_name()));
      } catch (const Error& e) {
        throw Error(e.code(), "column '" + def.id + "': unknown component symbol", source_name,
                    line_no);
      }
    }
    table.features.push_back(std::move(def));
  }

  // First line where each non-entry column saw a binary / a lexical cell.
  std::vector<std::size_t> first_binary(table.features.size(), 0);
  std::vector<std::size_t> first_lexical(table.features.size(), 0);

  while (text::read_line(source, line, line_no)) {
    if (text::trim(line).empty()) continue;
    const auto raw_cells = text::split(line, '\t');
    if (raw_cells.size() != table.features.size()) {
      throw Error(ErrorCode::RowArityMismatch,
                  "expected " + std::to_string(table.features.size()) + " cells, found " +
                      std::to_string(raw_cells.size()),
                  source_name, line_no);
    }
    TableRow row;
    row.line = line_no;
    row.cells.reserve(raw_cells.size());
    for (std::size_t c = 0; c < raw_cells.size(); ++c) {
      const auto token = text::trim(raw_cells[c]);
      const auto& feature = table.features[c];
      if (token.empty()) {
        throw Error(ErrorCode::UnknownCellToken,
                    "blank cell in column '" + feature.id + "' (write <E> for an empty component)",
                    source_name, line_no);
      }
      auto cell = CellValue::classify(token);
      if (feature.is_entry_component() && cell.is_binary()) {
        throw Error(ErrorCode::UnknownCellToken,
                    "binary value '" + std::string(token) + "' in component column '" +
                        feature.id + "'",
                    source_name, line_no);
      }
      auto& first = cell.is_binary() ? first_binary[c] : first_lexical[c];
      if (first == 0) first = line_no;
      row.cells.push_back(std::move(cell));
    }
    table.rows.push_back(std::move(row));
  }

  for (std::size_t c = 0; c < table.features.size(); ++c) {
    auto& feature = table.features[c];
    if (feature.is_entry_component()) continue;
    if (first_binary[c] && first_lexical[c]) {
      throw Error(ErrorCode::UnknownCellToken,
                  "column '" + feature.id + "' mixes +/- with lexical values",
                  source_name, std::max(first_binary[c], first_lexical[c]));
    }
    feature.kind = first_lexical[c] ? FeatureKind::AuxLexical : FeatureKind::Binary;
  }
  return table;
}

std::string serialize_table(const LgTable& table) {
  std::string out;
  for (std::size_t i = 0; i < table.features.size(); ++i) {
    if (i) out += '\t';
    out += table.features[i].id;
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.cells.size(); ++i) {
      if (i) out += '\t';
      out += row.cells[i].token();
    }
    out += '\n';
  }
  return out;
}

std::vector<ValidationIssue> validate_table(const LgTable& table) {
  std::vector<ValidationIssue> issues;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const auto id = entry_id(table.table_id, r + 1);
    bool all_empty = true;
    for (std::size_t c = 0; c < table.features.size(); ++c) {
      const auto& feature = table.features[c];
      if (!feature.is_entry_component()) continue;
      const auto& cell = row.cells[c];
      if (cell.kind() != CellValue::Kind::Lex) continue;
      all_empty = false;
      for (const auto& word : text::split_ws(cell.text())) {
        if (word.size() > 1 && word.back() == '-') {
          issues.push_back({id, IssueKind::AmalgamSuspect,
                            "component " + std::string(feature.slot_name()) + " = '" +
                                cell.text() + "' ends with a hyphen"});
        }
      }
    }
    if (all_empty) {
      issues.push_back({id, IssueKind::EmptyEntry, "every lexical component is <E>"});
    }
  }
  return issues;
}

}  // namespace lgc
