#include "lgc/lex_entry.hpp"

#include <charconv>

#include "lgc/text.hpp"

namespace lgc {

std::string_view to_string(ProvenanceKind kind) noexcept {
  switch (kind) {
    case ProvenanceKind::Base: return "Base";
    case ProvenanceKind::ParaphraseDirect: return "ParaphraseDirect";
    case ProvenanceKind::ParaphraseConstruction: return "ParaphraseConstruction";
    case ProvenanceKind::Deletion: return "Deletion";
    case ProvenanceKind::Permutation: return "Permutation";
    case ProvenanceKind::Transformation: return "Transformation";
    case ProvenanceKind::Intensification: return "Intensification";
  }
  return "Base";
}

std::optional<ProvenanceKind> provenance_kind_from(std::string_view name) noexcept {
  for (auto kind : {ProvenanceKind::Base, ProvenanceKind::ParaphraseDirect,
                    ProvenanceKind::ParaphraseConstruction, ProvenanceKind::Deletion,
                    ProvenanceKind::Permutation, ProvenanceKind::Transformation,
                    ProvenanceKind::Intensification}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

std::string_view pass_tag(ProvenanceKind kind) noexcept {
  switch (kind) {
    case ProvenanceKind::Base: return "";
    case ProvenanceKind::ParaphraseDirect: return "pd";
    case ProvenanceKind::ParaphraseConstruction: return "pc";
    case ProvenanceKind::Deletion: return "del";
    case ProvenanceKind::Permutation: return "perm";
    case ProvenanceKind::Transformation: return "tr";
    case ProvenanceKind::Intensification: return "int";
  }
  return "";
}

std::size_t pass_rank(ProvenanceKind kind) noexcept {
  for (std::size_t i = 0; i < kPassOrder.size(); ++i) {
    if (kPassOrder[i] == kind) return i + 1;
  }
  return 0;
}

std::string_view to_string(ArgumentSlot slot) noexcept {
  switch (slot) {
    case ArgumentSlot::N0: return "N0";
    case ArgumentSlot::N1: return "N1";
    case ArgumentSlot::N2: return "N2";
    case ArgumentSlot::Poss0: return "Poss0";
    case ArgumentSlot::Poss2: return "Poss2";
  }
  return "N0";
}

std::string_view to_string(Selection selection) noexcept {
  switch (selection) {
    case Selection::Human: return "Human";
    case Selection::NonHuman: return "NonHuman";
    case Selection::Any: return "Any";
    case Selection::Unspecified: return "Unspecified";
  }
  return "Unspecified";
}

std::optional<ArgumentSlot> argument_slot_from(std::string_view name) noexcept {
  for (auto slot : {ArgumentSlot::N0, ArgumentSlot::N1, ArgumentSlot::N2, ArgumentSlot::Poss0,
                    ArgumentSlot::Poss2}) {
    if (to_string(slot) == name) return slot;
  }
  return std::nullopt;
}

std::optional<Selection> selection_from(std::string_view name) noexcept {
  for (auto s : {Selection::Human, Selection::NonHuman, Selection::Any, Selection::Unspecified}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

Selection selection_from_features(bool human, bool non_human) noexcept {
  if (human && non_human) return Selection::Any;
  if (human) return Selection::Human;
  if (non_human) return Selection::NonHuman;
  return Selection::Unspecified;
}

std::optional<bool> LexEntry::feature(std::string_view id) const {
  for (const auto& f : binary_features) {
    if (f.id == id) return f.value;
  }
  return std::nullopt;
}

std::string entry_id(std::string_view table_id, std::size_t row, std::string_view tag, std::size_t ordinal) {
  std::string id(table_id);
  id += '#';
  id += std::to_string(row);
  if (!tag.empty()) {
    id += '#';
    id += tag;
    id += '#';
    id += std::to_string(ordinal);
  }
  return id;
}

std::optional<ParsedEntryId> parse_entry_id(std::string_view id) {
  const auto parts = text::split(id, '#');
  if (parts.size() != 2 && parts.size() != 4) return std::nullopt;
  auto number = [](const std::string& s) -> std::optional<std::size_t> {
    std::size_t value = 0;
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (ec != std::errc() || ptr != end || s.empty() || value == 0) return std::nullopt;
    return value;
  };
  ParsedEntryId parsed;
  parsed.table_id = parts[0];
  const auto row = number(parts[1]);
  if (parsed.table_id.empty() || !row) return std::nullopt;
  parsed.row = *row;
  if (parts.size() == 4) {
    const auto ordinal = number(parts[3]);
    if (parts[2].empty() || !ordinal) return std::nullopt;
    parsed.tag = parts[2];
    parsed.ordinal = *ordinal;
  }
  return parsed;
}

Bindings bindings_of(const LexEntry& entry) {
  Bindings b;
  auto cell = [](const std::string& text) { return text.empty() ? CellValue::empty() : CellValue::lex(text); };
  for (const auto& c : entry.components) b.bind_component(c.slot, cell(c.text));
  for (const auto& f : entry.lexical_features) b.bind_feature(f.id, cell(f.text));
  for (const auto& f : entry.binary_features) {
    b.bind_feature(f.id, f.value ? CellValue::plus() : CellValue::minus());
  }
  return b;
}

}  // namespace lgc
