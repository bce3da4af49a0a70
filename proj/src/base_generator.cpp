#include "lgc/base_generator.hpp"

#include "lgc/error.hpp"
#include "lgc/text.hpp"

namespace lgc {

namespace {

void check_placeholders(const LgTable& table, std::string_view flat, const std::string& what,
                        std::size_t line) {
  for (const auto& ref : template_placeholders(flat)) {
    bool bound = table.entry_column(ref.column).has_value();
    if (!ref.entry) {
      if (const auto c = table.column(ref.column); c && table.features[*c].kind == FeatureKind::AuxLexical) {
        bound = true;
      }
    }
    if (!bound) {
      throw Error(ErrorCode::UnboundPlaceholder,
                  what + " references @" + (ref.entry ? std::string(kEntryMarker) : std::string()) +
                      ref.column + "@ but table " + table.table_id + " has no such lexical column",
                  {}, line);
    }
  }
}

}  // namespace

TableBinding::TableBinding(const LgTable& table, const ExtractionScript& script)
    : table_(table), rules_(table.features.size(), nullptr) {
  for (std::size_t c = 0; c < table_.features.size(); ++c) {
    auto& feature = table_.features[c];
    const auto* rule = script.find(table_.table_id, feature.id);
    if (rule == nullptr) continue;
    const bool lexical_rule = rule->action == ActionKind::Note;
    if (feature.is_entry_component() || (feature.kind == FeatureKind::AuxLexical) != lexical_rule) {
      throw Error(ErrorCode::KindMismatch,
                  "rule '" + std::string(to_string(rule->action)) + "' cannot apply to " +
                      std::string(to_string(feature.kind)) + " column '" + feature.id + "' of table " +
                      table_.table_id,
                  {}, rule->line);
    }
    feature.kind = rule->feature_kind();
    rules_[c] = rule;
    for (const auto& factorized : rule->templates) {
      for (const auto& flat : expand_alternation(factorized)) {
        check_placeholders(table_, flat, "rule for '" + feature.id + "'", rule->line);
      }
    }
  }

  category_ = script.category_for(table_.table_id);
  structure_label_ = script.structure_label_for(table_.table_id).value_or(table_.structure_label());
  if (auto custom = script.structure_template_for(table_.table_id)) {
    const auto flats = expand_alternation(FactorizedTemplate::parse(*custom));
    if (flats.size() != 1) {
      throw Error(ErrorCode::ScriptSyntax, "structure template of " + table_.table_id + " must not alternate");
    }
    structure_template_ = flats.front();
  } else {
    std::vector<std::string> parts;
    for (const auto& slot : table_.structure) parts.push_back("@<ENT>" + slot.name() + "@");
    structure_template_ = text::join(parts, " ");
  }
  check_placeholders(table_, structure_template_, "structure of " + table_.table_id, 0);
}

Bindings TableBinding::bindings(const TableRow& row) const {
  Bindings b;
  for (std::size_t c = 0; c < table_.features.size(); ++c) {
    const auto& feature = table_.features[c];
    if (feature.is_entry_component()) {
      b.bind_component(std::string(feature.slot_name()), row.cells[c]);
    } else {
      b.bind_feature(feature.id, row.cells[c]);
    }
  }
  return b;
}

std::vector<LexEntry> generate_base(const LgTable& table, const ExtractionScript& script,
                                    const Realizer& realizer) {
  const TableBinding binding(table, script);
  const auto& features = binding.table().features;

  std::vector<LexEntry> entries;
  entries.reserve(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = binding.table().rows[r];
    LexEntry entry;
    entry.entry_id = entry_id(table.table_id, r + 1);
    entry.table_id = table.table_id;
    entry.lexical_info.category = binding.category();

    std::vector<std::string> notes;
    for (std::size_t c = 0; c < features.size(); ++c) {
      const auto& feature = features[c];
      const auto& cell = row.cells[c];
      if (feature.is_entry_component()) {
        entry.components.push_back({std::string(feature.slot_name()), cell.text()});
      } else if (feature.kind == FeatureKind::AuxLexical) {
        entry.lexical_features.push_back({feature.id, cell.text()});
        if (binding.rule(c) != nullptr && !cell.text().empty()) notes.push_back(feature.id + ": " + cell.text());
      } else {
        entry.binary_features.push_back({feature.id, cell.is_plus()});
        if (feature.kind == FeatureKind::Construction && cell.is_plus()) {
          entry.constructions.ids.push_back(feature.id);
        }
      }
    }
    entry.lexical_info.usage_note = text::join(notes, "; ");

    for (const auto slot : {ArgumentSlot::N0, ArgumentSlot::N1, ArgumentSlot::N2}) {
      const std::string name(to_string(slot));
      const auto human = entry.feature(name + " =: Nhum");
      const auto non_human = entry.feature(name + " =: N-hum");
      if (!human && !non_human) continue;
      entry.arguments.push_back({slot, selection_from_features(human.value_or(false), non_human.value_or(false))});
    }

    entry.constructions.internal_structures.push_back(binding.structure_label());
    try {
      entry.surface = realizer.realize(binding.structure_template(), binding.bindings(row));
    } catch (const Error& e) {
      throw Error(e.code(), std::string(e.what()) + " (row " + entry.entry_id + ")", {}, row.line);
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

}  // namespace lgc
