#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lgc/realizer.hpp"

namespace lgc {

enum class ProvenanceKind {
  Base,
  ParaphraseDirect,
  ParaphraseConstruction,
  Deletion,
  Permutation,
  Transformation,
  Intensification,
};

/// The six generation passes in canonical order.
inline constexpr std::array<ProvenanceKind, 6> kPassOrder = {
    ProvenanceKind::ParaphraseDirect, ProvenanceKind::ParaphraseConstruction,
    ProvenanceKind::Deletion,         ProvenanceKind::Permutation,
    ProvenanceKind::Transformation,   ProvenanceKind::Intensification};

std::string_view to_string(ProvenanceKind kind) noexcept;
std::optional<ProvenanceKind> provenance_kind_from(std::string_view name) noexcept;
/// Short tag used inside entry ids: pd, pc, del, perm, tr, int.
std::string_view pass_tag(ProvenanceKind kind) noexcept;
/// Position in kPassOrder, 0 for Base.
std::size_t pass_rank(ProvenanceKind kind) noexcept;

struct Provenance {
  ProvenanceKind kind = ProvenanceKind::Base;
  std::optional<std::string> parent;
  std::optional<std::string> feature_id;
  std::optional<std::string> template_text;

  bool operator==(const Provenance&) const = default;
};

enum class ArgumentSlot { N0, N1, N2, Poss0, Poss2 };
enum class Selection { Human, NonHuman, Any, Unspecified };

std::string_view to_string(ArgumentSlot slot) noexcept;
std::string_view to_string(Selection selection) noexcept;
std::optional<ArgumentSlot> argument_slot_from(std::string_view name) noexcept;
std::optional<Selection> selection_from(std::string_view name) noexcept;

struct ArgumentSpec {
  ArgumentSlot slot;
  Selection selection;

  bool operator==(const ArgumentSpec&) const = default;
};

/// Both `<slot> =: Nhum` and `<slot> =: N-hum` Plus → Any, one Plus → that
/// value, both Minus → Unspecified.
Selection selection_from_features(bool human, bool non_human) noexcept;

struct StructureVariant {
  std::string label;
  SurfaceForm surface;

  bool operator==(const StructureVariant&) const = default;
};

struct LexicalInfo {
  std::string category;
  std::string usage_note;
  std::vector<SurfaceForm> paraphrases;
  std::vector<StructureVariant> other_structures;
  std::vector<SurfaceForm> intensified;

  bool operator==(const LexicalInfo&) const = default;
};

struct Constructions {
  std::vector<std::string> ids;
  std::vector<std::string> internal_structures;  // class structure first

  bool operator==(const Constructions&) const = default;
};

struct Component {
  std::string slot;
  std::string text;  // empty for <E>

  bool operator==(const Component&) const = default;
};

struct LexicalFeature {
  std::string id;
  std::string text;  // empty for <E>

  bool operator==(const LexicalFeature&) const = default;
};

struct BinaryFeature {
  std::string id;
  bool value = false;

  bool operator==(const BinaryFeature&) const = default;
};

/// A duplicate folded into this entry by dedup.
struct MergedRef {
  std::string entry_id;
  Provenance provenance;

  bool operator==(const MergedRef&) const = default;
};

struct LexEntry {
  std::string entry_id;
  std::string table_id;
  SurfaceForm surface;
  std::vector<Component> components;
  std::vector<LexicalFeature> lexical_features;
  LexicalInfo lexical_info;
  std::vector<ArgumentSpec> arguments;
  Constructions constructions;
  std::vector<BinaryFeature> binary_features;  // column order
  Provenance provenance;
  std::vector<MergedRef> merged;

  bool is_base() const noexcept { return provenance.kind == ProvenanceKind::Base; }
  std::optional<bool> feature(std::string_view id) const;
  bool operator==(const LexEntry&) const = default;
};

/// `TABLE#row` for base entries, `TABLE#row#tag#ordinal` for variants.
std::string entry_id(std::string_view table_id, std::size_t row, std::string_view tag = {},
                     std::size_t ordinal = 0);

struct ParsedEntryId {
  std::string table_id;
  std::size_t row = 0;
  std::string tag;
  std::size_t ordinal = 0;
};

std::optional<ParsedEntryId> parse_entry_id(std::string_view id);

/// Rebuilds placeholder bindings from the row data an entry carries.
Bindings bindings_of(const LexEntry& entry);

}  // namespace lgc
