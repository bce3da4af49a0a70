#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace lgc {

/// A script template in LG factorized notation: literal text, `@Col@` /
/// `@<ENT>Col@` placeholders and non-nested alternation groups `(a + b)`
/// where a standalone `E` is the empty alternative.
class FactorizedTemplate {
 public:
  struct Segment {
    std::string text;                       // literal run, when not a group
    std::vector<std::string> alternatives;  // non-empty for groups
    bool is_group() const noexcept { return !alternatives.empty(); }
    bool operator==(const Segment&) const = default;
  };

  /// Throws Error(NestedAlternation | UnterminatedGroup).
  static FactorizedTemplate parse(std::string_view source);

  const std::string& source() const noexcept { return source_; }
  const std::vector<Segment>& segments() const noexcept { return segments_; }
  std::size_t group_count() const noexcept;

  bool operator==(const FactorizedTemplate& other) const { return source_ == other.source_; }

 private:
  std::string source_;
  std::vector<Segment> segments_;
};

/// All flat templates, first group most significant, alternatives in written
/// order. Whitespace in each output is normalized.
std::vector<std::string> expand_alternation(const FactorizedTemplate& factorized);

struct PlaceholderRef {
  std::string column;  // without the `<ENT>` marker
  bool entry = false;  // written `@<ENT>column@`

  auto operator<=>(const PlaceholderRef&) const = default;
};

/// Placeholders of a flat template in surface order. Throws
/// Error(MalformedPlaceholder) on an unbalanced or empty `@...@`.
std::vector<PlaceholderRef> template_placeholders(std::string_view flat);

}  // namespace lgc
