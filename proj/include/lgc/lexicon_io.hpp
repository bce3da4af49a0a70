#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "lgc/lex_entry.hpp"

namespace lgc {

inline constexpr std::string_view kToolVersion = "lgc 1.0.0";

struct DocumentMetadata {
  std::string tool = std::string(kToolVersion);
  std::vector<std::string> tables;
  std::string script_hash;

  bool operator==(const DocumentMetadata&) const = default;
};

struct LexiconDocument {
  DocumentMetadata metadata;
  std::vector<LexEntry> entries;

  bool operator==(const LexiconDocument&) const = default;
};

enum class LexiconFormat { Text, Xml };

std::optional<LexiconFormat> lexicon_format_from(std::string_view name) noexcept;
/// XML if the first non-blank byte is `<`, text otherwise. Does not consume.
LexiconFormat detect_format(std::istream& in);

void export_text(std::ostream& out, const LexiconDocument& doc);
void export_xml(std::ostream& out, const LexiconDocument& doc);
std::string export_text(const LexiconDocument& doc);
std::string export_xml(const LexiconDocument& doc);

/// Throws Error(SchemaViolation | UnknownFormatVersion).
LexiconDocument import_lexicon(std::istream& in, LexiconFormat format, const std::string& source_name = {});
LexiconDocument import_lexicon(std::istream& in, const std::string& source_name = {});

}  // namespace lgc
