#include "lgc/lexicon_io.hpp"

#include <charconv>
#include <set>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "lgc/error.hpp"
#include "lgc/text.hpp"

namespace lgc {

namespace {

namespace pt = boost::property_tree;

constexpr std::string_view kTextMagic = "lgx";
constexpr std::string_view kVersion = "1";

constexpr std::string_view kLexical = "[Lexical information]";
constexpr std::string_view kArguments = "[Arguments]";
constexpr std::string_view kConstructions = "[Constructions]";
constexpr std::string_view kFeatures = "[Features]";
constexpr std::string_view kProvenance = "[Provenance]";

// --- text -----------------------------------------------------------------

std::string escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (const char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  return out;
}

std::optional<std::string> unescape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '\\') {
      out += s[i];
      continue;
    }
    if (++i == s.size()) return std::nullopt;
    switch (s[i]) {
      case '\\': out += '\\'; break;
      case 't': out += '\t'; break;
      case 'n': out += '\n'; break;
      case 'r': out += '\r'; break;
      default: return std::nullopt;
    }
  }
  return out;
}

class LineWriter {
 public:
  explicit LineWriter(std::ostream& out) : out_(out) {}

  LineWriter& key(std::string_view k) {
    out_ << k;
    return *this;
  }
  LineWriter& field(std::string_view v) {
    out_ << '\t' << escape(v);
    return *this;
  }
  LineWriter& fields(const std::vector<std::string>& vs) {
    for (const auto& v : vs) field(v);
    return *this;
  }
  void end() { out_ << '\n'; }

 private:
  std::ostream& out_;
};

void write_surface_fields(LineWriter& w, const SurfaceForm& s) { w.field(s.rendered).fields(s.tokens); }

void write_entry_text(std::ostream& out, const LexEntry& e) {
  LineWriter w(out);
  w.key("entry").field(e.entry_id).end();
  w.key("table").field(e.table_id).end();
  w.key("surface").field(e.surface.rendered).end();
  w.key("tokens").fields(e.surface.tokens).end();

  out << kLexical << '\n';
  w.key("category").field(e.lexical_info.category).end();
  w.key("usage-note").field(e.lexical_info.usage_note).end();
  for (const auto& c : e.components) w.key("component").field(c.slot).field(c.text).end();
  for (const auto& f : e.lexical_features) w.key("lexical").field(f.id).field(f.text).end();
  for (const auto& p : e.lexical_info.paraphrases) {
    w.key("paraphrase");
    write_surface_fields(w, p);
    w.end();
  }
  for (const auto& o : e.lexical_info.other_structures) {
    w.key("other-structure").field(o.label);
    write_surface_fields(w, o.surface);
    w.end();
  }
  for (const auto& i : e.lexical_info.intensified) {
    w.key("intensified");
    write_surface_fields(w, i);
    w.end();
  }

  out << kArguments << '\n';
  for (const auto& a : e.arguments) w.key("argument").field(to_string(a.slot)).field(to_string(a.selection)).end();

  out << kConstructions << '\n';
  for (const auto& id : e.constructions.ids) w.key("construction").field(id).end();
  for (const auto& s : e.constructions.internal_structures) w.key("structure").field(s).end();

  out << kFeatures << '\n';
  for (const auto& f : e.binary_features) w.key("feature").field(f.id).field(f.value ? "+" : "-").end();

  out << kProvenance << '\n';
  auto provenance = [&](const Provenance& p, std::string_view prefix) {
    const std::string pre(prefix);
    if (p.parent) w.key(pre + "parent").field(*p.parent).end();
    if (p.feature_id) w.key(pre + "feature-id").field(*p.feature_id).end();
    if (p.template_text) w.key(pre + "template").field(*p.template_text).end();
  };
  w.key("kind").field(to_string(e.provenance.kind)).end();
  provenance(e.provenance, "");
  for (const auto& m : e.merged) {
    w.key("merged").field(m.entry_id).field(to_string(m.provenance.kind)).end();
    provenance(m.provenance, "merged-");
  }
  out << "end\n";
}

class TextReader {
 public:
  TextReader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

  LexiconDocument read() {
    LexiconDocument doc;
    std::vector<std::string> f;
    if (!next(f)) throw fail(ErrorCode::SchemaViolation, "empty input");
    if (f.size() != 2 || f[0] != kTextMagic) throw fail(ErrorCode::SchemaViolation, "missing 'lgx' header");
    if (f[1] != kVersion) throw fail(ErrorCode::UnknownFormatVersion, "unsupported lgx version '" + f[1] + "'");

    std::optional<std::size_t> declared;
    bool have_tool = false;
    bool have_hash = false;
    bool in_entries = false;
    std::set<std::string, std::less<>> ids;
    while (next(f)) {
      if (f[0] == "meta" && !in_entries) {
        if (f.size() != 3) throw fail(ErrorCode::SchemaViolation, "meta line needs a key and a value");
        if (f[1] == "tool") {
          doc.metadata.tool = f[2];
          have_tool = true;
        } else if (f[1] == "table") {
          doc.metadata.tables.push_back(f[2]);
        } else if (f[1] == "script-hash") {
          doc.metadata.script_hash = f[2];
          have_hash = true;
        } else if (f[1] == "entries") {
          declared = number(f[2]);
        } else {
          throw fail(ErrorCode::SchemaViolation, "unknown meta key '" + f[1] + "'");
        }
      } else if (f[0] == "entry" && f.size() == 2) {
        in_entries = true;
        auto e = entry(f[1]);
        if (!ids.insert(e.entry_id).second) throw fail(ErrorCode::SchemaViolation, "duplicate entry id " + e.entry_id);
        doc.entries.push_back(std::move(e));
      } else {
        throw fail(ErrorCode::SchemaViolation, "unexpected line '" + f[0] + "'");
      }
    }
    if (!have_tool || !have_hash || !declared) throw fail(ErrorCode::SchemaViolation, "incomplete metadata header");
    if (*declared != doc.entries.size()) {
      throw fail(ErrorCode::SchemaViolation, "header declares " + std::to_string(*declared) + " entries, found " +
                                                 std::to_string(doc.entries.size()));
    }
    return doc;
  }

 private:
  enum class Section { Head, Lexical, Arguments, Constructions, Features, Provenance };

  Error fail(ErrorCode code, const std::string& message) const { return Error(code, message, source_, line_no_); }

  // Skips blank lines. Splits on tabs and unescapes every field but the key.
  bool next(std::vector<std::string>& fields) {
    std::string line;
    while (text::read_line(in_, line, line_no_)) {
      if (line.empty()) continue;
      fields = text::split(line, '\t');
      for (std::size_t i = 1; i < fields.size(); ++i) {
        auto u = unescape(fields[i]);
        if (!u) throw fail(ErrorCode::SchemaViolation, "bad escape sequence");
        fields[i] = std::move(*u);
      }
      return true;
    }
    return false;
  }

  std::size_t number(const std::string& s) const {
    std::size_t n = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw fail(ErrorCode::SchemaViolation, "expected a count, found '" + s + "'");
    }
    return n;
  }

  void arity(const std::vector<std::string>& f, std::size_t n) const {
    if (f.size() != n) {
      throw fail(ErrorCode::SchemaViolation,
                 "'" + f[0] + "' expects " + std::to_string(n - 1) + " fields, found " + std::to_string(f.size() - 1));
    }
  }

  void at_least(const std::vector<std::string>& f, std::size_t n) const {
    if (f.size() < n) throw fail(ErrorCode::SchemaViolation, "'" + f[0] + "' is missing fields");
  }

  static SurfaceForm surface_from(const std::vector<std::string>& f, std::size_t first) {
    SurfaceForm s;
    s.rendered = f[first];
    s.tokens.assign(f.begin() + static_cast<std::ptrdiff_t>(first) + 1, f.end());
    return s;
  }

  LexEntry entry(const std::string& id) {
    LexEntry e;
    e.entry_id = id;
    Section section = Section::Head;
    Provenance* target = &e.provenance;
    bool have_kind = false;
    std::vector<std::string> f;
    while (next(f)) {
      const auto& k = f[0];
      if (k == "end") {
        arity(f, 1);
        if (!have_kind) throw fail(ErrorCode::SchemaViolation, "entry " + id + " has no provenance kind");
        return e;
      }
      if (k == kLexical || k == kArguments || k == kConstructions || k == kFeatures || k == kProvenance) {
        arity(f, 1);
        const Section s = k == kLexical         ? Section::Lexical
                          : k == kArguments     ? Section::Arguments
                          : k == kConstructions ? Section::Constructions
                          : k == kFeatures      ? Section::Features
                                                : Section::Provenance;
        if (s <= section) throw fail(ErrorCode::SchemaViolation, "section " + k + " out of order");
        section = s;
        continue;
      }
      switch (section) {
        case Section::Head:
          if (k == "table") {
            arity(f, 2);
            e.table_id = f[1];
          } else if (k == "surface") {
            arity(f, 2);
            e.surface.rendered = f[1];
          } else if (k == "tokens") {
            e.surface.tokens.assign(f.begin() + 1, f.end());
          } else {
            unknown(k);
          }
          break;
        case Section::Lexical:
          if (k == "category") {
            arity(f, 2);
            e.lexical_info.category = f[1];
          } else if (k == "usage-note") {
            arity(f, 2);
            e.lexical_info.usage_note = f[1];
          } else if (k == "component") {
            arity(f, 3);
            e.components.push_back({f[1], f[2]});
          } else if (k == "lexical") {
            arity(f, 3);
            e.lexical_features.push_back({f[1], f[2]});
          } else if (k == "paraphrase") {
            at_least(f, 2);
            e.lexical_info.paraphrases.push_back(surface_from(f, 1));
          } else if (k == "other-structure") {
            at_least(f, 3);
            e.lexical_info.other_structures.push_back({f[1], surface_from(f, 2)});
          } else if (k == "intensified") {
            at_least(f, 2);
            e.lexical_info.intensified.push_back(surface_from(f, 1));
          } else {
            unknown(k);
          }
          break;
        case Section::Arguments: {
          if (k != "argument") unknown(k);
          arity(f, 3);
          const auto slot = argument_slot_from(f[1]);
          const auto sel = selection_from(f[2]);
          if (!slot || !sel) throw fail(ErrorCode::SchemaViolation, "bad argument '" + f[1] + " " + f[2] + "'");
          e.arguments.push_back({*slot, *sel});
          break;
        }
        case Section::Constructions:
          if (k == "construction") {
            arity(f, 2);
            e.constructions.ids.push_back(f[1]);
          } else if (k == "structure") {
            arity(f, 2);
            e.constructions.internal_structures.push_back(f[1]);
          } else {
            unknown(k);
          }
          break;
        case Section::Features:
          if (k != "feature") unknown(k);
          arity(f, 3);
          if (f[2] != "+" && f[2] != "-") throw fail(ErrorCode::SchemaViolation, "feature value must be + or -");
          e.binary_features.push_back({f[1], f[2] == "+"});
          break;
        case Section::Provenance:
          if (k == "kind") {
            arity(f, 2);
            e.provenance.kind = kind(f[1]);
            have_kind = true;
          } else if (k == "merged") {
            arity(f, 3);
            e.merged.push_back({f[1], Provenance{kind(f[2]), {}, {}, {}}});
            target = &e.merged.back().provenance;
          } else if (k == "parent" || k == "feature-id" || k == "template") {
            arity(f, 2);
            if (!e.merged.empty()) throw fail(ErrorCode::SchemaViolation, "'" + k + "' after merged records");
            optional_field(e.provenance, k, f[1]);
          } else if (k == "merged-parent" || k == "merged-feature-id" || k == "merged-template") {
            arity(f, 2);
            if (e.merged.empty()) throw fail(ErrorCode::SchemaViolation, "'" + k + "' before any merged record");
            optional_field(*target, k.substr(7), f[1]);
          } else {
            unknown(k);
          }
          break;
      }
    }
    throw fail(ErrorCode::SchemaViolation, "entry " + id + " is not terminated by 'end'");
  }

  void optional_field(Provenance& p, std::string_view key, const std::string& value) const {
    auto& slot = key == "parent" ? p.parent : key == "feature-id" ? p.feature_id : p.template_text;
    if (slot) throw fail(ErrorCode::SchemaViolation, "repeated provenance field '" + std::string(key) + "'");
    slot = value;
  }

  ProvenanceKind kind(const std::string& name) const {
    const auto k = provenance_kind_from(name);
    if (!k) throw fail(ErrorCode::SchemaViolation, "unknown provenance kind '" + name + "'");
    return *k;
  }

  [[noreturn]] void unknown(const std::string& key) const {
    throw fail(ErrorCode::SchemaViolation, "unknown key '" + key + "'");
  }

  std::istream& in_;
  std::string source_;
  std::size_t line_no_ = 0;
};

// --- xml ------------------------------------------------------------------

pt::ptree& attr(pt::ptree& node, const std::string& name, const std::string& value) {
  node.put("<xmlattr>." + name, value);
  return node;
}

pt::ptree surface_node(const SurfaceForm& s) {
  pt::ptree node;
  attr(node, "text", s.rendered);
  for (const auto& t : s.tokens) {
    pt::ptree token;
    attr(token, "text", t);
    node.add_child("token", token);
  }
  return node;
}

void provenance_attrs(pt::ptree& node, const Provenance& p) {
  attr(node, "kind", std::string(to_string(p.kind)));
  if (p.parent) attr(node, "parent", *p.parent);
  if (p.feature_id) attr(node, "feature-id", *p.feature_id);
  if (p.template_text) attr(node, "template", *p.template_text);
}

pt::ptree entry_node(const LexEntry& e) {
  pt::ptree node;
  attr(node, "id", e.entry_id);
  attr(node, "table", e.table_id);
  node.add_child("surface", surface_node(e.surface));

  pt::ptree lexical;
  attr(lexical, "category", e.lexical_info.category);
  attr(lexical, "usage-note", e.lexical_info.usage_note);
  for (const auto& c : e.components) {
    pt::ptree n;
    attr(attr(n, "slot", c.slot), "text", c.text);
    lexical.add_child("component", n);
  }
  for (const auto& f : e.lexical_features) {
    pt::ptree n;
    attr(attr(n, "id", f.id), "text", f.text);
    lexical.add_child("lexical", n);
  }
  for (const auto& p : e.lexical_info.paraphrases) lexical.add_child("paraphrase", surface_node(p));
  for (const auto& o : e.lexical_info.other_structures) {
    auto n = surface_node(o.surface);
    attr(n, "label", o.label);
    lexical.add_child("other-structure", n);
  }
  for (const auto& i : e.lexical_info.intensified) lexical.add_child("intensified", surface_node(i));
  node.add_child("lexical-information", lexical);

  pt::ptree arguments;
  for (const auto& a : e.arguments) {
    pt::ptree n;
    attr(attr(n, "slot", std::string(to_string(a.slot))), "selection", std::string(to_string(a.selection)));
    arguments.add_child("argument", n);
  }
  node.add_child("arguments", arguments);

  pt::ptree constructions;
  for (const auto& id : e.constructions.ids) {
    pt::ptree n;
    attr(n, "id", id);
    constructions.add_child("construction", n);
  }
  for (const auto& s : e.constructions.internal_structures) {
    pt::ptree n;
    attr(n, "label", s);
    constructions.add_child("structure", n);
  }
  node.add_child("constructions", constructions);

  pt::ptree features;
  for (const auto& f : e.binary_features) {
    pt::ptree n;
    attr(attr(n, "id", f.id), "value", f.value ? "+" : "-");
    features.add_child("feature", n);
  }
  node.add_child("features", features);

  pt::ptree provenance;
  provenance_attrs(provenance, e.provenance);
  for (const auto& m : e.merged) {
    pt::ptree n;
    attr(n, "id", m.entry_id);
    provenance_attrs(n, m.provenance);
    provenance.add_child("merged", n);
  }
  node.add_child("provenance", provenance);
  return node;
}

class XmlReader {
 public:
  explicit XmlReader(std::string source) : source_(std::move(source)) {}

  LexiconDocument read(std::istream& in) {
    pt::ptree tree;
    try {
      pt::read_xml(in, tree, pt::xml_parser::no_comments);
    } catch (const pt::ptree_error& e) {
      throw fail(std::string("malformed XML: ") + e.what());
    }
    auto root_it = tree.find("lgx");
    if (root_it == tree.not_found() || tree.size() != 1) throw fail("root element must be <lgx>");
    const auto& root = root_it->second;
    const auto version = get(root, "version");
    if (version != kVersion) {
      throw Error(ErrorCode::UnknownFormatVersion, "unsupported lgx.xml version '" + version + "'", source_);
    }

    LexiconDocument doc;
    bool have_meta = false;
    std::set<std::string, std::less<>> ids;
    for (const auto& [name, child] : root) {
      if (name == "<xmlattr>") continue;
      if (name == "meta") {
        if (have_meta) throw fail("repeated <meta>");
        have_meta = true;
        doc.metadata.tool = get(child, "tool");
        doc.metadata.script_hash = get(child, "script-hash");
        for (const auto& [tname, table] : child) {
          if (tname == "<xmlattr>") continue;
          if (tname != "table") throw fail("unexpected <" + tname + "> in <meta>");
          doc.metadata.tables.push_back(get(table, "id"));
        }
      } else if (name == "entry") {
        auto e = entry(child);
        if (!ids.insert(e.entry_id).second) throw fail("duplicate entry id " + e.entry_id);
        doc.entries.push_back(std::move(e));
      } else {
        throw fail("unexpected <" + name + ">");
      }
    }
    if (!have_meta) throw fail("missing <meta>");
    const auto declared = get(root, "entries");
    if (declared != std::to_string(doc.entries.size())) {
      throw fail("header declares " + declared + " entries, found " + std::to_string(doc.entries.size()));
    }
    return doc;
  }

 private:
  Error fail(const std::string& message) const { return Error(ErrorCode::SchemaViolation, message, source_); }

  std::string get(const pt::ptree& node, const std::string& name) const {
    const auto v = opt(node, name);
    if (!v) throw fail("missing attribute '" + name + "'");
    return *v;
  }

  static std::optional<std::string> opt(const pt::ptree& node, const std::string& name) {
    const auto attrs = node.get_child_optional("<xmlattr>");
    if (!attrs) return std::nullopt;
    const auto it = attrs->find(name);
    if (it == attrs->not_found()) return std::nullopt;
    return it->second.data();
  }

  template <typename F>
  void children(const pt::ptree& node, const std::string& where, F&& on_child) const {
    for (const auto& [name, child] : node) {
      if (name == "<xmlattr>") continue;
      if (!on_child(name, child)) throw fail("unexpected <" + name + "> in <" + where + ">");
    }
  }

  SurfaceForm surface(const pt::ptree& node, const std::string& where) const {
    SurfaceForm s;
    s.rendered = get(node, "text");
    children(node, where, [&](const std::string& name, const pt::ptree& child) {
      if (name != "token") return false;
      s.tokens.push_back(get(child, "text"));
      return true;
    });
    return s;
  }

  Provenance provenance(const pt::ptree& node) const {
    Provenance p;
    const auto k = provenance_kind_from(get(node, "kind"));
    if (!k) throw fail("unknown provenance kind '" + get(node, "kind") + "'");
    p.kind = *k;
    p.parent = opt(node, "parent");
    p.feature_id = opt(node, "feature-id");
    p.template_text = opt(node, "template");
    return p;
  }

  const pt::ptree& section(const pt::ptree& entry, const std::string& name) const {
    const auto child = entry.get_child_optional(name);
    if (!child) throw fail("entry lacks <" + name + ">");
    return *child;
  }

  LexEntry entry(const pt::ptree& node) const {
    LexEntry e;
    e.entry_id = get(node, "id");
    e.table_id = get(node, "table");
    e.surface = surface(section(node, "surface"), "surface");

    const auto& lexical = section(node, "lexical-information");
    e.lexical_info.category = get(lexical, "category");
    e.lexical_info.usage_note = get(lexical, "usage-note");
    children(lexical, "lexical-information", [&](const std::string& name, const pt::ptree& c) {
      if (name == "component") {
        e.components.push_back({get(c, "slot"), get(c, "text")});
      } else if (name == "lexical") {
        e.lexical_features.push_back({get(c, "id"), get(c, "text")});
      } else if (name == "paraphrase") {
        e.lexical_info.paraphrases.push_back(surface(c, name));
      } else if (name == "other-structure") {
        e.lexical_info.other_structures.push_back({get(c, "label"), surface(c, name)});
      } else if (name == "intensified") {
        e.lexical_info.intensified.push_back(surface(c, name));
      } else {
        return false;
      }
      return true;
    });

    children(section(node, "arguments"), "arguments", [&](const std::string& name, const pt::ptree& c) {
      if (name != "argument") return false;
      const auto slot = argument_slot_from(get(c, "slot"));
      const auto sel = selection_from(get(c, "selection"));
      if (!slot || !sel) throw fail("bad argument in entry " + e.entry_id);
      e.arguments.push_back({*slot, *sel});
      return true;
    });

    children(section(node, "constructions"), "constructions", [&](const std::string& name, const pt::ptree& c) {
      if (name == "construction") {
        e.constructions.ids.push_back(get(c, "id"));
      } else if (name == "structure") {
        e.constructions.internal_structures.push_back(get(c, "label"));
      } else {
        return false;
      }
      return true;
    });

    children(section(node, "features"), "features", [&](const std::string& name, const pt::ptree& c) {
      if (name != "feature") return false;
      const auto v = get(c, "value");
      if (v != "+" && v != "-") throw fail("feature value must be + or -");
      e.binary_features.push_back({get(c, "id"), v == "+"});
      return true;
    });

    const auto& prov = section(node, "provenance");
    e.provenance = provenance(prov);
    children(prov, "provenance", [&](const std::string& name, const pt::ptree& c) {
      if (name != "merged") return false;
      e.merged.push_back({get(c, "id"), provenance(c)});
      return true;
    });

    children(node, "entry", [](const std::string& name, const pt::ptree&) {
      return name == "surface" || name == "lexical-information" || name == "arguments" || name == "constructions" ||
             name == "features" || name == "provenance";
    });
    return e;
  }

  std::string source_;
};

}  // namespace

std::optional<LexiconFormat> lexicon_format_from(std::string_view name) noexcept {
  if (name == "text" || name == "lgx") return LexiconFormat::Text;
  if (name == "xml" || name == "lgx.xml") return LexiconFormat::Xml;
  return std::nullopt;
}

LexiconFormat detect_format(std::istream& in) {
  const auto start = in.tellg();
  LexiconFormat format = LexiconFormat::Text;
  char c = 0;
  while (in.get(c)) {
    if (text::is_space(c)) continue;
    if (c == '<') format = LexiconFormat::Xml;
    break;
  }
  in.clear();
  in.seekg(start);
  return format;
}

void export_text(std::ostream& out, const LexiconDocument& doc) {
  LineWriter w(out);
  w.key(kTextMagic).field(kVersion).end();
  w.key("meta").field("tool").field(doc.metadata.tool).end();
  for (const auto& t : doc.metadata.tables) w.key("meta").field("table").field(t).end();
  w.key("meta").field("script-hash").field(doc.metadata.script_hash).end();
  w.key("meta").field("entries").field(std::to_string(doc.entries.size())).end();
  for (const auto& e : doc.entries) {
    out << '\n';
    write_entry_text(out, e);
  }
}

void export_xml(std::ostream& out, const LexiconDocument& doc) {
  pt::ptree root;
  attr(root, "version", std::string(kVersion));
  attr(root, "entries", std::to_string(doc.entries.size()));
  pt::ptree meta;
  attr(meta, "tool", doc.metadata.tool);
  attr(meta, "script-hash", doc.metadata.script_hash);
  for (const auto& t : doc.metadata.tables) {
    pt::ptree table;
    attr(table, "id", t);
    meta.add_child("table", table);
  }
  root.add_child("meta", meta);
  for (const auto& e : doc.entries) root.add_child("entry", entry_node(e));
  pt::ptree tree;
  tree.add_child("lgx", root);
  pt::write_xml(out, tree, pt::xml_writer_make_settings<std::string>(' ', 2));
}

std::string export_text(const LexiconDocument& doc) {
  std::ostringstream out;
  export_text(out, doc);
  return out.str();
}

std::string export_xml(const LexiconDocument& doc) {
  std::ostringstream out;
  export_xml(out, doc);
  return out.str();
}

LexiconDocument import_lexicon(std::istream& in, LexiconFormat format, const std::string& source_name) {
  if (format == LexiconFormat::Xml) return XmlReader(source_name).read(in);
  return TextReader(in, source_name).read();
}

LexiconDocument import_lexicon(std::istream& in, const std::string& source_name) {
  return import_lexicon(in, detect_format(in), source_name);
}

}  // namespace lgc
