#include "lgc/feature_script.hpp"

#include <cstdint>
#include <iterator>
#include <set>
#include <sstream>

#include "lgc/error.hpp"
#include "lgc/text.hpp"

namespace lgc {

namespace {

struct Tok {
  enum class Type { Word, String, Colon, Arrow, Comma };
  Type type;
  std::string value;
};

class LineParser {
 public:
  LineParser(std::string_view line, const std::string& source, std::size_t line_no)
      : source_(source), line_no_(line_no) {
    tokenize(line);
  }

  bool done() const { return pos_ >= toks_.size(); }
  const Tok* peek() const { return done() ? nullptr : &toks_[pos_]; }
  bool peek_is(Tok::Type t) const { return !done() && toks_[pos_].type == t; }
  bool peek_word(std::string_view w) const { return peek_is(Tok::Type::Word) && toks_[pos_].value == w; }

  Tok expect(Tok::Type t, std::string_view what) {
    if (!peek_is(t)) fail("expected " + std::string(what));
    return toks_[pos_++];
  }
  void skip() { ++pos_; }

  [[noreturn]] void fail(const std::string& message) const {
    throw Error(ErrorCode::ScriptSyntax, message, source_, line_no_);
  }

 private:
  void tokenize(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size()) {
      const char c = s[i];
      if (text::is_space(c)) {
        ++i;
      } else if (c == '#') {
        break;
      } else if (c == ':') {
        toks_.push_back({Tok::Type::Colon, ":"});
        ++i;
      } else if (c == ',') {
        toks_.push_back({Tok::Type::Comma, ","});
        ++i;
      } else if (c == '=' && i + 1 < s.size() && s[i + 1] == '>') {
        toks_.push_back({Tok::Type::Arrow, "=>"});
        i += 2;
      } else if (c == '"') {
        std::string value;
        ++i;
        bool closed = false;
        while (i < s.size()) {
          if (s[i] == '\\' && i + 1 < s.size()) {
            value.push_back(s[i + 1]);
            i += 2;
          } else if (s[i] == '"') {
            closed = true;
            ++i;
            break;
          } else {
            value.push_back(s[i++]);
          }
        }
        if (!closed) fail("unterminated string");
        toks_.push_back({Tok::Type::String, std::move(value)});
      } else {
        std::string value;
        while (i < s.size() && !text::is_space(s[i]) && s[i] != ':' && s[i] != ',' && s[i] != '"' &&
               s[i] != '#' && !(s[i] == '=' && i + 1 < s.size() && s[i + 1] == '>')) {
          value.push_back(s[i++]);
        }
        toks_.push_back({Tok::Type::Word, std::move(value)});
      }
    }
  }

  const std::string& source_;
  std::size_t line_no_;
  std::vector<Tok> toks_;
  std::size_t pos_ = 0;
};

/// Strips a `#` comment that is not inside a string literal.
std::string strip_comment(std::string_view line) {
  bool in_string = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (in_string && c == '\\') {
      ++i;
    } else if (c == '"') {
      in_string = !in_string;
    } else if (c == '#' && !in_string) {
      return std::string(line.substr(0, i));
    }
  }
  return std::string(line);
}

TablePattern parse_pattern(LineParser& p) {
  TablePattern pattern;
  for (;;) {
    const auto word = p.expect(Tok::Type::Word, "table id or '*'");
    if (word.value == "*") {
      pattern.wildcard = true;
    } else {
      pattern.tables.push_back(word.value);
    }
    if (!p.peek_is(Tok::Type::Comma)) break;
    p.skip();
  }
  if (pattern.wildcard && !pattern.tables.empty()) p.fail("'*' cannot be combined with table ids");
  return pattern;
}

std::string default_label(const std::string& feature_id) {
  const auto pos = feature_id.rfind(" = ");
  return pos == std::string::npos ? feature_id : feature_id.substr(pos + 3);
}

FactorizedTemplate parse_template_at(const std::string& raw, const std::string& source,
                                     std::size_t line) {
  try {
    return FactorizedTemplate::parse(raw);
  } catch (const Error& e) {
    std::string message = e.what();
    const auto pos = message.find(": ");
    throw Error(e.code(), pos == std::string::npos ? message : message.substr(pos + 2), source, line);
  }
}

}  // namespace

std::string_view to_string(ActionKind kind) noexcept {
  switch (kind) {
    case ActionKind::EmitConstruction: return "construction";
    case ActionKind::EmitParaphrase: return "paraphrase";
    case ActionKind::EmitSubstructure: return "substructure";
    case ActionKind::EmitTransformation: return "transformation";
    case ActionKind::EmitIntensified: return "intensify";
    case ActionKind::Note: return "note";
    case ActionKind::Binary: return "binary";
  }
  return "binary";
}

bool TablePattern::matches(std::string_view table_id) const {
  if (wildcard) return true;
  for (const auto& t : tables) {
    if (t == table_id) return true;
  }
  return false;
}

std::string TablePattern::str() const { return wildcard ? "*" : text::join(tables, ","); }

FeatureKind ScriptRule::feature_kind() const noexcept {
  switch (action) {
    case ActionKind::EmitConstruction: return FeatureKind::Construction;
    case ActionKind::EmitParaphrase: return FeatureKind::ParaphraseDirect;
    case ActionKind::EmitSubstructure:
      return substructure == SubstructureKind::Deletion ? FeatureKind::Deletion : FeatureKind::Permutation;
    case ActionKind::EmitTransformation: return FeatureKind::Transformation;
    case ActionKind::EmitIntensified: return FeatureKind::Intensifier;
    case ActionKind::Note: return FeatureKind::AuxLexical;
    case ActionKind::Binary: return FeatureKind::Binary;
  }
  return FeatureKind::Binary;
}

const ScriptRule* ExtractionScript::find(std::string_view table_id, std::string_view feature_id) const {
  const ScriptRule* wildcard = nullptr;
  for (const auto& rule : rules) {
    if (rule.feature_id != feature_id || !rule.applies_to.matches(table_id)) continue;
    if (!rule.applies_to.wildcard) return &rule;
    if (!wildcard) wildcard = &rule;
  }
  return wildcard;
}

namespace {

// Explicit table lists win over `*`; later directives of equal specificity
// override earlier ones.
template <typename Getter>
auto directive_value(const std::vector<TableDirective>& directives, std::string_view table_id, Getter get)
    -> decltype(get(directives.front())) {
  decltype(get(directives.front())) best;
  bool best_explicit = false;
  for (const auto& d : directives) {
    if (!d.applies_to.matches(table_id)) continue;
    auto value = get(d);
    if (!value) continue;
    const bool is_explicit = !d.applies_to.wildcard;
    if (is_explicit || !best_explicit) {
      best = std::move(value);
      best_explicit = is_explicit;
    }
  }
  return best;
}

}  // namespace

std::string ExtractionScript::category_for(std::string_view table_id) const {
  auto value = directive_value(directives, table_id, [](const TableDirective& d) { return d.category; });
  return value ? *value : std::string(kDefaultCategory);
}

std::optional<std::string> ExtractionScript::structure_label_for(std::string_view table_id) const {
  return directive_value(directives, table_id, [](const TableDirective& d) { return d.structure_label; });
}

std::optional<std::string> ExtractionScript::structure_template_for(std::string_view table_id) const {
  return directive_value(directives, table_id,
                         [](const TableDirective& d) { return d.structure_template; });
}

std::string content_hash(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (const unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kHex[h & 0xf];
    h >>= 4;
  }
  return out;
}

ExtractionScript parse_script(std::istream& source, const std::string& source_name) {
  const std::string bytes{std::istreambuf_iterator<char>(source), std::istreambuf_iterator<char>()};
  ExtractionScript script;
  script.hash = content_hash(bytes);
  script.symbols = {"Poss2", "Ddef", "N", "Nhum"};
  bool symbols_declared = false;

  std::set<std::pair<std::string, std::string>> seen_rules;  // (table or *, feature)

  std::istringstream in(bytes);
  std::string raw;
  std::size_t line_no = 0;
  while (text::read_line(in, raw, line_no)) {
    const std::size_t start_line = line_no;
    std::string logical = strip_comment(raw);
    while (!text::trim(logical).empty() && text::trim(logical).back() == '\\') {
      auto trimmed = std::string(text::trim(logical));
      trimmed.pop_back();
      logical = trimmed + " ";
      if (!text::read_line(in, raw, line_no)) break;
      logical += strip_comment(raw);
    }
    if (text::trim(logical).empty()) continue;

    LineParser p(logical, source_name, start_line);

    if (p.peek_word("symbols")) {
      p.skip();
      if (!symbols_declared) script.symbols.clear();
      symbols_declared = true;
      while (!p.done()) {
        if (p.peek_is(Tok::Type::Comma)) {
          p.skip();
          continue;
        }
        script.symbols.push_back(p.expect(Tok::Type::String, "quoted symbol").value);
      }
      continue;
    }

    auto pattern = parse_pattern(p);
    p.expect(Tok::Type::Colon, "':' after the table pattern");

    if (p.peek_word("category") || p.peek_word("structure")) {
      TableDirective d;
      d.applies_to = pattern;
      d.line = start_line;
      const bool is_category = p.peek()->value == "category";
      p.skip();
      if (is_category) {
        d.category = p.expect(Tok::Type::String, "quoted category").value;
      } else {
        d.structure_label = p.expect(Tok::Type::String, "quoted structure label").value;
        if (p.peek_is(Tok::Type::String)) {
          const auto raw_template = p.expect(Tok::Type::String, "template").value;
          parse_template_at(raw_template, source_name, start_line);
          d.structure_template = raw_template;
        }
      }
      if (!p.done()) p.fail("unexpected text after directive");
      script.directives.push_back(std::move(d));
      continue;
    }

    ScriptRule rule;
    rule.applies_to = std::move(pattern);
    rule.line = start_line;
    rule.feature_id = p.expect(Tok::Type::String, "quoted feature id").value;
    p.expect(Tok::Type::Arrow, "'=>'");
    const auto action = p.expect(Tok::Type::Word, "action").value;
    std::size_t min_templates = 1;
    bool takes_templates = true;
    bool takes_label = false;
    if (action == "construction") {
      rule.action = ActionKind::EmitConstruction;
      min_templates = 0;
    } else if (action == "paraphrase") {
      rule.action = ActionKind::EmitParaphrase;
    } else if (action == "deletion" || action == "permutation") {
      rule.action = ActionKind::EmitSubstructure;
      rule.substructure = action == "deletion" ? SubstructureKind::Deletion : SubstructureKind::Permutation;
      takes_label = true;
    } else if (action == "transformation") {
      rule.action = ActionKind::EmitTransformation;
      takes_label = true;
    } else if (action == "intensify") {
      rule.action = ActionKind::EmitIntensified;
    } else if (action == "note" || action == "binary") {
      rule.action = action == "note" ? ActionKind::Note : ActionKind::Binary;
      takes_templates = false;
      min_templates = 0;
    } else {
      p.fail("unknown action '" + action + "'");
    }

    if (takes_label) rule.structure_label = default_label(rule.feature_id);
    if (p.peek_word("as")) {
      if (!takes_label) p.fail("'as' is only valid for deletion, permutation and transformation");
      p.skip();
      rule.structure_label = p.expect(Tok::Type::String, "quoted structure label").value;
    }
    while (!p.done()) {
      if (p.peek_is(Tok::Type::Comma)) {
        p.skip();
        continue;
      }
      if (!takes_templates) p.fail("action '" + action + "' takes no template");
      const auto raw_template = p.expect(Tok::Type::String, "quoted template").value;
      rule.templates.push_back(parse_template_at(raw_template, source_name, start_line));
    }
    if (rule.templates.size() < min_templates) p.fail("action '" + action + "' needs a template");

    const auto keys = rule.applies_to.wildcard ? std::vector<std::string>{"*"} : rule.applies_to.tables;
    for (const auto& table : keys) {
      if (!seen_rules.insert({table, rule.feature_id}).second) {
        throw Error(ErrorCode::DuplicateRule,
                    "second rule for feature '" + rule.feature_id + "' on table " + table, source_name,
                    start_line);
      }
    }
    script.rules.push_back(std::move(rule));
  }
  return script;
}

}  // namespace lgc
