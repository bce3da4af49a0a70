#include "lgc/realizer.hpp"

#include <algorithm>
#include <array>

#include "lgc/error.hpp"
#include "lgc/text.hpp"

namespace lgc {

namespace {

struct Piece {
  std::string text;
  bool substituted = false;
};

constexpr std::string_view kVowelOnsets[] = {
    "a", "à", "â", "ä", "e", "é", "è", "ê", "ë", "i", "î", "ï", "o", "ô", "ö", "u",
    "ù", "û", "ü", "y", "ÿ", "æ", "œ", "A", "À", "Â", "Ä", "E", "É", "È", "Ê", "Ë",
    "I", "Î", "Ï", "O", "Ô", "Ö", "U", "Ù", "Û", "Ü", "Y", "Æ", "Œ", "Ÿ"};

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool ends_with_apostrophe(std::string_view token) {
  return ends_with(token, "'") || ends_with(token, "\xE2\x80\x99");
}

bool glues_to_next(std::string_view token) {
  return ends_with_apostrophe(token) || (token.size() > 1 && token.back() == '-');
}

std::string lower_ascii(std::string_view s) {
  std::string out(s);
  for (auto& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

// One left-to-right pass. A pair rewrites only when one side came from
// substitution, and `de le` + vowel is left for elision.
void contract_pieces(std::vector<Piece>& pieces, const MorphoRules& rules) {
  std::vector<Piece> out;
  out.reserve(pieces.size());
  std::size_t i = 0;
  while (i < pieces.size()) {
    if (i + 1 < pieces.size() && (pieces[i].substituted || pieces[i + 1].substituted)) {
      const auto& left = pieces[i].text;
      const auto& right = pieces[i + 1].text;
      const auto rule = std::find_if(rules.contractions.begin(), rules.contractions.end(),
                                     [&](const ContractionRule& r) { return r.left == left && r.right == right; });
      const bool blocked = rule != rules.contractions.end() && rules.elision_for(right) != nullptr &&
                           i + 2 < pieces.size() && rules.vowel_onset(pieces[i + 2].text);
      if (rule != rules.contractions.end() && !blocked) {
        out.push_back({rule->result, true});
        i += 2;
        continue;
      }
    }
    out.push_back(std::move(pieces[i]));
    ++i;
  }
  pieces = std::move(out);
}

void elide_pieces(std::vector<Piece>& pieces, const MorphoRules& rules) {
  std::vector<Piece> out;
  out.reserve(pieces.size());
  std::size_t i = 0;
  while (i < pieces.size()) {
    if (i + 1 < pieces.size() && !ends_with_apostrophe(pieces[i].text)) {
      const auto* rule = rules.elision_for(pieces[i].text);
      if (rule && rules.vowel_onset(pieces[i + 1].text)) {
        out.push_back({rule->elided + pieces[i + 1].text, true});
        i += 2;
        continue;
      }
    }
    out.push_back(std::move(pieces[i]));
    ++i;
  }
  pieces = std::move(out);
}

std::vector<Piece> as_pieces(std::vector<std::string> tokens) {
  std::vector<Piece> pieces;
  pieces.reserve(tokens.size());
  for (auto& t : tokens) pieces.push_back({std::move(t), true});
  return pieces;
}

std::vector<std::string> as_tokens(std::vector<Piece> pieces) {
  std::vector<std::string> tokens;
  tokens.reserve(pieces.size());
  for (auto& p : pieces) tokens.push_back(std::move(p.text));
  return tokens;
}

}  // namespace

const MorphoRules& MorphoRules::french() {
  static const MorphoRules rules{
      {{"de", "le", "du"}, {"de", "les", "des"}, {"à", "le", "au"}, {"à", "les", "aux"}},
      {{"de", "d'"}, {"le", "l'"}, {"la", "l'"}, {"que", "qu'"}},
      {"hache", "haie", "halte", "hameau", "hanche", "handicap", "hardi", "harpe", "hasard", "hâte",
       "hausse", "haut", "haute", "hautes", "hauteur", "hauts", "héros", "hibou", "homard", "honte",
       "hors", "huit", "huitième", "hurlement", "hutte"}};
  return rules;
}

const ElisionRule* MorphoRules::elision_for(std::string_view word) const {
  for (const auto& rule : elisions) {
    if (rule.word == word) return &rule;
  }
  return nullptr;
}

bool MorphoRules::vowel_onset(std::string_view token) const {
  for (const auto v : kVowelOnsets) {
    if (starts_with(token, v)) return true;
  }
  if (starts_with(token, "h") || starts_with(token, "H")) {
    const auto lowered = lower_ascii(token);
    return std::find(aspirated_h.begin(), aspirated_h.end(), lowered) == aspirated_h.end();
  }
  return false;
}

MorphoRules parse_morpho(std::istream& source, const std::string& source_name) {
  MorphoRules rules;
  enum class Section { None, Contraction, Elision, Aspirated } section = Section::None;
  std::string line;
  std::size_t line_no = 0;
  while (text::read_line(source, line, line_no)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto body = text::trim(line);
    if (body.empty()) continue;
    if (body.front() == '[') {
      if (body == "[contraction]") {
        section = Section::Contraction;
      } else if (body == "[elision]") {
        section = Section::Elision;
      } else if (body == "[aspirated-h]") {
        section = Section::Aspirated;
      } else {
        throw Error(ErrorCode::MorphoSyntax, "unknown section " + std::string(body), source_name, line_no);
      }
      continue;
    }
    const auto eq = body.find('=');
    switch (section) {
      case Section::None:
        throw Error(ErrorCode::MorphoSyntax, "rule outside of a section", source_name, line_no);
      case Section::Contraction: {
        if (eq == std::string_view::npos) {
          throw Error(ErrorCode::MorphoSyntax, "expected 'left right = result'", source_name, line_no);
        }
        const auto key = text::split_ws(body.substr(0, eq));
        const auto value = text::split_ws(body.substr(eq + 1));
        if (key.size() != 2 || value.size() != 1) {
          throw Error(ErrorCode::MorphoSyntax, "expected 'left right = result'", source_name, line_no);
        }
        rules.contractions.push_back({key[0], key[1], value[0]});
        break;
      }
      case Section::Elision: {
        const auto key = eq == std::string_view::npos ? std::vector<std::string>{}
                                                      : text::split_ws(body.substr(0, eq));
        const auto value = eq == std::string_view::npos ? std::vector<std::string>{}
                                                        : text::split_ws(body.substr(eq + 1));
        if (key.size() != 1 || value.size() != 1) {
          throw Error(ErrorCode::MorphoSyntax, "expected 'word = elided'", source_name, line_no);
        }
        rules.elisions.push_back({key[0], value[0]});
        break;
      }
      case Section::Aspirated:
        if (eq != std::string_view::npos || text::split_ws(body).size() != 1) {
          throw Error(ErrorCode::MorphoSyntax, "expected one word per line", source_name, line_no);
        }
        rules.aspirated_h.emplace_back(body);
        break;
    }
  }
  return rules;
}

SymbolPolicy SymbolPolicy::defaults() {
  SymbolPolicy p;
  p.set("Poss2", "son");
  p.set("Ddef", "la");
  return p;
}

SymbolPolicy SymbolPolicy::parse(std::string_view spec) {
  SymbolPolicy policy = defaults();
  const auto parts = text::split(spec, ',');
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto part = text::trim(parts[i]);
    if (part.empty()) continue;
    if (i == 0 && part == "default") continue;
    if (i == 0 && part == "keep") {
      policy = keep_all();
      continue;
    }
    const auto eq = part.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw Error(ErrorCode::ScriptSyntax, "symbol policy item '" + std::string(part) + "' is not SYM=value");
    }
    policy.set(std::string(text::trim(part.substr(0, eq))), std::string(text::trim(part.substr(eq + 1))));
  }
  return policy;
}

void SymbolPolicy::set(std::string symbol, std::string replacement) {
  map_[std::move(symbol)] = std::move(replacement);
}

std::optional<std::string> SymbolPolicy::replacement(std::string_view symbol) const {
  const auto it = map_.find(symbol);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

void Bindings::bind_component(std::string slot, CellValue value) {
  components_.insert_or_assign(std::move(slot), std::move(value));
}

void Bindings::bind_feature(std::string feature_id, CellValue value) {
  features_.insert_or_assign(std::move(feature_id), std::move(value));
}

const CellValue* Bindings::lookup(const PlaceholderRef& ref) const {
  if (!ref.entry) {
    if (const auto it = features_.find(ref.column); it != features_.end()) return &it->second;
  }
  if (const auto it = components_.find(ref.column); it != components_.end()) return &it->second;
  return nullptr;
}

std::vector<std::string> contract(std::vector<std::string> tokens, const MorphoRules& rules) {
  auto pieces = as_pieces(std::move(tokens));
  contract_pieces(pieces, rules);
  return as_tokens(std::move(pieces));
}

std::vector<std::string> elide(std::vector<std::string> tokens, const MorphoRules& rules) {
  auto pieces = as_pieces(std::move(tokens));
  elide_pieces(pieces, rules);
  return as_tokens(std::move(pieces));
}

std::string render(const std::vector<std::string>& tokens) {
  std::string out;
  std::string_view previous;
  for (const auto& token : tokens) {
    if (token.empty()) continue;
    if (!out.empty() && !glues_to_next(previous)) out += ' ';
    out += token;
    previous = token;
  }
  return out;
}

bool is_symbolic_literal(std::string_view token) noexcept {
  if (token.empty() || token.front() < 'A' || token.front() > 'Z') return false;
  return std::all_of(token.begin(), token.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-' || c == '_';
  });
}

Realizer::Realizer()
    : Realizer(MorphoRules::french(), SymbolPolicy::defaults(), {"Poss2", "Ddef", "N", "Nhum"}) {}

Realizer::Realizer(MorphoRules rules, SymbolPolicy policy, std::vector<std::string> symbols)
    : rules_(std::move(rules)), policy_(std::move(policy)), symbols_(std::move(symbols)) {}

bool Realizer::known_symbol(std::string_view token) const {
  return std::find(symbols_.begin(), symbols_.end(), token) != symbols_.end() ||
         policy_.replacement(token).has_value();
}

SurfaceForm Realizer::realize(std::string_view flat, const Bindings& bindings) const {
  std::vector<Piece> pieces;

  auto add_literal = [&](std::string_view literal) {
    for (auto& word : text::split_ws(literal)) {
      if (word == kEmptySymbol) continue;
      if (!is_symbolic_literal(word)) {
        pieces.push_back({std::move(word), false});
        continue;
      }
      if (!known_symbol(word)) {
        throw Error(ErrorCode::UnknownSymbolicToken,
                    "'" + word + "' in \"" + std::string(flat) + "\" is not a declared symbol");
      }
      if (auto replacement = policy_.replacement(word)) {
        for (auto& r : text::split_ws(*replacement)) pieces.push_back({std::move(r), true});
      } else {
        pieces.push_back({std::move(word), true});
      }
    }
  };

  std::size_t i = 0;
  while (i < flat.size()) {
    const auto at = flat.find('@', i);
    if (at == std::string_view::npos) {
      add_literal(flat.substr(i));
      break;
    }
    add_literal(flat.substr(i, at - i));
    const auto close = flat.find('@', at + 1);
    if (close == std::string_view::npos) {
      throw Error(ErrorCode::MalformedPlaceholder, "unbalanced '@' in \"" + std::string(flat) + "\"");
    }
    const auto refs = template_placeholders(flat.substr(at, close - at + 1));
    const auto& ref = refs.front();
    const CellValue* cell = bindings.lookup(ref);
    if (cell == nullptr) {
      throw Error(ErrorCode::UnboundPlaceholder,
                  "no column for @" + std::string(ref.entry ? kEntryMarker : "") + ref.column + "@");
    }
    if (cell->is_binary()) {
      throw Error(ErrorCode::UnboundPlaceholder,
                  "@" + ref.column + "@ names a binary column, not a lexical value");
    }
    if (cell->kind() == CellValue::Kind::Lex) {
      for (auto& word : text::split_ws(cell->text())) pieces.push_back({std::move(word), true});
    }
    i = close + 1;
  }

  SurfaceForm surface;
  surface.tokens.reserve(pieces.size());
  for (const auto& p : pieces) surface.tokens.push_back(p.text);
  contract_pieces(pieces, rules_);
  elide_pieces(pieces, rules_);
  surface.rendered = render(as_tokens(std::move(pieces)));
  return surface;
}

SurfaceForm realize(std::string_view flat, const Bindings& bindings, const SymbolPolicy& policy) {
  return Realizer(MorphoRules::french(), policy, {"Poss2", "Ddef", "N", "Nhum"}).realize(flat, bindings);
}

}  // namespace lgc
