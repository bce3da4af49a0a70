#pragma once

// Brute-force reference expander used by the equivalence tests. It walks
// table rows x Plus columns x flat templates directly and realizes each
// string with its own naive substitution, contraction and elision. Only the
// table and script readers are shared with the library.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "lgc/feature_script.hpp"
#include "lgc/lg_table.hpp"

namespace oracle {

struct Output {
  std::string table;
  std::size_t row = 0;  // 1-based
  std::string pass;     // "base" or the script action
  std::string surface;
};

inline std::vector<std::string> words(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

inline std::string squash(const std::string& s) {
  std::string joined;
  for (const auto& x : words(s)) joined += (joined.empty() ? "" : " ") + x;
  return joined;
}

// Unnormalized expansions: the first group varies slowest.
inline std::vector<std::string> raw_alternatives(const std::string& t) {
  std::size_t open = std::string::npos;
  bool in_placeholder = false;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] == '@') in_placeholder = !in_placeholder;
    if (!in_placeholder && t[i] == '(') {
      open = i;
      break;
    }
  }
  if (open == std::string::npos) return {t};
  const auto close = t.find(')', open);
  const std::string head = t.substr(0, open);
  const std::string body = t.substr(open + 1, close - open - 1);
  std::vector<std::string> options;
  std::string cur;
  for (char c : body) {
    if (c == '+') {
      options.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  options.push_back(cur);
  const auto rests = raw_alternatives(t.substr(close + 1));
  std::vector<std::string> out;
  for (auto o : options) {
    if (squash(o) == "E") o.clear();
    for (const auto& rest : rests) out.push_back(head + o + rest);
  }
  return out;
}

inline std::vector<std::string> alternatives(const std::string& t) {
  std::vector<std::string> out;
  for (const auto& a : raw_alternatives(t)) out.push_back(squash(a));
  return out;
}

struct Tok {
  std::string text;
  bool sub;
};

inline bool starts(const std::string& s, const std::string& p) { return s.compare(0, p.size(), p) == 0; }

inline bool vowel_start(const std::string& w) {
  static const std::vector<std::string> vowels = {
      "a", "à", "â", "ä", "e", "é", "è", "ê", "ë", "i", "î", "ï", "o", "ô", "ö", "u",
      "ù", "û", "ü", "y", "ÿ", "æ", "œ", "A", "À", "Â", "Ä", "E", "É", "È", "Ê", "Ë",
      "I", "Î", "Ï", "O", "Ô", "Ö", "U", "Ù", "Û", "Ü", "Y", "Æ", "Œ", "Ÿ"};
  static const std::set<std::string> aspirated = {
      "hache", "haie", "halte", "hameau", "hanche", "handicap", "hardi", "harpe", "hasard", "hâte",
      "hausse", "haut", "haute", "hautes", "hauteur", "hauts", "héros", "hibou", "homard", "honte",
      "hors", "huit", "huitième", "hurlement", "hutte"};
  for (const auto& v : vowels) {
    if (starts(w, v)) return true;
  }
  if (!w.empty() && (w[0] == 'h' || w[0] == 'H')) {
    std::string low = w;
    for (auto& c : low) c = (c >= 'A' && c <= 'Z') ? static_cast<char>(c + 32) : c;
    return aspirated.count(low) == 0;
  }
  return false;
}

inline std::string realize(const std::string& flat, const std::map<std::string, std::string>& component,
                           const std::map<std::string, std::string>& lexical,
                           const std::map<std::string, std::string>& symbols) {
  std::vector<Tok> toks;
  std::string literal;
  auto flush = [&] {
    for (const auto& w : words(literal)) {
      if (w == "<E>") continue;
      const auto s = symbols.find(w);
      if (s != symbols.end()) {
        for (const auto& r : words(s->second)) toks.push_back({r, true});
      } else {
        const bool symbolic = w[0] >= 'A' && w[0] <= 'Z';
        toks.push_back({w, symbolic});
      }
    }
    literal.clear();
  };
  for (std::size_t i = 0; i < flat.size(); ++i) {
    if (flat[i] != '@') {
      literal += flat[i];
      continue;
    }
    flush();
    const auto close = flat.find('@', i + 1);
    std::string name = flat.substr(i + 1, close - i - 1);
    std::string value;
    if (starts(name, "<ENT>")) {
      value = component.at(name.substr(5));
    } else if (lexical.count(name)) {
      value = lexical.at(name);
    } else {
      value = component.at(name);
    }
    for (const auto& w : words(value)) toks.push_back({w, true});
    i = close;
  }
  flush();

  static const std::map<std::pair<std::string, std::string>, std::string> contractions = {
      {{"de", "le"}, "du"}, {{"de", "les"}, "des"}, {{"à", "le"}, "au"}, {{"à", "les"}, "aux"}};
  static const std::map<std::string, std::string> elisions = {
      {"de", "d'"}, {"le", "l'"}, {"la", "l'"}, {"que", "qu'"}};

  std::vector<Tok> a;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (i + 1 < toks.size() && (toks[i].sub || toks[i + 1].sub)) {
      const auto c = contractions.find({toks[i].text, toks[i + 1].text});
      const bool before_vowel =
          elisions.count(toks[i + 1].text) && i + 2 < toks.size() && vowel_start(toks[i + 2].text);
      if (c != contractions.end() && !before_vowel) {
        a.push_back({c->second, true});
        ++i;
        continue;
      }
    }
    a.push_back(toks[i]);
  }
  std::vector<std::string> b;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto e = elisions.find(a[i].text);
    if (e != elisions.end() && i + 1 < a.size() && vowel_start(a[i + 1].text)) {
      b.push_back(e->second + a[i + 1].text);
      ++i;
      continue;
    }
    b.push_back(a[i].text);
  }
  std::string out;
  for (const auto& w : b) {
    if (!out.empty()) {
      const bool glue = out.back() == '\'' || starts(out.substr(out.size() >= 3 ? out.size() - 3 : 0), "\xE2\x80\x99") ||
                        (out.back() == '-' && out.size() > 1 && out[out.size() - 2] != ' ');
      if (!glue) out += ' ';
    }
    out += w;
  }
  return out;
}

// Naive lookup: explicit table list first, then the wildcard.
inline const lgc::ScriptRule* rule_for(const lgc::ExtractionScript& script, const std::string& table,
                                       const std::string& feature) {
  for (const auto& r : script.rules) {
    if (r.feature_id != feature || r.applies_to.wildcard) continue;
    if (std::find(r.applies_to.tables.begin(), r.applies_to.tables.end(), table) != r.applies_to.tables.end()) {
      return &r;
    }
  }
  for (const auto& r : script.rules) {
    if (r.feature_id == feature && r.applies_to.wildcard) return &r;
  }
  return nullptr;
}

inline std::string pass_name(const lgc::ScriptRule& r) {
  switch (r.action) {
    case lgc::ActionKind::EmitParaphrase: return "ParaphraseDirect";
    case lgc::ActionKind::EmitConstruction: return r.templates.empty() ? "" : "ParaphraseConstruction";
    case lgc::ActionKind::EmitSubstructure:
      return r.substructure == lgc::SubstructureKind::Deletion ? "Deletion" : "Permutation";
    case lgc::ActionKind::EmitTransformation: return "Transformation";
    case lgc::ActionKind::EmitIntensified: return "Intensification";
    default: return "";
  }
}

/// `table` must already carry its class-constant columns.
inline std::vector<Output> expand(const lgc::LgTable& table, const lgc::ExtractionScript& script,
                                  const std::map<std::string, std::string>& symbols = {{"Poss2", "son"},
                                                                                       {"Ddef", "la"}},
                                  const std::set<std::string>& passes = {}) {
  std::vector<Output> out;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    std::map<std::string, std::string> component, lexical;
    std::string base_template;
    for (std::size_t c = 0; c < table.features.size(); ++c) {
      const auto& id = table.features[c].id;
      const auto& cell = table.rows[r].cells[c];
      if (starts(id, "<ENT>")) {
        component[id.substr(5)] = cell.text();
        base_template += " @" + id + "@";
      } else if (!cell.is_binary()) {
        lexical[id] = cell.text();
      }
    }
    out.push_back({table.table_id, r + 1, "base", realize(base_template, component, lexical, symbols)});
    for (std::size_t c = 0; c < table.features.size(); ++c) {
      if (!table.rows[r].cells[c].is_plus()) continue;
      const auto* rule = rule_for(script, table.table_id, table.features[c].id);
      if (rule == nullptr) continue;
      const auto pass = pass_name(*rule);
      if (pass.empty() || (!passes.empty() && passes.count(pass) == 0)) continue;
      for (const auto& t : rule->templates) {
        for (const auto& flat : alternatives(t.source())) {
          out.push_back({table.table_id, r + 1, pass, realize(flat, component, lexical, symbols)});
        }
      }
    }
  }
  return out;
}

inline std::string key(const std::string& s) {
  std::string t;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.compare(i, 3, "\xE2\x80\x99") == 0) {
      t += '\'';
      i += 2;
    } else {
      char c = s[i];
      t += (c >= 'A' && c <= 'Z') ? static_cast<char>(c + 32) : c;
    }
  }
  std::string joined;
  for (const auto& w : words(t)) joined += (joined.empty() ? "" : " ") + w;
  return joined;
}

/// Entries left after exact-key duplicate removal; empty surfaces never merge.
inline std::size_t survivors(const std::vector<Output>& outputs) {
  std::set<std::string> keys;
  std::size_t empties = 0;
  for (const auto& o : outputs) {
    const auto k = key(o.surface);
    if (k.empty()) {
      ++empties;
    } else {
      keys.insert(k);
    }
  }
  return keys.size() + empties;
}

}  // namespace oracle
