#include "lgc/template.hpp"

#include "lgc/error.hpp"
#include "lgc/lg_table.hpp"
#include "lgc/text.hpp"

namespace lgc {

FactorizedTemplate FactorizedTemplate::parse(std::string_view source) {
  FactorizedTemplate t;
  t.source_ = std::string(source);

  std::string literal;
  auto flush_literal = [&] {
    if (!literal.empty()) t.segments_.push_back({std::move(literal), {}});
    literal.clear();
  };

  std::size_t i = 0;
  while (i < source.size()) {
    const char c = source[i];
    if (c == '@') {
      // Copy the placeholder verbatim so that its contents never count as
      // group syntax.
      const auto close = source.find('@', i + 1);
      if (close == std::string_view::npos) {
        literal.append(source.substr(i));
        i = source.size();
      } else {
        literal.append(source.substr(i, close - i + 1));
        i = close + 1;
      }
      continue;
    }
    if (c == ')') {
      throw Error(ErrorCode::UnterminatedGroup, "')' without '(' in \"" + t.source_ + "\"");
    }
    if (c != '(') {
      literal.push_back(c);
      ++i;
      continue;
    }

    flush_literal();
    std::vector<std::string> alternatives;
    std::string current;
    std::size_t j = i + 1;
    bool closed = false;
    while (j < source.size()) {
      const char g = source[j];
      if (g == '(') {
        throw Error(ErrorCode::NestedAlternation, "nested group in \"" + t.source_ + "\"");
      }
      if (g == '@') {
        const auto close = source.find('@', j + 1);
        const auto end = close == std::string_view::npos ? source.size() : close + 1;
        current.append(source.substr(j, end - j));
        j = end;
        continue;
      }
      if (g == ')') {
        closed = true;
        break;
      }
      if (g == '+') {
        alternatives.push_back(std::move(current));
        current.clear();
      } else {
        current.push_back(g);
      }
      ++j;
    }
    if (!closed) {
      throw Error(ErrorCode::UnterminatedGroup, "'(' is never closed in \"" + t.source_ + "\"");
    }
    alternatives.push_back(std::move(current));
    for (auto& alt : alternatives) {
      alt = text::normalize_space(alt);
      if (alt == "E") alt.clear();
    }
    t.segments_.push_back({{}, std::move(alternatives)});
    i = j + 1;
  }
  flush_literal();
  return t;
}

std::size_t FactorizedTemplate::group_count() const noexcept {
  std::size_t n = 0;
  for (const auto& s : segments_) n += s.is_group() ? 1 : 0;
  return n;
}

std::vector<std::string> expand_alternation(const FactorizedTemplate& factorized) {
  std::vector<std::string> partial{std::string()};
  for (const auto& segment : factorized.segments()) {
    if (!segment.is_group()) {
      for (auto& p : partial) p += segment.text;
      continue;
    }
    std::vector<std::string> next;
    next.reserve(partial.size() * segment.alternatives.size());
    for (const auto& p : partial) {
      for (const auto& alt : segment.alternatives) next.push_back(p + alt);
    }
    partial = std::move(next);
  }
  for (auto& p : partial) p = text::normalize_space(p);
  return partial;
}

std::vector<PlaceholderRef> template_placeholders(std::string_view flat) {
  std::vector<PlaceholderRef> refs;
  std::size_t i = 0;
  while ((i = flat.find('@', i)) != std::string_view::npos) {
    const auto close = flat.find('@', i + 1);
    if (close == std::string_view::npos) {
      throw Error(ErrorCode::MalformedPlaceholder,
                  "unbalanced '@' in \"" + std::string(flat) + "\"");
    }
    std::string_view body = flat.substr(i + 1, close - i - 1);
    PlaceholderRef ref;
    if (body.substr(0, kEntryMarker.size()) == kEntryMarker) {
      ref.entry = true;
      body.remove_prefix(kEntryMarker.size());
    }
    if (text::trim(body).empty()) {
      throw Error(ErrorCode::MalformedPlaceholder, "empty placeholder in \"" + std::string(flat) + "\"");
    }
    ref.column = std::string(body);
    refs.push_back(std::move(ref));
    i = close + 1;
  }
  return refs;
}

}  // namespace lgc
