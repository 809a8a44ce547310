#pragma once

// The .skl text format: line-oriented, UTF-8, '#' comments, three sections
// (header+elements, meet table, join table). Parsing never checks the
// algebra laws, so broken tables can still be loaded and inspected.

#include <sstream>
#include <string>
#include <vector>

#include "skewlat/skew_lattice.hpp"

namespace skewlat {

namespace detail {

struct SklLine {
  int number;  // 1-based line number in the original text
  std::vector<std::string> tokens;
};

inline std::vector<SklLine> skl_tokenize(const std::string& text) {
  std::vector<SklLine> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto pos = raw.find('#'); pos != std::string::npos)
      raw.erase(pos);
    std::istringstream ls(raw);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (!toks.empty()) out.push_back({number, std::move(toks)});
  }
  return out;
}

}  // namespace detail

inline SkewLattice parse_algebra(const std::string& text) {
  auto lines = detail::skl_tokenize(text);
  std::size_t at = 0;
  auto need = [&](const char* what) -> const detail::SklLine& {
    if (at >= lines.size())
      throw ParseError(lines.empty() ? 1 : lines.back().number + 1,
                       std::string("unexpected end of input, expected ") + what);
    return lines[at];
  };

  {
    const auto& l = need("header 'skewlat v1'");
    if (l.tokens.size() != 2 || l.tokens[0] != "skewlat" || l.tokens[1] != "v1")
      throw ParseError(l.number, "expected header 'skewlat v1'");
    ++at;
  }

  std::vector<std::string> names;
  {
    const auto& l = need("'elements <n> <names...>'");
    if (l.tokens.size() < 2 || l.tokens[0] != "elements")
      throw ParseError(l.number, "expected 'elements <n> <names...>'");
    int n = 0;
    try {
      n = std::stoi(l.tokens[1]);
    } catch (const std::exception&) {
      throw ParseError(l.number, "element count is not a number");
    }
    if (n < 1) throw ParseError(l.number, "element count must be positive");
    if (static_cast<int>(l.tokens.size()) != 2 + n)
      throw ParseError(l.number, "expected " + std::to_string(n) +
                                     " element names, got " +
                                     std::to_string(l.tokens.size() - 2));
    names.assign(l.tokens.begin() + 2, l.tokens.end());
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (names[i] == names[j])
          throw ParseError(l.number, "duplicate element name '" + names[i] + "'");
    ++at;
  }

  const int n = static_cast<int>(names.size());
  auto index_of = [&](const std::string& label, int line) {
    for (int i = 0; i < n; ++i)
      if (names[i] == label) return i;
    throw ParseError(line, "'" + label + "' is not a declared element");
  };

  auto read_table = [&](const char* keyword) {
    const auto& head = need(keyword);
    if (head.tokens.size() != 1 || head.tokens[0] != keyword)
      throw ParseError(head.number, std::string("expected '") + keyword + "'");
    ++at;
    std::vector<int> table(n * n);
    for (int r = 0; r < n; ++r) {
      const auto& row = need("table row");
      if (static_cast<int>(row.tokens.size()) != n)
        throw ParseError(row.number,
                         "expected " + std::to_string(n) + " entries, got " +
                             std::to_string(row.tokens.size()));
      for (int c = 0; c < n; ++c)
        table[r * n + c] = index_of(row.tokens[c], row.number);
      ++at;
    }
    return table;
  };

  auto meet = read_table("meet");
  auto join = read_table("join");
  if (at != lines.size())
    throw ParseError(lines[at].number, "trailing content after join table");
  return SkewLattice{std::move(names), std::move(meet), std::move(join)};
}

// Canonical form: single spaces, one row per line, no comments.
inline std::string serialize_algebra(const SkewLattice& a) {
  const int n = a.size();
  std::ostringstream os;
  os << "skewlat v1\n";
  os << "elements " << n;
  for (const auto& nm : a.names) os << " " << nm;
  os << "\n";
  for (auto [table, keyword] :
       {std::pair{&a.meet_table, "meet"}, std::pair{&a.join_table, "join"}}) {
    os << keyword << "\n";
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        if (c) os << " ";
        os << a.names[(*table)[r * n + c]];
      }
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace skewlat
