#pragma once

// Text formats.
//
// Graph files are line oriented:
//   # comment
//   vertex <label>      declares a (possibly isolated) vertex
//   edge <u> <v>        declares an edge; endpoints are declared on first use
// Vertex order is order of first appearance. Duplicate edges and self-loops
// are rejected.
//
// Words are either a bare string (one character per letter, allowed only when
// every label is a single character) or whitespace-separated labels.

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wordrep/core.hpp"

namespace wordrep {

inline Graph parse_graph(std::istream& in) {
  Graph g;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    auto fail = [&](const std::string& why) {
      throw Error(ErrorKind::invalid_input, "line " + std::to_string(lineno) + ": " + why);
    };
    if (tok[0] == "vertex") {
      if (tok.size() != 2) fail("expected 'vertex <label>'");
      g.ensure_vertex(tok[1]);
    } else if (tok[0] == "edge") {
      if (tok.size() != 3) fail("expected 'edge <u> <v>'");
      if (tok[1] == tok[2]) fail("self-loop on '" + tok[1] + "'");
      if (!g.add_edge(tok[1], tok[2])) fail("duplicate edge " + tok[1] + " " + tok[2]);
    } else {
      fail("unknown directive '" + tok[0] + "'");
    }
  }
  return g;
}

inline Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

inline std::string format_graph(const Graph& g) {
  std::string out;
  for (Vertex v : g.vertices())
    if (g.degree(v) == 0) out += "vertex " + g.label(v) + "\n";
  for (auto [u, v] : g.edges()) out += "edge " + g.label(u) + " " + g.label(v) + "\n";
  return out;
}

namespace detail {
inline bool has_space(std::string_view s) {
  return std::ranges::any_of(s, [](unsigned char c) { return std::isspace(c) != 0; });
}

inline std::vector<std::string> split_letters(std::string_view text) {
  std::vector<std::string> out;
  if (has_space(text)) {
    std::istringstream in{std::string(text)};
    for (std::string t; in >> t;) out.push_back(t);
  } else {
    for (char c : text) out.emplace_back(1, c);
  }
  return out;
}

inline bool is_integer(const std::string& s) {
  return !s.empty() && s.size() < 19 && std::ranges::all_of(s, [](unsigned char c) { return std::isdigit(c) != 0; });
}
}  // namespace detail

/// Word over an existing vertex table.
inline Word parse_word(std::string_view text, const LabelTable& labels) {
  std::vector<std::string> letters;
  if (detail::has_space(text)) {
    letters = detail::split_letters(text);
  } else if (labels.single_char()) {
    letters = detail::split_letters(text);
  } else if (labels.find(text)) {
    letters.emplace_back(text);
  } else {
    throw Error(ErrorKind::invalid_input,
                "bare-string words need single-character labels; separate multi-character labels with spaces");
  }
  Word w;
  for (const auto& l : letters) {
    auto v = labels.find(l);
    if (!v) throw Error(ErrorKind::invalid_input, "letter '" + l + "' is not a vertex of the graph");
    w.push_back(*v);
  }
  return w;
}

/// Label table for a free-standing word: its distinct letters, numerically
/// ordered when all are integers, otherwise in byte order.
inline LabelTable labels_of(std::string_view text) {
  auto letters = detail::split_letters(text);
  std::ranges::sort(letters);
  letters.erase(std::ranges::unique(letters).begin(), letters.end());
  if (std::ranges::all_of(letters, detail::is_integer))
    std::ranges::sort(letters, {}, [](const std::string& s) { return std::stoll(s); });
  return LabelTable(letters);
}

inline std::string format_word(const Word& w, const LabelTable& labels) {
  std::string out;
  const bool compact = labels.single_char();
  for (Vertex v : w) {
    if (!compact && !out.empty()) out += ' ';
    out += labels.label(v);
  }
  return out;
}

}  // namespace wordrep
