#pragma once

// Words, graphs and the primitive word operations shared by every other
// header: restriction, initial/final permutation, alternation, uniformity
// and the alternation-induced graph of a word.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ranges>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace wordrep {

enum class ErrorKind {
  invalid_input,    // malformed graph/word/pattern text
  precondition,     // operation called outside its domain
  unsupported,      // pattern shape with no construction
  unrepresentable,  // provably no representant exists
  open_case,        // representability is not known for this pattern
  out_of_scope,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Index of a vertex in a LabelTable. Declaration order is the canonical order.
enum class Vertex : std::uint32_t {};

constexpr std::size_t index(Vertex v) noexcept { return static_cast<std::size_t>(v); }
constexpr Vertex vertex(std::size_t i) noexcept { return static_cast<Vertex>(i); }

using Word = std::vector<Vertex>;

class LabelTable {
 public:
  LabelTable() = default;
  explicit LabelTable(const std::vector<std::string>& labels) {
    for (const auto& l : labels) add(l);
  }

  Vertex add(std::string label) {
    if (label.empty()) throw Error(ErrorKind::invalid_input, "empty vertex label");
    for (char c : label) {
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
        throw Error(ErrorKind::invalid_input, "vertex label contains whitespace: '" + label + "'");
    }
    if (ids_.contains(label))
      throw Error(ErrorKind::invalid_input, "duplicate vertex label '" + label + "'");
    Vertex v = vertex(labels_.size());
    ids_.emplace(label, v);
    labels_.push_back(std::move(label));
    return v;
  }

  std::optional<Vertex> find(std::string_view label) const {
    auto it = ids_.find(std::string(label));
    if (it == ids_.end()) return std::nullopt;
    return it->second;
  }

  const std::string& label(Vertex v) const { return labels_.at(index(v)); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::size_t size() const noexcept { return labels_.size(); }

  bool single_char() const noexcept {
    return std::ranges::all_of(labels_, [](const std::string& l) { return l.size() == 1; });
  }

  friend bool operator==(const LabelTable& a, const LabelTable& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Vertex> ids_;
};

/// Simple undirected graph over labeled vertices.
class Graph {
 public:
  Graph() = default;
  explicit Graph(const std::vector<std::string>& labels) {
    for (const auto& l : labels) add_vertex(l);
  }

  Vertex add_vertex(std::string label) {
    Vertex v = labels_.add(std::move(label));
    for (auto& row : adj_) row.push_back(0);
    adj_.emplace_back(labels_.size(), 0);
    return v;
  }

  /// Returns the vertex with this label, declaring it first if needed.
  Vertex ensure_vertex(std::string_view label) {
    if (auto v = labels_.find(label)) return *v;
    return add_vertex(std::string(label));
  }

  /// Returns false when the edge already existed.
  bool add_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    if (u == v) throw Error(ErrorKind::invalid_input, "self-loop on vertex '" + labels_.label(u) + "'");
    if (adj_[index(u)][index(v)]) return false;
    adj_[index(u)][index(v)] = adj_[index(v)][index(u)] = 1;
    ++edge_count_;
    return true;
  }

  bool add_edge(std::string_view u, std::string_view v) {
    const Vertex a = ensure_vertex(u);
    const Vertex b = ensure_vertex(v);
    return add_edge(a, b);
  }

  bool has_edge(Vertex u, Vertex v) const {
    check(u);
    check(v);
    return adj_[index(u)][index(v)] != 0;
  }

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  const LabelTable& labels() const noexcept { return labels_; }
  const std::string& label(Vertex v) const { return labels_.label(v); }

  std::vector<Vertex> vertices() const {
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < vertex_count(); ++i) out.push_back(vertex(i));
    return out;
  }

  /// Edges as (u, v) with u before v, sorted lexicographically.
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (std::size_t i = 0; i < vertex_count(); ++i)
      for (std::size_t j = i + 1; j < vertex_count(); ++j)
        if (adj_[i][j]) out.emplace_back(vertex(i), vertex(j));
    return out;
  }

  std::vector<std::pair<Vertex, Vertex>> non_edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (std::size_t i = 0; i < vertex_count(); ++i)
      for (std::size_t j = i + 1; j < vertex_count(); ++j)
        if (!adj_[i][j]) out.emplace_back(vertex(i), vertex(j));
    return out;
  }

  std::vector<Vertex> neighbors(Vertex v) const {
    check(v);
    std::vector<Vertex> out;
    for (std::size_t j = 0; j < vertex_count(); ++j)
      if (adj_[index(v)][j]) out.push_back(vertex(j));
    return out;
  }

  std::size_t degree(Vertex v) const {
    check(v);
    return static_cast<std::size_t>(std::ranges::count(adj_[index(v)], 1));
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.adj_ == b.adj_;
  }

 private:
  void check(Vertex v) const {
    if (index(v) >= vertex_count())
      throw Error(ErrorKind::precondition, "vertex index " + std::to_string(index(v)) + " out of range");
  }

  LabelTable labels_;
  std::vector<std::vector<char>> adj_;
  std::size_t edge_count_ = 0;
};

// ---------------------------------------------------------------------------
// Generic word operations. These work on any forward range whose elements are
// equality comparable (Words, std::string, ...).

template <std::ranges::forward_range W>
using letter_t = std::ranges::range_value_t<W>;

namespace detail {
template <class T, class R>
bool contains_letter(const R& set, const T& x) {
  return std::ranges::find(set, x) != std::ranges::end(set);
}
}  // namespace detail

/// Distinct letters of w in order of first occurrence.
template <std::ranges::forward_range W>
std::vector<letter_t<W>> initial_permutation(const W& w) {
  if (std::ranges::empty(w)) throw Error(ErrorKind::precondition, "initial permutation of the empty word");
  std::vector<letter_t<W>> out;
  for (const auto& c : w)
    if (!detail::contains_letter(out, c)) out.push_back(c);
  return out;
}

/// Distinct letters of w in order of last occurrence.
template <std::ranges::bidirectional_range W>
std::vector<letter_t<W>> final_permutation(const W& w) {
  if (std::ranges::empty(w)) throw Error(ErrorKind::precondition, "final permutation of the empty word");
  std::vector<letter_t<W>> out;
  for (const auto& c : w | std::views::reverse)
    if (!detail::contains_letter(out, c)) out.push_back(c);
  std::ranges::reverse(out);
  return out;
}

template <std::ranges::forward_range W, std::ranges::forward_range S>
std::vector<letter_t<W>> restrict(const W& w, const S& keep) {
  std::vector<letter_t<W>> out;
  for (const auto& c : w)
    if (detail::contains_letter(keep, c)) out.push_back(c);
  return out;
}

template <std::ranges::bidirectional_range W>
std::vector<letter_t<W>> reverse_word(const W& w) {
  std::vector<letter_t<W>> out(std::ranges::begin(w), std::ranges::end(w));
  std::ranges::reverse(out);
  return out;
}

template <std::ranges::forward_range W>
bool occurs(const W& w, const letter_t<W>& x) {
  return detail::contains_letter(w, x);
}

/// True iff the restriction of w to {x, y} has no two consecutive equal letters.
template <std::ranges::forward_range W>
bool alternates(const W& w, const letter_t<W>& x, const letter_t<W>& y) {
  if (x == y) throw Error(ErrorKind::precondition, "alternation of a letter with itself");
  if (!occurs(w, x) || !occurs(w, y))
    throw Error(ErrorKind::precondition, "alternation is undefined for a letter absent from the word");
  std::optional<letter_t<W>> last;
  for (const auto& c : w) {
    if (c != x && c != y) continue;
    if (last && *last == c) return false;
    last = c;
  }
  return true;
}

struct UniformityReport {
  bool is_uniform = false;
  std::size_t k = 0;  // meaningful only when is_uniform

  friend bool operator==(const UniformityReport&, const UniformityReport&) = default;
};

template <std::ranges::forward_range W>
UniformityReport uniformity(const W& w) {
  if (std::ranges::empty(w)) throw Error(ErrorKind::precondition, "uniformity of the empty word");
  std::vector<std::pair<letter_t<W>, std::size_t>> counts;
  for (const auto& c : w) {
    auto it = std::ranges::find_if(counts, [&](const auto& p) { return p.first == c; });
    if (it == counts.end())
      counts.emplace_back(c, 1);
    else
      ++it->second;
  }
  const std::size_t k = counts.front().second;
  if (std::ranges::all_of(counts, [&](const auto& p) { return p.second == k; })) return {true, k};
  return {false, 0};
}

// ---------------------------------------------------------------------------
// Vertex words against a label table.

/// Distinct letters of w in canonical (table) order.
inline std::vector<Vertex> alphabet(const Word& w) {
  std::vector<Vertex> out(w.begin(), w.end());
  std::ranges::sort(out);
  auto [first, last] = std::ranges::unique(out);
  out.erase(first, last);
  return out;
}

inline std::vector<std::size_t> multiplicities(const Word& w, std::size_t n) {
  std::vector<std::size_t> counts(n, 0);
  for (Vertex v : w) {
    if (index(v) >= n) throw Error(ErrorKind::precondition, "letter outside the vertex table");
    ++counts[index(v)];
  }
  return counts;
}

/// Graph on the letters of w (kept in table order, labels preserved) with an
/// edge for every pair of letters satisfying `adjacent(x, y)`.
template <class Pred>
Graph induced_graph_by(const Word& w, const LabelTable& labels, Pred adjacent) {
  const auto letters = alphabet(w);
  Graph g;
  for (Vertex v : letters) g.add_vertex(labels.label(v));
  for (std::size_t i = 0; i < letters.size(); ++i)
    for (std::size_t j = i + 1; j < letters.size(); ++j)
      if (adjacent(letters[i], letters[j])) g.add_edge(vertex(i), vertex(j));
  return g;
}

/// Word-representation graph: xy is an edge iff x and y alternate in w.
inline Graph induced_graph_11(const Word& w, const LabelTable& labels) {
  return induced_graph_by(w, labels, [&](Vertex x, Vertex y) { return alternates(w, x, y); });
}

struct PairWitness {
  Vertex x{};
  Vertex y{};
  Word restriction;                    // w restricted to {x, y}
  std::optional<std::size_t> factor;   // start of an offending factor, if any
};

/// Outcome of checking whether a word represents a graph.
struct RepresentationReport {
  std::vector<Vertex> missing_vertices;
  std::vector<std::pair<Vertex, Vertex>> spurious_edges;  // induced by w, absent from G
  std::vector<std::pair<Vertex, Vertex>> missing_edges;   // in G, not induced by w
  std::vector<PairWitness> witnesses;

  bool ok() const noexcept {
    return missing_vertices.empty() && spurious_edges.empty() && missing_edges.empty();
  }
  explicit operator bool() const noexcept { return ok(); }
};

namespace detail {
inline void check_letters(const Word& w, const Graph& g) {
  for (Vertex v : w)
    if (index(v) >= g.vertex_count()) throw Error(ErrorKind::precondition, "letter outside the graph's vertex table");
}

/// `violation(r)` returns the start of an offending factor in the pair
/// restriction r, or nullopt when the pair is an edge.
template <class Violation>
RepresentationReport compare_pairs(const Word& w, const Graph& g, Violation violation) {
  check_letters(w, g);
  RepresentationReport rep;
  const auto counts = multiplicities(w, g.vertex_count());
  for (Vertex v : g.vertices())
    if (counts[index(v)] == 0) rep.missing_vertices.push_back(v);
  if (!rep.missing_vertices.empty()) return rep;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    for (std::size_t j = i + 1; j < g.vertex_count(); ++j) {
      const Vertex x = vertex(i), y = vertex(j);
      const Vertex pair[] = {x, y};
      Word r = restrict(w, pair);
      auto bad = violation(r);
      const bool induced = !bad.has_value();
      if (induced == g.has_edge(x, y)) continue;
      (induced ? rep.spurious_edges : rep.missing_edges).emplace_back(x, y);
      rep.witnesses.push_back({x, y, std::move(r), bad});
    }
  }
  return rep;
}
}  // namespace detail

/// First position i with r[i] == r[i+1], if any.
inline std::optional<std::size_t> first_repeat(const Word& r) {
  for (std::size_t i = 0; i + 1 < r.size(); ++i)
    if (r[i] == r[i + 1]) return i;
  return std::nullopt;
}

inline RepresentationReport represents_11(const Word& w, const Graph& g) {
  return detail::compare_pairs(w, g, [](const Word& r) { return first_repeat(r); });
}

// ---------------------------------------------------------------------------
// Graph helpers.

inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<int> comp(g.vertex_count(), -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s : g.vertices()) {
    if (comp[index(s)] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<Vertex> stack{s};
    comp[index(s)] = id;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      out.back().push_back(u);
      for (Vertex v : g.neighbors(u)) {
        if (comp[index(v)] < 0) {
          comp[index(v)] = id;
          stack.push_back(v);
        }
      }
    }
    std::ranges::sort(out.back());
  }
  return out;
}

inline bool is_tree(const Graph& g) {
  return g.vertex_count() >= 1 && g.edge_count() + 1 == g.vertex_count() && connected_components(g).size() == 1;
}

inline bool is_triangle_free(const Graph& g) {
  for (auto [u, v] : g.edges())
    for (Vertex w : g.neighbors(u))
      if (w != v && g.has_edge(v, w)) return false;
  return true;
}

/// Subgraph induced on `keep` (kept in table order), labels preserved.
inline Graph induced_subgraph(const Graph& g, std::vector<Vertex> keep) {
  std::ranges::sort(keep);
  Graph h;
  for (Vertex v : keep) h.add_vertex(g.label(v));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.has_edge(keep[i], keep[j])) h.add_edge(vertex(i), vertex(j));
  return h;
}

/// Canonical small graphs, labeled "1".."n".
inline std::vector<std::string> numbered_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

inline Graph edgeless_graph(std::size_t n) { return Graph(numbered_labels(n)); }

inline Graph complete_graph(std::size_t n) {
  Graph g(numbered_labels(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(vertex(i), vertex(j));
  return g;
}

inline Graph path_graph(std::size_t n) {
  Graph g(numbered_labels(n));
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(vertex(i), vertex(i + 1));
  return g;
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::precondition, "a cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(vertex(n - 1), vertex(0));
  return g;
}

/// Star with center "1" and leaves "2".."k+1".
inline Graph star_graph(std::size_t k) {
  Graph g(numbered_labels(k + 1));
  for (std::size_t i = 1; i <= k; ++i) g.add_edge(vertex(0), vertex(i));
  return g;
}

}  // namespace wordrep
