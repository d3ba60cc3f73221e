#pragma once

// Pattern isomorphism and containment, and graphs induced by avoidance of a
// two-letter pattern t (pairs x, y are adjacent iff w restricted to {x, y}
// avoids t), including the ordered variant where the pattern letters must be
// assigned to the vertices in canonical order.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wordrep/core.hpp"

namespace wordrep {

enum class PatternKind {
  all_same,  // a^k
  akb,       // a^k b, k >= 1
  abk,       // a b^k, k >= 2
  akbl,      // a^k b^l, k, l >= 2
  akbla,     // a^k b^l a, k, l >= 1
  other,
};

struct PatternShape {
  PatternKind kind = PatternKind::other;
  std::size_t k = 0;
  std::size_t l = 0;

  friend bool operator==(const PatternShape&, const PatternShape&) = default;
};

/// A word over the abstract alphabet {a, b}. `symbols()` is the normalized
/// spelling starting with 'a'; `spelling()` keeps the letters as given, which
/// only matters for the ordered (Kitaev) reading.
class Pattern {
 public:
  /// Accepts /[ab12]+/; '1' reads as 'a' and '2' as 'b'.
  static Pattern parse(std::string_view text) {
    if (text.empty()) throw Error(ErrorKind::invalid_input, "empty pattern");
    Pattern p;
    bool letters = false, digits = false;
    for (char c : text) {
      switch (c) {
        case 'a': case 'b': letters = true; p.spelling_ += c; break;
        case '1': digits = true; p.spelling_ += 'a'; break;
        case '2': digits = true; p.spelling_ += 'b'; break;
        default:
          throw Error(ErrorKind::invalid_input, "pattern must match [ab12]+, got '" + std::string(text) + "'");
      }
    }
    if (letters && digits)
      throw Error(ErrorKind::invalid_input, "pattern mixes {a,b} and {1,2} spellings: '" + std::string(text) + "'");
    p.symbols_ = p.spelling_;
    if (p.symbols_.front() == 'b')
      for (char& c : p.symbols_) c = c == 'a' ? 'b' : 'a';
    return p;
  }

  const std::string& symbols() const noexcept { return symbols_; }
  const std::string& spelling() const noexcept { return spelling_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  bool two_letter() const noexcept { return symbols_.find('b') != std::string::npos; }

  friend bool operator==(const Pattern& a, const Pattern& b) { return a.symbols_ == b.symbols_; }

 private:
  Pattern() = default;
  std::string spelling_;
  std::string symbols_;
};

inline PatternShape classify_pattern(const Pattern& t) {
  std::vector<std::pair<char, std::size_t>> runs;
  for (char c : t.symbols()) {
    if (!runs.empty() && runs.back().first == c)
      ++runs.back().second;
    else
      runs.emplace_back(c, 1);
  }
  if (runs.size() == 1) return {PatternKind::all_same, runs[0].second, 0};
  if (runs.size() == 2) {
    const auto [k, l] = std::pair{runs[0].second, runs[1].second};
    if (l == 1) return {PatternKind::akb, k, 0};
    if (k == 1) return {PatternKind::abk, l, 0};
    return {PatternKind::akbl, k, l};
  }
  if (runs.size() == 3 && runs[2].second == 1) return {PatternKind::akbla, runs[0].second, runs[1].second};
  return {PatternKind::other, 0, 0};
}

/// Same length and the same position-equality profile.
template <std::ranges::random_access_range U, std::ranges::random_access_range V>
bool is_isomorphic(const U& u, const V& v) {
  const auto n = std::ranges::size(u);
  if (n != std::ranges::size(v)) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if ((u[i] == u[j]) != (v[i] == v[j])) return false;
  return true;
}

namespace detail {
template <class R, class T>
bool factor_isomorphic(const R& r, std::size_t start, const T& t) {
  const std::size_t m = std::ranges::size(t);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if ((r[start + i] == r[start + j]) != (t[i] == t[j])) return false;
  return true;
}
}  // namespace detail

/// Start of the first contiguous factor of r isomorphic to t.
template <std::ranges::random_access_range R, std::ranges::random_access_range T>
std::optional<std::size_t> first_isomorphic_factor(const R& r, const T& t) {
  const std::size_t m = std::ranges::size(t);
  const std::size_t n = std::ranges::size(r);
  if (m == 0 || m > n) return std::nullopt;
  for (std::size_t s = 0; s + m <= n; ++s)
    if (detail::factor_isomorphic(r, s, t)) return s;
  return std::nullopt;
}

/// True iff some restriction of w to |alphabet(u)| of its letters has a
/// contiguous factor isomorphic to u. Subsets are tried in lexicographic
/// order of first occurrence with early exit.
template <std::ranges::random_access_range W, std::ranges::random_access_range U>
bool contains(const W& w, const U& u) {
  if (std::ranges::empty(u)) return true;
  const auto letters = initial_permutation(w);
  const std::size_t m = initial_permutation(u).size();
  if (m > letters.size()) return false;
  std::vector<std::size_t> pick(m);
  for (std::size_t i = 0; i < m; ++i) pick[i] = i;
  std::vector<letter_t<W>> subset(m);
  while (true) {
    for (std::size_t i = 0; i < m; ++i) subset[i] = letters[pick[i]];
    if (first_isomorphic_factor(restrict(w, subset), u)) return true;
    std::size_t i = m;
    while (i > 0 && pick[i - 1] == letters.size() - m + i - 1) --i;
    if (i == 0) return false;
    ++pick[i - 1];
    for (std::size_t j = i; j < m; ++j) pick[j] = pick[j - 1] + 1;
  }
}

template <std::ranges::random_access_range W, std::ranges::random_access_range U>
bool avoids(const W& w, const U& u) {
  return !contains(w, u);
}

namespace detail {
inline void check_pair(const Word& w, Vertex x, Vertex y) {
  if (x == y) throw Error(ErrorKind::precondition, "pattern avoidance of a letter with itself");
  if (!occurs(w, x) || !occurs(w, y))
    throw Error(ErrorKind::precondition, "pattern avoidance is undefined for a letter absent from the word");
}

/// Offending factor of the pair restriction r under the order-respecting
/// assignment: the smaller pattern symbol goes to the smaller vertex.
inline std::optional<std::size_t> first_ordered_factor(const Word& r, const Pattern& t, Vertex lo, Vertex hi) {
  if (!t.two_letter()) return first_isomorphic_factor(r, t.symbols());
  Word literal;
  for (char c : t.spelling()) literal.push_back(c == 'a' ? lo : hi);
  const std::size_t m = literal.size();
  for (std::size_t s = 0; s + m <= r.size(); ++s)
    if (std::equal(literal.begin(), literal.end(), r.begin() + static_cast<std::ptrdiff_t>(s))) return s;
  return std::nullopt;
}
}  // namespace detail

inline bool pair_avoids(const Word& w, Vertex x, Vertex y, const Pattern& t) {
  detail::check_pair(w, x, y);
  const Vertex pair[] = {x, y};
  return !first_isomorphic_factor(restrict(w, pair), t.symbols());
}

inline Graph induced_graph_t(const Word& w, const LabelTable& labels, const Pattern& t) {
  return induced_graph_by(w, labels, [&](Vertex x, Vertex y) { return pair_avoids(w, x, y, t); });
}

/// Ordered variant: for x before y in canonical order, xy is an edge iff the
/// restriction avoids t with the pattern's first alphabet symbol read as x.
inline Graph kitaev_induced_graph(const Word& w, const LabelTable& labels, const Pattern& t) {
  return induced_graph_by(w, labels, [&](Vertex x, Vertex y) {
    const Vertex pair[] = {x, y};
    return !detail::first_ordered_factor(restrict(w, pair), t, std::min(x, y), std::max(x, y));
  });
}

inline RepresentationReport represents_t(const Word& w, const Graph& g, const Pattern& t) {
  return detail::compare_pairs(w, g, [&](const Word& r) { return first_isomorphic_factor(r, t.symbols()); });
}

inline RepresentationReport kitaev_represents(const Word& w, const Graph& g, const Pattern& t) {
  return detail::compare_pairs(w, g, [&](const Word& r) -> std::optional<std::size_t> {
    const auto letters = alphabet(r);
    return detail::first_ordered_factor(r, t, letters.front(), letters.back());
  });
}

}  // namespace wordrep
