#pragma once

// Minimal-length word-representants of trees, stars, cycles and disjoint
// unions: explicit constructions, complete enumerations and closed-form
// counts.
//
// A minimal representant of a tree T (length 2n-2) has exactly two letters
// x, y occurring once, xy is an edge, and the word splits as a block over the
// x side of T - xy followed by a block over the y side (or the reverse). Each
// side block is a nested arrangement: every vertex z of the side occurring
// twice carries its children as two nested stacks, one around each of its
// occurrences; the root carries all its children around its single
// occurrence.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wordrep/core.hpp"

namespace wordrep {

using BigInt = boost::multiprecision::cpp_int;

struct MinRepSummary {
  std::size_t ell = 0;
  BigInt count = 0;
};

struct TreeSplit {
  Vertex x{};
  Vertex y{};
  std::vector<Vertex> side_x;  // component of x in T - xy, canonical order
  std::vector<Vertex> side_y;
};

namespace detail {
inline void require_tree(const Graph& t, std::size_t min_vertices = 1) {
  if (!is_tree(t)) throw Error(ErrorKind::precondition, "graph is not a tree");
  if (t.vertex_count() < min_vertices)
    throw Error(ErrorKind::precondition, "tree needs at least " + std::to_string(min_vertices) + " vertices");
}

/// Vertices reachable from `root` without crossing `blocked`.
inline std::vector<Vertex> side_of(const Graph& t, Vertex root, Vertex blocked) {
  std::vector<Vertex> out{root};
  std::vector<char> seen(t.vertex_count(), 0);
  seen[index(root)] = seen[index(blocked)] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (Vertex v : t.neighbors(out[i]))
      if (!seen[index(v)]) {
        seen[index(v)] = 1;
        out.push_back(v);
      }
  std::ranges::sort(out);
  return out;
}

/// Children of v when the tree hangs from `parent` (nullopt at the root).
inline std::vector<Vertex> children(const Graph& t, Vertex v, std::optional<Vertex> parent) {
  std::vector<Vertex> out;
  for (Vertex u : t.neighbors(v))
    if (!parent || u != *parent) out.push_back(u);
  return out;
}

inline Word concat(std::initializer_list<const Word*> parts) {
  Word out;
  for (const Word* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}
}  // namespace detail

inline TreeSplit split_tree_at_edge(const Graph& t, Vertex x, Vertex y) {
  detail::require_tree(t, 2);
  if (x == y || !t.has_edge(x, y)) throw Error(ErrorKind::precondition, "split edge is not an edge of the tree");
  return {x, y, detail::side_of(t, x, y), detail::side_of(t, y, x)};
}

/// One minimal representant of a tree with n >= 2 vertices, length 2n-2.
/// Leaves are peeled latest-canonical-first down to the last edge; on the
/// way back each leaf a replaces the leftmost occurrence of its neighbor b by
/// "a b a".
inline Word tree_min_representant(const Graph& t) {
  detail::require_tree(t, 2);
  const std::size_t n = t.vertex_count();
  std::vector<std::size_t> degree(n);
  std::vector<char> removed(n, 0);
  for (Vertex v : t.vertices()) degree[index(v)] = t.degree(v);

  std::vector<std::pair<Vertex, Vertex>> peeled;  // (leaf, neighbor)
  for (std::size_t left = n; left > 2; --left) {
    std::size_t leaf = n;
    for (std::size_t i = n; i-- > 0;)
      if (!removed[i] && degree[i] == 1) {
        leaf = i;
        break;
      }
    Vertex nb{};
    for (Vertex u : t.neighbors(vertex(leaf)))
      if (!removed[index(u)]) nb = u;
    removed[leaf] = 1;
    --degree[index(nb)];
    peeled.emplace_back(vertex(leaf), nb);
  }

  Word w;
  for (std::size_t i = 0; i < n; ++i)
    if (!removed[i]) w.push_back(vertex(i));

  for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
    const auto [a, b] = *it;
    auto pos = std::ranges::find(w, b);
    pos = w.insert(pos, a);
    w.insert(pos + 2, a);
  }
  return w;
}

namespace detail {
/// Words for u1..u_{m-1} c u_{m-1}..u1 with the remaining leaf before or after.
inline std::vector<Word> star_templates(Vertex center, const std::vector<Vertex>& leaves) {
  std::vector<Word> out;
  for (Vertex single : leaves) {
    std::vector<Vertex> rest;
    for (Vertex u : leaves)
      if (u != single) rest.push_back(u);
    std::ranges::sort(rest);
    do {
      Word core(rest.begin(), rest.end());
      core.push_back(center);
      core.insert(core.end(), rest.rbegin(), rest.rend());
      Word front{single};
      front.insert(front.end(), core.begin(), core.end());
      core.push_back(single);
      out.push_back(std::move(front));
      out.push_back(std::move(core));
    } while (std::ranges::next_permutation(rest).found);
  }
  std::ranges::sort(out);
  out.erase(std::ranges::unique(out).begin(), out.end());
  return out;
}
}  // namespace detail

/// All 2 * k! minimal representants of a star with k >= 1 leaves.
inline std::vector<Word> star_min_representants(const Graph& star) {
  const std::size_t n = star.vertex_count();
  if (n < 2 || !is_tree(star)) throw Error(ErrorKind::precondition, "graph is not a star");
  Vertex center = vertex(0);
  for (Vertex v : star.vertices())
    if (star.degree(v) == n - 1) {
      center = v;
      break;
    }
  if (star.degree(center) != n - 1) throw Error(ErrorKind::precondition, "graph is not a star");
  return detail::star_templates(center, star.neighbors(center));
}

inline std::vector<Word> star_min_representants(std::size_t k) {
  if (k < 1) throw Error(ErrorKind::precondition, "a star needs at least one leaf");
  return star_min_representants(star_graph(k));
}

/// Cyclic vertex order of a cycle graph: starts at the first vertex and
/// continues toward its canonically smaller neighbor.
inline std::vector<Vertex> cycle_order(const Graph& c) {
  const std::size_t n = c.vertex_count();
  if (n < 3 || c.edge_count() != n || connected_components(c).size() != 1 ||
      std::ranges::any_of(c.vertices(), [&](Vertex v) { return c.degree(v) != 2; }))
    throw Error(ErrorKind::precondition, "graph is not a cycle");
  std::vector<Vertex> order{vertex(0), c.neighbors(vertex(0)).front()};
  while (order.size() < n) {
    for (Vertex v : c.neighbors(order.back()))
      if (v != order[order.size() - 2]) {
        order.push_back(v);
        break;
      }
  }
  return order;
}

inline std::size_t ell_cycle(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::precondition, "a cycle needs at least 3 vertices");
  return n == 3 ? 3 : 2 * n - 2;
}

inline BigInt count_cycle_min(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::precondition, "a cycle needs at least 3 vertices");
  return BigInt(2 * n);
}

namespace detail {
/// Minimal representant of the cycle c1 c2 ... cn (cyclic order) in which c1
/// and c2 occur once, c1 first. Starting from "c1 c2": c3 surrounds c2, each
/// following c_i surrounds the leftmost c_{i-1}, and c_n additionally
/// surrounds c1.
inline Word cycle_completion(const std::vector<Vertex>& c) {
  const std::size_t n = c.size();
  Word w{c[0], c[1]};
  auto surround = [&w](std::size_t from, std::size_t to, Vertex v) {
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(to) + 1, v);
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(from), v);
  };
  surround(1, 1, c[2]);
  for (std::size_t i = 3; i < n; ++i) {
    const auto prev = static_cast<std::size_t>(std::ranges::find(w, c[i - 1]) - w.begin());
    if (i + 1 < n)
      surround(prev, prev, c[i]);
    else
      surround(0, prev, c[i]);  // c1 is still the first letter
  }
  return w;
}
}  // namespace detail

/// n = 3: the identity permutation; n >= 4: n 1 (n-1) n (n-2)(n-1) ... 3 4 2 3.
inline Word cycle_min_representant(const Graph& c) {
  const auto order = cycle_order(c);
  const std::size_t n = order.size();
  if (n == 3) return c.vertices();
  Word w{order[n - 1], order[0]};
  for (std::size_t top = n - 1; top >= 2; --top) {
    w.push_back(order[top - 1]);
    w.push_back(order[top]);
  }
  return w;
}

inline Word cycle_min_representant(std::size_t n) { return cycle_min_representant(cycle_graph(n)); }

/// All 2n minimal representants of a cycle, sorted.
inline std::vector<Word> enumerate_cycle_min_representants(const Graph& c) {
  const auto order = cycle_order(c);
  const std::size_t n = order.size();
  std::vector<Word> out;
  if (n == 3) {
    Word p = c.vertices();
    do out.push_back(p);
    while (std::ranges::next_permutation(p).found);
    return out;
  }
  for (std::size_t s = 0; s < n; ++s) {
    for (int dir : {+1, -1}) {
      std::vector<Vertex> rotated;
      for (std::size_t i = 0; i < n; ++i) rotated.push_back(order[dir > 0 ? (s + i) % n : (s + n - i) % n]);
      out.push_back(detail::cycle_completion(rotated));
    }
  }
  std::ranges::sort(out);
  if (std::ranges::adjacent_find(out) != out.end()) throw std::logic_error("duplicate cycle representant");
  return out;
}

inline std::vector<Word> enumerate_cycle_min_representants(std::size_t n) {
  return enumerate_cycle_min_representants(cycle_graph(n));
}

namespace detail {
using BlockPair = std::pair<Word, Word>;

inline std::vector<BlockPair> doubled_blocks(const Graph& t, Vertex z, Vertex parent);

/// Blocks for the children of one vertex occurrence: each element is
/// (left part, right part) to be placed as left + occurrence + right, with
/// children nested outermost first.
inline std::vector<BlockPair> nested_stacks(const Graph& t, const std::vector<Vertex>& kids, Vertex parent) {
  std::vector<BlockPair> acc{{}};
  for (Vertex kid : kids) {
    const auto kid_blocks = doubled_blocks(t, kid, parent);
    std::vector<BlockPair> next;
    for (const auto& [left, right] : acc)
      for (const auto& [kl, kr] : kid_blocks) next.push_back({concat({&left, &kl}), concat({&kr, &right})});
    acc = std::move(next);
  }
  return acc;
}

/// Every (block around first occurrence, block around second occurrence)
/// for a vertex z occurring twice, hanging from `parent`.
inline std::vector<BlockPair> doubled_blocks(const Graph& t, Vertex z, Vertex parent) {
  auto kids = children(t, z, parent);
  std::ranges::sort(kids);
  std::vector<BlockPair> out;
  const Word mid{z};
  do {
    for (std::size_t cut = 0; cut <= kids.size(); ++cut) {
      const std::vector<Vertex> first(kids.begin(), kids.begin() + static_cast<std::ptrdiff_t>(cut));
      const std::vector<Vertex> second(kids.begin() + static_cast<std::ptrdiff_t>(cut), kids.end());
      for (const auto& [l1, r1] : nested_stacks(t, first, z))
        for (const auto& [l2, r2] : nested_stacks(t, second, z))
          out.push_back({concat({&l1, &mid, &r1}), concat({&l2, &mid, &r2})});
    }
  } while (std::ranges::next_permutation(kids).found);
  return out;
}

/// Words over the side of `root` (away from `other`) with root once and every
/// other side vertex twice, representing that subtree.
inline std::vector<Word> side_words(const Graph& t, Vertex root, Vertex other) {
  auto kids = children(t, root, other);
  std::ranges::sort(kids);
  std::vector<Word> out;
  const Word mid{root};
  do {
    for (const auto& [left, right] : nested_stacks(t, kids, root)) out.push_back(concat({&left, &mid, &right}));
  } while (std::ranges::next_permutation(kids).found);
  return out;
}
}  // namespace detail

/// All minimal representants of a tree with n >= 2 vertices, sorted.
inline std::vector<Word> enumerate_tree_min_representants(const Graph& t) {
  detail::require_tree(t, 2);
  std::vector<Word> out;
  for (auto [x, y] : t.edges()) {
    const auto xs = detail::side_words(t, x, y);
    const auto ys = detail::side_words(t, y, x);
    for (const auto& a : xs)
      for (const auto& b : ys) {
        out.push_back(detail::concat({&a, &b}));
        out.push_back(detail::concat({&b, &a}));
      }
  }
  std::ranges::sort(out);
  if (std::ranges::adjacent_find(out) != out.end()) throw std::logic_error("duplicate tree representant");
  return out;
}

inline BigInt factorial(std::size_t n) {
  BigInt r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= i;
  return r;
}

/// Number of minimal representants of a tree: 2 * sum over edges xy of
/// n_x * n_y, where n_x = (deg x - 1)! * prod of deg(u)! over the x side
/// without x. Each summand equals prod deg(v)! / (deg x * deg y).
inline BigInt count_tree_min(const Graph& t) {
  detail::require_tree(t, 2);
  BigInt total = 0;
  for (auto [x, y] : t.edges()) {
    const auto split = split_tree_at_edge(t, x, y);
    auto side_count = [&](Vertex root, const std::vector<Vertex>& side) {
      BigInt c = factorial(t.degree(root) - 1);
      for (Vertex u : side)
        if (u != root) c *= factorial(t.degree(u));
      return c;
    };
    total += side_count(x, split.side_x) * side_count(y, split.side_y);
  }
  return 2 * total;
}

inline MinRepSummary tree_min_summary(const Graph& t) {
  return {2 * t.vertex_count() - 2, count_tree_min(t)};
}

/// (k + 1) * 2^(k - 3) for k >= 3.
inline BigInt count_path_min(std::size_t k) {
  if (k < 3) throw Error(ErrorKind::precondition, "path count formula needs k >= 3");
  return BigInt(k + 1) << (k - 3);
}

/// w1 s(w1) w2 s(w2) ... w_{k-1} s(w_{k-1}) w_k with s the final permutation.
/// Callers put a component with the most vertices last to hit the bound.
inline Word compose_components(const std::vector<Word>& words) {
  std::vector<Vertex> seen;
  for (const auto& w : words) {
    if (w.empty()) throw Error(ErrorKind::precondition, "empty component word");
    for (Vertex v : alphabet(w)) {
      if (std::ranges::find(seen, v) != seen.end())
        throw Error(ErrorKind::precondition, "component alphabets overlap");
      seen.push_back(v);
    }
  }
  Word out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    out.insert(out.end(), words[i].begin(), words[i].end());
    if (i + 1 < words.size()) {
      const auto tail = final_permutation(words[i]);
      out.insert(out.end(), tail.begin(), tail.end());
    }
  }
  return out;
}

}  // namespace wordrep
