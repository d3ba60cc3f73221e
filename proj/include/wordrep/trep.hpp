#pragma once

// Edge-deletion constructions of t-representants. Every covered pattern
// shape starts from the ascending permutation of V, which t-represents the
// complete graph, and removes one non-edge at a time with a shape-specific
// word extension that kills exactly the requested edge.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wordrep/core.hpp"
#include "wordrep/patterns.hpp"

namespace wordrep {

struct DeletionStep {
  std::optional<std::pair<Vertex, Vertex>> edge;  // empty for the aab closing step
  Word segment;
  bool prepended = false;
};

struct DeletionTrace {
  Word start_word;
  std::vector<DeletionStep> steps;
  bool reversed = false;  // final word is the reverse of the replayed word
  Word final_word;
};

struct TRepresentant {
  Word word;
  DeletionTrace trace;
};

/// t with a -> i, b -> j.
inline Word substitute(const Pattern& t, Vertex i, Vertex j) {
  if (i == j) throw Error(ErrorKind::precondition, "substitution needs two distinct letters");
  Word out;
  for (char c : t.symbols()) out.push_back(c == 'a' ? i : j);
  return out;
}

namespace detail {
inline void require_edge(const Word& w, Vertex i, Vertex j, const Pattern& t) {
  if (!pair_avoids(w, i, j, t))
    throw Error(ErrorKind::precondition, "pair is not an edge of the word's induced graph");
}

inline void require_shape(const Pattern& t, PatternKind kind, std::size_t min_k, std::size_t min_l) {
  const auto s = classify_pattern(t);
  if (s.kind != kind || s.k < min_k || s.l < min_l)
    throw Error(ErrorKind::precondition, "pattern '" + t.symbols() + "' does not fit this deletion");
}

inline Word akbla_segment(const Word& w, Vertex i, Vertex j, const Pattern& t) {
  const std::size_t l = classify_pattern(t).l;
  Word seg;
  const auto tail = final_permutation(w);
  for (auto it = tail.rbegin(); it != tail.rend(); ++it) seg.insert(seg.end(), l + 1, *it);
  const auto sub = substitute(t, i, j);
  seg.insert(seg.end(), sub.begin(), sub.end());
  return seg;
}

inline Word akbl_segment(const Word& w, Vertex i, Vertex j, const Pattern& t) {
  Word seg = final_permutation(w);
  const auto sub = substitute(t, i, j);
  seg.insert(seg.end(), sub.begin(), sub.end());
  return seg;
}

/// i^{k-1} v i j pi(w), with v the ascending order of the other letters of w.
inline Word akb_prefix(const Word& w, Vertex i, Vertex j, const Pattern& t) {
  const std::size_t k = classify_pattern(t).k;
  Word seg(k - 1, i);
  for (Vertex v : alphabet(w))
    if (v != i && v != j) seg.push_back(v);
  seg.push_back(i);
  seg.push_back(j);
  const auto head = initial_permutation(w);
  seg.insert(seg.end(), head.begin(), head.end());
  return seg;
}
}  // namespace detail

/// For t = a^k b^l a: w, then each letter of the reversed final permutation
/// repeated l+1 times, then t[i,j].
inline Word delete_edge_akbla(const Word& w, Vertex i, Vertex j, const Pattern& t) {
  detail::require_shape(t, PatternKind::akbla, 1, 1);
  detail::require_edge(w, i, j, t);
  Word out = w;
  const auto seg = detail::akbla_segment(w, i, j, t);
  out.insert(out.end(), seg.begin(), seg.end());
  return out;
}

/// For t = a^k b^l with k, l >= 2: w s(w) t[i,j].
inline Word delete_edge_akbl(const Word& w, Vertex i, Vertex j, const Pattern& t) {
  detail::require_shape(t, PatternKind::akbl, 2, 2);
  detail::require_edge(w, i, j, t);
  Word out = w;
  const auto seg = detail::akbl_segment(w, i, j, t);
  out.insert(out.end(), seg.begin(), seg.end());
  return out;
}

/// For t = a^k b with k >= 3: i^{k-1} v i j p(w) w.
inline Word delete_edge_akb(const Word& w, Vertex i, Vertex j, const Pattern& t) {
  detail::require_shape(t, PatternKind::akb, 3, 0);
  detail::require_edge(w, i, j, t);
  Word out = detail::akb_prefix(w, i, j, t);
  out.insert(out.end(), w.begin(), w.end());
  return out;
}

/// w s(w): an aab-representant of the graph w represents.
inline Word aab_from_11(const Word& w) {
  if (w.empty()) return w;
  Word out = w;
  const auto tail = final_permutation(w);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

inline Word replay(const DeletionTrace& trace) {
  Word w = trace.start_word;
  for (const auto& step : trace.steps) {
    if (step.prepended)
      w.insert(w.begin(), step.segment.begin(), step.segment.end());
    else
      w.insert(w.end(), step.segment.begin(), step.segment.end());
  }
  return trace.reversed ? reverse_word(w) : w;
}

struct BuildOptions {
  std::size_t max_vertices = 12;
  std::optional<Word> representant_11;  // needed for aab / abb
};

/// A word t-representing g. Non-edges are deleted in lexicographic order.
inline TRepresentant build_t_representant(const Graph& g, const Pattern& t, const BuildOptions& opts = {}) {
  if (g.vertex_count() == 0) throw Error(ErrorKind::precondition, "graph has no vertices");
  if (g.vertex_count() > opts.max_vertices)
    throw Error(ErrorKind::precondition, "graph has " + std::to_string(g.vertex_count()) +
                                             " vertices; the builder is limited to " +
                                             std::to_string(opts.max_vertices));
  const auto shape = classify_pattern(t);
  TRepresentant out;
  out.trace.start_word = g.vertices();

  switch (shape.kind) {
    case PatternKind::all_same:
      throw Error(ErrorKind::out_of_scope, "patterns a^k are word-representability itself; no construction here");
    case PatternKind::other:
      throw Error(ErrorKind::unsupported, "no construction for pattern '" + t.symbols() + "'");
    case PatternKind::akb:
    case PatternKind::abk:
      if (shape.kind == PatternKind::akb && shape.k == 1) {
        if (g.edge_count() != 0) throw Error(ErrorKind::unrepresentable, "only empty graphs are ab-representable");
        out.word = out.trace.final_word = out.trace.start_word;
        return out;
      }
      if (shape.k == 2) {
        if (!opts.representant_11)
          throw Error(ErrorKind::open_case,
                      "aab/abb-representability is open in general; supply a word-representant of the graph");
        if (!represents_11(*opts.representant_11, g))
          throw Error(ErrorKind::invalid_input, "supplied word does not represent the graph");
        out.trace.start_word = *opts.representant_11;
        out.trace.steps.push_back({std::nullopt, final_permutation(*opts.representant_11), false});
        out.trace.reversed = shape.kind == PatternKind::abk;
        break;
      }
      {
        const Pattern forward = Pattern::parse(std::string(shape.k, 'a') + "b");
        Word w = out.trace.start_word;
        for (auto [i, j] : g.non_edges()) {
          auto seg = detail::akb_prefix(w, i, j, forward);
          w.insert(w.begin(), seg.begin(), seg.end());
          out.trace.steps.push_back({std::pair{i, j}, std::move(seg), true});
        }
        out.trace.reversed = shape.kind == PatternKind::abk;
      }
      break;
    case PatternKind::akbl:
    case PatternKind::akbla: {
      Word w = out.trace.start_word;
      for (auto [i, j] : g.non_edges()) {
        auto seg = shape.kind == PatternKind::akbl ? detail::akbl_segment(w, i, j, t) : detail::akbla_segment(w, i, j, t);
        w.insert(w.end(), seg.begin(), seg.end());
        out.trace.steps.push_back({std::pair{i, j}, std::move(seg), false});
      }
      break;
    }
  }
  out.word = out.trace.final_word = replay(out.trace);
  return out;
}

}  // namespace wordrep
