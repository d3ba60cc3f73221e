#pragma once

// Exhaustive search for minimal-length (optionally k-uniform) t-representants
// of small graphs. Words of each length are enumerated in lexicographic order,
// partitioned by first letter; partitions run independently and are merged in
// letter order, so results do not depend on the worker count.
//
// Pruning (when enabled) rejects a prefix only if no completion can verify:
//   * more vertices are still missing than positions remain;
//   * some edge pair already contains the pattern. Containment of a factor in
//     the pair restriction is preserved by every extension, so the pair can
//     never become an edge again.
// Without pruning every word is built and checked with represents_t.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "wordrep/core.hpp"
#include "wordrep/patterns.hpp"

namespace wordrep {

enum class SearchMode { first, all_minimal, all_at_length };

struct SearchConfig {
  Pattern pattern = Pattern::parse("aa");
  std::size_t max_len = 0;  // 0 means 2|V|
  std::optional<std::size_t> uniform_k;
  SearchMode mode = SearchMode::all_minimal;
  std::size_t at_length = 0;  // used by all_at_length
  unsigned threads = 1;
  bool pruning = true;
  std::uint64_t explored_cap = 1'000'000'000;
};

struct SearchResult {
  std::optional<std::size_t> ell;
  std::vector<Word> words;
  std::uint64_t explored = 0;  // prefixes visited
  bool truncated = false;

  /// Equality of the answer; `explored` depends on pruning and is ignored.
  friend bool operator==(const SearchResult& a, const SearchResult& b) {
    return a.ell == b.ell && a.words == b.words && a.truncated == b.truncated;
  }
};

namespace detail {

class PartitionSearch {
 public:
  PartitionSearch(const Graph& g, const SearchConfig& cfg, std::size_t length, std::uint64_t cap)
      : g_(g), cfg_(cfg), n_(g.vertex_count()), length_(length), cap_(cap), m_(cfg.pattern.size()) {
    if (m_ > 63) throw Error(ErrorKind::precondition, "oracle patterns are limited to 63 letters");
    for (std::size_t b = 0; b < m_; ++b)
      if (cfg.pattern.symbols()[m_ - 1 - b] == 'b') mask_ |= std::uint64_t{1} << b;
    full_ = (std::uint64_t{1} << m_) - 1;
    hist_.assign(n_ * n_, 0);
    len_.assign(n_ * n_, 0);
    hit_.assign(n_ * n_, 0);
    count_.assign(n_, 0);
    nonedges_ = n_ * (n_ - 1) / 2 - g.edge_count();
  }

  void run(Vertex first) {
    missing_ = n_;
    if (cfg_.uniform_k && *cfg_.uniform_k == 0) return;
    step(first);
  }

  std::vector<Word> words;
  std::uint64_t explored = 0;
  bool truncated = false;

 private:
  struct Saved {
    std::uint64_t hist;
    std::uint32_t len;
    char hit;
  };

  bool done() const { return truncated || (cfg_.mode == SearchMode::first && !words.empty()); }

  void step(Vertex x) {
    if (++explored > cap_) {
      truncated = true;
      return;
    }
    const std::size_t xi = index(x);
    if (cfg_.uniform_k && count_[xi] == *cfg_.uniform_k) return;

    std::vector<Saved> saved;
    saved.reserve(n_);
    const std::size_t nonedge_hits_before = nonedge_hits_;
    bool edge_hit = false;
    if (cfg_.pruning) {
      for (std::size_t y = 0; y < n_; ++y) {
        if (y == xi) continue;
        const std::size_t p = pair(xi, y);
        saved.push_back({hist_[p], len_[p], hit_[p]});
        hist_[p] = (hist_[p] << 1) | (xi > y ? 1u : 0u);
        ++len_[p];
        if (hit_[p] || len_[p] < m_) continue;
        const std::uint64_t tail = hist_[p] & full_;
        if (tail == mask_ || tail == (~mask_ & full_)) {
          hit_[p] = 1;
          if (g_.has_edge(x, vertex(y)))
            edge_hit = true;
          else
            ++nonedge_hits_;
        }
      }
    }
    word_.push_back(x);
    if (count_[xi]++ == 0) --missing_;

    if (!edge_hit) {
      const std::size_t remaining = length_ - word_.size();
      if (remaining == 0) {
        if (accept()) words.push_back(word_);
      } else if (!cfg_.pruning || missing_ <= remaining) {
        for (std::size_t y = 0; y < n_ && !done(); ++y) step(vertex(y));
      }
    }

    if (--count_[xi] == 0) ++missing_;
    word_.pop_back();
    if (cfg_.pruning) {
      std::size_t s = 0;
      for (std::size_t y = 0; y < n_; ++y) {
        if (y == xi) continue;
        const std::size_t p = pair(xi, y);
        hist_[p] = saved[s].hist;
        len_[p] = saved[s].len;
        hit_[p] = saved[s].hit;
        ++s;
      }
      nonedge_hits_ = nonedge_hits_before;
    }
  }

  bool accept() const {
    if (missing_ != 0) return false;
    if (cfg_.uniform_k && std::ranges::any_of(count_, [&](std::size_t c) { return c != *cfg_.uniform_k; }))
      return false;
    if (cfg_.pruning) return nonedge_hits_ == nonedges_;
    return represents_t(word_, g_, cfg_.pattern).ok();
  }

  std::size_t pair(std::size_t a, std::size_t b) const { return a < b ? a * n_ + b : b * n_ + a; }

  const Graph& g_;
  const SearchConfig& cfg_;
  std::size_t n_;
  std::size_t length_;
  std::uint64_t cap_;
  std::size_t m_;
  std::uint64_t mask_ = 0;
  std::uint64_t full_ = 0;
  std::vector<std::uint64_t> hist_;
  std::vector<std::uint32_t> len_;
  std::vector<char> hit_;
  std::vector<std::size_t> count_;
  std::size_t missing_ = 0;
  std::size_t nonedges_ = 0;
  std::size_t nonedge_hits_ = 0;
  Word word_;
};

struct LengthResult {
  std::vector<Word> words;
  std::uint64_t explored = 0;
  bool truncated = false;
};

inline LengthResult search_length(const Graph& g, const SearchConfig& cfg, std::size_t length) {
  const std::size_t n = g.vertex_count();
  const std::uint64_t cap = cfg.explored_cap / n + 1;
  std::vector<LengthResult> parts(n);
  auto work = [&](std::size_t first) {
    PartitionSearch s(g, cfg, length, cap);
    s.run(vertex(first));
    parts[first] = {std::move(s.words), s.explored, s.truncated};
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(cfg.threads, static_cast<unsigned>(n)));
  if (workers == 1) {
    for (std::size_t f = 0; f < n; ++f) work(f);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t f = t; f < n; f += workers) work(f);
      });
  }
  LengthResult out;
  for (auto& p : parts) {
    out.explored += p.explored;
    out.truncated = out.truncated || p.truncated;
    out.words.insert(out.words.end(), p.words.begin(), p.words.end());
  }
  std::ranges::sort(out.words);
  if (cfg.mode == SearchMode::first && out.words.size() > 1) out.words.resize(1);
  return out;
}

}  // namespace detail

inline SearchResult search_min_representants(const Graph& g, SearchConfig cfg) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw Error(ErrorKind::precondition, "oracle needs at least one vertex");
  if (cfg.max_len == 0) cfg.max_len = 2 * n;
  if (cfg.max_len < n) throw Error(ErrorKind::precondition, "max_len is smaller than the vertex count");

  std::size_t lo = n, hi = cfg.max_len;
  if (cfg.uniform_k) {
    if (*cfg.uniform_k == 0) throw Error(ErrorKind::precondition, "uniform k must be positive");
    lo = hi = *cfg.uniform_k * n;
    if (lo > cfg.max_len) cfg.max_len = lo;
  }
  if (cfg.mode == SearchMode::all_at_length) {
    if (cfg.at_length < n || cfg.at_length > cfg.max_len)
      throw Error(ErrorKind::precondition, "search length outside [|V|, max_len]");
    if (cfg.uniform_k && cfg.at_length != lo) throw Error(ErrorKind::precondition, "uniform words have length k|V|");
    lo = hi = cfg.at_length;
  }

  SearchResult res;
  for (std::size_t len = lo; len <= hi; ++len) {
    auto part = detail::search_length(g, cfg, len);
    res.explored += part.explored;
    if (part.truncated) {
      res.truncated = true;
      res.words = std::move(part.words);
      return res;
    }
    if (!part.words.empty()) {
      res.ell = len;
      res.words = std::move(part.words);
      return res;
    }
  }
  return res;
}

/// All k-uniform representants of g (multiset permutations in lexicographic order).
inline SearchResult count_uniform_representants(const Graph& g, std::size_t k, unsigned threads = 1) {
  SearchConfig cfg;
  cfg.uniform_k = k;
  cfg.threads = threads;
  return search_min_representants(g, cfg);
}

}  // namespace wordrep
