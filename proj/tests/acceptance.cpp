// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "test_util.hpp"
#include "wordrep/wordrep.hpp"

namespace {

using namespace wordrep;
using testing::as_strings;
using testing::naive_represents;

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;  // 0 for no limit
  std::function<void(std::vector<std::string>&)> body;
};

void expect(std::vector<std::string>& problems, bool ok, const std::string& what) {
  if (!ok) problems.push_back(what);
}

SearchResult oracle(const Graph& g, std::size_t max_len = 0, unsigned threads = 1, bool pruning = true) {
  SearchConfig cfg;
  cfg.max_len = max_len;
  cfg.threads = threads;
  cfg.pruning = pruning;
  return search_min_representants(g, cfg);
}

std::set<Word> as_set(const std::vector<Word>& ws) { return {ws.begin(), ws.end()}; }

void small_tree_words(std::vector<std::string>& p) {
  const Graph t = testing::small_tree();
  const auto r = oracle(t, 8);
  expect(p, r.ell == 6u, "ell != 6");
  expect(p, as_strings(t, r.words) == testing::kSmallTreeMinWords, "word set differs from the expected words");
  expect(p, r.words.size() == 10, "word count != 10");
}

void star_words(std::vector<std::string>& p) {
  const Graph s = star_graph(3);
  const auto r = oracle(s, 8);
  expect(p, r.ell == 6u, "ell != 6");
  expect(p, as_strings(s, r.words) == testing::kStar3MinWords, "oracle set differs from the expected words");
  expect(p, as_strings(s, star_min_representants(3)) == testing::kStar3MinWords, "star templates differ from the expected words");
}

void cycles(std::vector<std::string>& p) {
  const std::size_t expect_ell[] = {3, 6, 8}, expect_count[] = {6, 8, 10};
  for (std::size_t n = 3; n <= 5; ++n) {
    const auto r = oracle(cycle_graph(n), n == 3 ? 4 : 0);
    const std::string tag = "C" + std::to_string(n) + ": ";
    expect(p, r.ell == expect_ell[n - 3], tag + "ell");
    expect(p, r.words.size() == expect_count[n - 3], tag + "count");
    expect(p, r.words == enumerate_cycle_min_representants(n), tag + "enumerator differs from oracle");
  }
}

void uniform_cycles(std::vector<std::string>& p) {
  for (std::size_t n = 4; n <= 5; ++n) {
    const auto r = count_uniform_representants(cycle_graph(n), 2);
    expect(p, !r.truncated && r.words.size() == 4 * n, "C" + std::to_string(n) + ": count != 4n");
  }
}

void trees_vs_oracle(std::vector<std::string>& p) {
  for (std::size_t n = 3; n <= 5; ++n) {
    for (const auto& t : testing::all_labeled_trees(n)) {
      const auto r = oracle(t);
      const std::string tag = format_graph(t);
      expect(p, r.ell == 2 * n - 2, "ell on " + tag);
      expect(p, BigInt(r.words.size()) == count_tree_min(t), "count on " + tag);
      expect(p, as_set(r.words) == as_set(enumerate_tree_min_representants(t)), "enumerator on " + tag);
    }
  }
}

void paths(std::vector<std::string>& p) {
  for (std::size_t k = 3; k <= 10; ++k) {
    BigInt formula = BigInt(k + 1);
    for (std::size_t i = 3; i < k; ++i) formula *= 2;
    expect(p, count_tree_min(path_graph(k)) == formula, "P" + std::to_string(k) + ": count_tree_min");
    expect(p, count_path_min(k) == formula, "P" + std::to_string(k) + ": count_path_min");
  }
  for (std::size_t k = 3; k <= 5; ++k) {
    const auto r = oracle(path_graph(k));
    expect(p, BigInt(r.words.size()) == count_path_min(k), "P" + std::to_string(k) + ": oracle count");
  }
}

void round_trips(std::vector<std::string>& p) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<std::size_t> size(2, 10);
  for (int i = 0; i < 200; ++i) {
    const Graph t = testing::random_tree(size(rng), rng);
    const Word w = tree_min_representant(t);
    const bool ok = w.size() == 2 * t.vertex_count() - 2 && represents_11(w, t).ok() && naive_represents(w, t);
    expect(p, ok, "tree " + format_graph(t));
  }
  for (std::size_t n = 3; n <= 12; ++n) {
    const Word w = cycle_min_representant(n);
    const std::size_t ell = n == 3 ? 3 : 2 * n - 2;
    const bool ok = w.size() == ell && represents_11(w, cycle_graph(n)).ok() && naive_represents(w, cycle_graph(n));
    expect(p, ok, "cycle " + std::to_string(n));
  }
}

void t_builders(std::vector<std::string>& p) {
  const std::vector<std::pair<std::size_t, std::size_t>> pairs = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  for (unsigned mask = 0; mask < 64; ++mask) {
    Graph g(numbered_labels(4));
    for (std::size_t b = 0; b < 6; ++b)
      if (mask >> b & 1) g.add_edge(vertex(pairs[b].first), vertex(pairs[b].second));
    const std::string tag = " on edge mask " + std::to_string(mask);
    for (auto spelling : {"aaba", "aabba", "aabb", "aaabb", "aaab", "abbb"}) {
      const Pattern t = Pattern::parse(spelling);
      const Word w = build_t_representant(g, t).word;
      expect(p, represents_t(w, g, t).ok() && naive_represents(w, g, t.symbols()), spelling + tag);
    }
    bool built = true;
    try {
      const Word w = build_t_representant(g, Pattern::parse("ab")).word;
      expect(p, naive_represents(w, g, "ab"), "ab word fails" + tag);
    } catch (const Error&) {
      built = false;
    }
    expect(p, built == (mask == 0), "ab builder" + tag);
  }
}

void aab_doubling(std::vector<std::string>& p) {
  const Pattern aab = Pattern::parse("aab");
  auto check = [&](const Graph& g, const Word& w, const std::string& tag) {
    Word doubled = w;
    const auto tail = final_permutation(w);
    doubled.insert(doubled.end(), tail.begin(), tail.end());
    expect(p, induced_graph_t(doubled, g.labels(), aab) == induced_graph_11(w, g.labels()), tag);
    expect(p, aab_from_11(w) == doubled, tag + " (aab_from_11)");
  };
  for (std::size_t n = 2; n <= 5; ++n)
    for (const auto& t : testing::all_labeled_trees(n)) {
      check(t, tree_min_representant(t), "tree " + format_graph(t));
      for (const auto& w : enumerate_tree_min_representants(t)) check(t, w, "tree word on " + format_graph(t));
    }
  for (std::size_t n = 3; n <= 6; ++n) {
    check(cycle_graph(n), cycle_min_representant(n), "cycle " + std::to_string(n));
    for (const auto& w : enumerate_cycle_min_representants(n)) check(cycle_graph(n), w, "cycle word " + std::to_string(n));
  }
}

void kitaev(std::vector<std::string>& p) {
  const Graph k3 = complete_graph(3);
  const Word w = testing::W(k3, "2123");
  const Pattern aba = Pattern::parse("aba");
  const Graph plain = induced_graph_t(w, k3.labels(), aba);
  expect(p, plain == testing::graph_of("13 23", 3), "plain reading");
  expect(p, kitaev_induced_graph(w, k3.labels(), aba) == k3, "ordered reading");
}

void composition(std::vector<std::string>& p) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<std::size_t> parts(1, 4), size(1, 6);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::size_t> sizes(parts(rng));
    std::size_t n = 0;
    for (auto& s : sizes) n += s = size(rng);
    std::vector<std::size_t> ids(n);
    for (std::size_t i = 0; i < n; ++i) ids[i] = i;
    std::ranges::shuffle(ids, rng);

    Graph forest(numbered_labels(n));
    std::vector<Word> words;
    std::size_t next = 0, sum = 0, largest = 0;
    for (std::size_t s : sizes) {
      std::vector<Vertex> local;
      for (std::size_t i = 0; i < s; ++i) local.push_back(vertex(ids[next++]));
      Word w{local[0]};
      if (s >= 2) {
        const Graph t = testing::random_tree(s, rng);
        for (auto [u, v] : t.edges()) forest.add_edge(local[index(u)], local[index(v)]);
        w.clear();
        for (Vertex v : tree_min_representant(t)) w.push_back(local[index(v)]);
      }
      sum += w.size() + s;
      largest = std::max(largest, s);
      words.push_back(std::move(w));
    }
    std::ranges::stable_sort(words, {}, [](const Word& w) { return alphabet(w).size(); });
    const Word w = compose_components(words);
    const std::string tag = "forest " + std::to_string(trial);
    expect(p, represents_11(w, forest).ok() && naive_represents(w, forest), tag + " does not verify");
    expect(p, w.size() == sum - largest, tag + " length");
  }
}

void determinism(std::vector<std::string>& p) {
  const std::vector<Graph> graphs = {testing::small_tree(), star_graph(3), cycle_graph(3), cycle_graph(4),
                                     cycle_graph(5)};
  for (const auto& g : graphs) {
    const auto base = oracle(g);
    const std::string tag = format_graph(g);
    for (unsigned threads : {2u, 8u}) {
      const auto r = oracle(g, 0, threads);
      expect(p, r == base && r.explored == base.explored, tag + " threads " + std::to_string(threads));
    }
    expect(p, oracle(g, 0, 1, false) == base, tag + " pruning off");
    expect(p, oracle(g, 0, 8, false) == base, tag + " pruning off, 8 threads");
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Minimal words of the four-vertex tree", 1, small_tree_words},
      {2, "Minimal words of the three-leaf star", 5, star_words},
      {3, "Cycles C3, C4, C5: oracle and enumerator", 60, cycles},
      {4, "2-uniform representants of C4 and C5", 30, uniform_cycles},
      {5, "All labeled trees on 3..5 vertices: oracle, formula, enumerator", 600, trees_vs_oracle},
      {6, "Path counts for k = 3..10, oracle for k = 3..5", 0, paths},
      {7, "Tree and cycle constructions verify with the right length", 0, round_trips},
      {8, "t-builders on all 64 graphs on four vertices", 120, t_builders},
      {9, "aab words from word-representants", 0, aab_doubling},
      {10, "Ordered and unordered readings of 2123 with aba", 0, kitaev},
      {11, "Composition over random forests", 0, composition},
      {12, "Oracle determinism across workers and pruning", 0, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    std::vector<std::string> problems;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(problems);
    } catch (const std::exception& e) {
      problems.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds)
      problems.push_back("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds) + " s");
    const bool pass = problems.empty();
    failures += pass ? 0 : 1;
    std::printf("%s criterion %d: %s (%.3f s)\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(), secs);
    for (std::size_t i = 0; i < problems.size() && i < 5; ++i) std::printf("    %s\n", problems[i].c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
