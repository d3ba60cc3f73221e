#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "test_util.hpp"
#include "wordrep/core.hpp"

namespace wordrep {
namespace {

using testing::small_tree;
using testing::S;
using testing::W;

std::string str(const std::vector<char>& v) { return {v.begin(), v.end()}; }

TEST(Restrict, Examples) {
  EXPECT_EQ(str(restrict(std::string("132435213"), std::string("12"))), "1221");
  EXPECT_EQ(str(restrict(std::string("212434"), std::string("34"))), "434");
  EXPECT_EQ(str(restrict(std::string("212434"), std::string("1234"))), "212434");
  EXPECT_TRUE(restrict(std::string("212434"), std::string()).empty());
}

TEST(InitialFinalPermutation, Examples) {
  EXPECT_EQ(str(initial_permutation(std::string("132435213"))), "13245");
  EXPECT_EQ(str(initial_permutation(std::string("2124341234"))), "2143");
  EXPECT_EQ(str(initial_permutation(std::string("3142"))), "3142");
  EXPECT_EQ(str(final_permutation(std::string("132435213"))), "45213");
  EXPECT_EQ(str(final_permutation(std::string("212434"))), "1234");
  EXPECT_EQ(str(final_permutation(std::string("3142"))), "3142");
  EXPECT_THROW(initial_permutation(std::string()), Error);
  EXPECT_THROW(final_permutation(std::string()), Error);
}

TEST(Alternates, Examples) {
  const std::string w = "212434";
  EXPECT_TRUE(alternates(w, '1', '2'));
  EXPECT_FALSE(alternates(w, '1', '4'));
  EXPECT_TRUE(alternates(std::string("12"), '1', '2'));
}

TEST(Alternates, UndefinedCasesThrow) {
  const std::string w = "212434";
  EXPECT_THROW(alternates(w, '1', '1'), Error);
  EXPECT_THROW(alternates(w, '1', '9'), Error);
  try {
    alternates(w, '5', '1');
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::precondition);
  }
}

TEST(Uniformity, Examples) {
  EXPECT_EQ(uniformity(std::string("12332414")), (UniformityReport{true, 2}));
  EXPECT_EQ(uniformity(std::string("1234")), (UniformityReport{true, 1}));
  EXPECT_FALSE(uniformity(std::string("212434")).is_uniform);
  EXPECT_THROW(uniformity(std::string()), Error);
}

TEST(ReverseWord, Examples) {
  EXPECT_EQ(str(reverse_word(std::string("123"))), "321");
  EXPECT_EQ(str(reverse_word(std::string("212434"))), "434212");
  EXPECT_TRUE(reverse_word(std::string()).empty());
}

TEST(InducedGraph11, Examples) {
  const Graph t = small_tree();
  EXPECT_EQ(induced_graph_11(W(t, "212434"), t.labels()), t);
  for (std::size_t n = 1; n <= 6; ++n) {
    const Graph k = complete_graph(n);
    EXPECT_EQ(induced_graph_11(k.vertices(), k.labels()), k);
  }
  Graph expected = edgeless_graph(3);
  expected.add_edge("1", "2");
  EXPECT_EQ(induced_graph_11(W(expected, "3312"), expected.labels()), expected);
}

TEST(InducedGraph11, KeepsOnlyLettersOfTheWord) {
  const Graph t = small_tree();
  const Graph h = induced_graph_11(W(t, "434"), t.labels());
  ASSERT_EQ(h.vertex_count(), 2u);
  EXPECT_EQ(h.label(vertex(0)), "3");
  EXPECT_TRUE(h.has_edge(vertex(0), vertex(1)));
}

TEST(Represents11, Examples) {
  const Graph t = small_tree();
  EXPECT_TRUE(represents_11(W(t, "212434"), t));
  EXPECT_TRUE(represents_11(W(path_graph(2), "12"), path_graph(2)));

  const Graph k4 = complete_graph(4);
  const auto rep = represents_11(W(k4, "212434"), k4);
  EXPECT_FALSE(rep);
  EXPECT_TRUE(rep.spurious_edges.empty());
  EXPECT_NE(std::ranges::find(rep.missing_edges, std::pair{vertex(0), vertex(3)}), rep.missing_edges.end());
  ASSERT_EQ(rep.witnesses.size(), rep.missing_edges.size());
  for (const auto& wit : rep.witnesses) EXPECT_TRUE(wit.factor.has_value());
}

TEST(Represents11, ReportsMissingVerticesAndSpuriousEdges) {
  const Graph t = small_tree();
  auto rep = represents_11(W(t, "2123"), t);
  EXPECT_EQ(rep.missing_vertices, std::vector<Vertex>{vertex(3)});

  const Graph empty = edgeless_graph(2);
  rep = represents_11(W(empty, "12"), empty);
  ASSERT_EQ(rep.spurious_edges.size(), 1u);
  EXPECT_FALSE(rep.witnesses[0].factor.has_value());
}

TEST(GraphType, Invariants) {
  Graph g;
  const Vertex a = g.add_vertex("x");
  const Vertex b = g.ensure_vertex("long-label");
  EXPECT_EQ(g.ensure_vertex("x"), a);
  EXPECT_THROW(g.add_vertex("x"), Error);
  EXPECT_THROW(g.add_vertex("has space"), Error);
  EXPECT_THROW(g.add_edge(a, a), Error);
  EXPECT_TRUE(g.add_edge(a, b));
  EXPECT_FALSE(g.add_edge(b, a));
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.label(vertex(1)), "long-label");
}

TEST(GraphHelpers, TreesAndComponents) {
  EXPECT_TRUE(is_tree(small_tree()));
  EXPECT_FALSE(is_tree(cycle_graph(4)));
  EXPECT_FALSE(is_tree(edgeless_graph(2)));
  EXPECT_TRUE(is_triangle_free(cycle_graph(4)));
  EXPECT_FALSE(is_triangle_free(cycle_graph(3)));
  Graph g = edgeless_graph(5);
  g.add_edge("1", "3");
  g.add_edge("4", "5");
  const auto comps = connected_components(g);
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0], (std::vector<Vertex>{vertex(0), vertex(2)}));
}

class WordProperties : public ::testing::Test {
 protected:
  std::mt19937 rng{20261019};
};

TEST_F(WordProperties, RestrictComposes) {
  for (int trial = 0; trial < 300; ++trial) {
    const Word w = testing::random_word(5, 1 + trial % 12, rng);
    const Word s = testing::random_word(5, 3, rng), t = testing::random_word(5, 3, rng);
    Word both;
    for (Vertex v : s)
      if (occurs(t, v)) both.push_back(v);
    EXPECT_EQ(restrict(restrict(w, s), t), restrict(w, both));
  }
}

TEST_F(WordProperties, InitialOfReverseIsReverseOfFinal) {
  for (int trial = 0; trial < 300; ++trial) {
    const Word w = testing::random_word(6, 1 + trial % 15, rng);
    EXPECT_EQ(initial_permutation(reverse_word(w)), reverse_word(final_permutation(w)));
  }
}

TEST_F(WordProperties, AppendingFinalPermutationKeepsGraph) {
  const LabelTable labels(numbered_labels(6));
  for (int trial = 0; trial < 300; ++trial) {
    const Word w = testing::random_word(6, 1 + trial % 15, rng);
    Word ext = w;
    for (Vertex v : final_permutation(w)) ext.push_back(v);
    EXPECT_EQ(induced_graph_11(ext, labels), induced_graph_11(w, labels));
  }
}

TEST_F(WordProperties, PermutationsInduceCompleteGraphs) {
  for (std::size_t n = 2; n <= 7; ++n) {
    const Graph k = complete_graph(n);
    Word p = k.vertices();
    std::ranges::shuffle(p, rng);
    EXPECT_TRUE(represents_11(p, k));
  }
}

TEST_F(WordProperties, MultiplicityShortcuts) {
  for (int trial = 0; trial < 500; ++trial) {
    const Word w = testing::random_word(4, 2 + trial % 12, rng);
    const auto counts = multiplicities(w, 4);
    for (std::size_t x = 0; x < 4; ++x)
      for (std::size_t y = 0; y < 4; ++y) {
        if (x == y || counts[x] == 0 || counts[y] == 0) continue;
        if (counts[x] >= 3 && counts[y] == 1) {
          EXPECT_FALSE(alternates(w, vertex(x), vertex(y)));
        }
        if (counts[x] == 1 && counts[y] == 1) {
          EXPECT_TRUE(alternates(w, vertex(x), vertex(y)));
        }
      }
  }
}

TEST_F(WordProperties, Represents11AgreesWithReferenceChecker) {
  for (int trial = 0; trial < 400; ++trial) {
    const Graph t = testing::random_tree(4 + trial % 2, rng);
    const Word w = testing::random_word(t.vertex_count(), 4 + trial % 6, rng);
    EXPECT_EQ(represents_11(w, t).ok(), testing::naive_represents(w, t)) << S(t, w);
  }
}

}  // namespace
}  // namespace wordrep
