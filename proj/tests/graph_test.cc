// Copyright 2026 The czdg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "czdg/graph.h"

#include <sstream>

#include "czdg/error.h"
#include "graph_factories.h"
#include "gtest/gtest.h"

namespace czdg {
namespace {

using namespace czdg::testing;

std::vector<std::string> tag_texts(const Graph& g) {
  std::vector<std::string> out;
  for (const FamilyTag& t : classify_family(g)) out.push_back(t.text());
  return out;
}

TEST(GraphTest, EdgesAreSymmetricAndIdempotent) {
  Graph g(3);
  g.add_edge(0, 2);
  g.add_edge(2, 0);
  EXPECT_TRUE(g.has_edge(2, 0));
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_THROW(g.add_edge(1, 1), Error);
  EXPECT_THROW(g.add_edge(0, 3), Error);
}

TEST(DistanceTest, Basics) {
  EXPECT_EQ(all_pairs_distances(path_graph(3)).at(0, 2), 2u);
  const DistanceMatrix k4 = all_pairs_distances(complete_graph(4));
  for (Vertex u = 0; u < 4; ++u) {
    for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(k4.at(u, v), u == v ? 0u : 1u);
  }
  const DistanceMatrix two = all_pairs_distances(Graph(2));
  EXPECT_EQ(two.at(0, 1), kInfinity);
  EXPECT_FALSE(is_connected(Graph(2)));
  EXPECT_EQ(diameter(Graph(2)), kInfinity);
}

TEST(DistanceTest, ParallelMatchesSerialAndIsAMetric) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g(5 + trial);
    std::bernoulli_distribution edge(0.08);
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
        if (edge(rng)) g.add_edge(u, v);
      }
    }
    const DistanceMatrix d = all_pairs_distances(g);
    ASSERT_EQ(d, all_pairs_distances_serial(g));
    const std::size_t n = g.vertex_count();
    for (Vertex u = 0; u < n; ++u) {
      EXPECT_EQ(d.at(u, u), 0u);
      for (Vertex v = 0; v < n; ++v) {
        EXPECT_EQ(d.at(u, v), d.at(v, u));
        for (Vertex w = 0; w < n; ++w) {
          if (d.at(u, w) != kInfinity && d.at(w, v) != kInfinity) {
            EXPECT_LE(d.at(u, v), d.at(u, w) + d.at(w, v));
          }
        }
      }
    }
    EXPECT_EQ(diameter(g) != kInfinity, is_connected(g));
  }
}

TEST(GirthTest, Examples) {
  EXPECT_EQ(girth(cycle_graph(5)), 5u);
  EXPECT_EQ(diameter(cycle_graph(5)), 2u);
  EXPECT_EQ(girth(star_graph(5)), kInfinity);
  EXPECT_EQ(girth(complete_bipartite(2, 2)), 4u);
  EXPECT_EQ(girth(Graph(1)), kInfinity);
}

TEST(GirthTest, ClosedFormsOnFamilies) {
  for (std::size_t n = 2; n <= 12; ++n) {
    EXPECT_EQ(girth(path_graph(n)), kInfinity) << n;
    EXPECT_EQ(girth(star_graph(n)), kInfinity) << n;
    if (n >= 3) {
      EXPECT_EQ(girth(cycle_graph(n)), n);
      EXPECT_EQ(girth(complete_graph(n)), 3u);
    }
  }
  for (std::size_t m = 2; m <= 6; ++m) {
    for (std::size_t n = 2; n <= 6; ++n) EXPECT_EQ(girth(complete_bipartite(m, n)), 4u);
  }
}

TEST(GirthTest, MatchesBruteForceOnRandomGraphs) {
  // Shortest cycle through edge (u,v): 1 + distance from u to v without it.
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 4 + trial % 9;
    const Graph g = random_connected(n, 0.05 * (trial % 5), rng);
    std::uint32_t best = kInfinity;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (!g.has_edge(u, v)) continue;
        Graph h(n);
        for (Vertex a = 0; a < n; ++a) {
          for (Vertex b = a + 1; b < n; ++b) {
            if (g.has_edge(a, b) && !(a == u && b == v)) h.add_edge(a, b);
          }
        }
        const std::uint32_t d = all_pairs_distances_serial(h).at(u, v);
        if (d != kInfinity) best = std::min(best, d + 1);
      }
    }
    EXPECT_EQ(girth(g), best);
  }
}

TEST(FamilyTest, Examples) {
  EXPECT_EQ(tag_texts(path_graph(2)),
            (std::vector<std::string>{"Complete(2)", "CompleteBipartite(1,1)",
                                      "Path(2)", "Star(2)"}));
  EXPECT_EQ(tag_texts(complete_bipartite(2, 3)),
            std::vector<std::string>{"CompleteBipartite(2,3)"});
  EXPECT_EQ(tag_texts(complete_bipartite(3, 2)),
            std::vector<std::string>{"CompleteBipartite(2,3)"});
  EXPECT_EQ(tag_texts(cycle_graph(6)), std::vector<std::string>{"Cycle(6)"});
  EXPECT_EQ(tag_texts(Graph(1)),
            (std::vector<std::string>{"Complete(1)", "Path(1)", "SingleVertex"}));
  EXPECT_EQ(tag_texts(path_graph(3)),
            (std::vector<std::string>{"CompleteBipartite(1,2)", "Path(3)", "Star(3)"}));
  EXPECT_EQ(tag_texts(complete_graph(3)),
            (std::vector<std::string>{"Complete(3)", "Cycle(3)"}));
  EXPECT_EQ(tag_texts(cycle_graph(4)),
            (std::vector<std::string>{"CompleteBipartite(2,2)", "Cycle(4)"}));
  EXPECT_EQ(tag_texts(Graph(2)), std::vector<std::string>{"Other"});
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  g.add_edge(2, 3);
  EXPECT_EQ(tag_texts(g), std::vector<std::string>{"Other"});
}

TEST(FamilyTest, InvariantUnderRelabeling) {
  std::mt19937 rng(3);
  std::vector<Graph> graphs = {path_graph(7), cycle_graph(8), complete_graph(5),
                               complete_bipartite(3, 4), star_graph(6)};
  for (int i = 0; i < 30; ++i) graphs.push_back(random_connected(8, 0.3, rng));
  for (const Graph& g : graphs) {
    for (int k = 0; k < 5; ++k) {
      const Graph h = g.permuted(random_permutation(g.vertex_count(), rng));
      EXPECT_EQ(classify_family(g), classify_family(h));
    }
  }
}

TEST(IsomorphismTest, Examples) {
  EXPECT_FALSE(is_isomorphic(complete_graph(3), path_graph(3)));
  EXPECT_TRUE(is_isomorphic(star_graph(3), path_graph(3)));
  EXPECT_TRUE(is_isomorphic(cycle_graph(4), complete_bipartite(2, 2)));
  // Same degree sequence: C6 against two disjoint triangles.
  Graph two_triangles(6);
  for (Vertex base : {0u, 3u}) {
    two_triangles.add_edge(base, base + 1);
    two_triangles.add_edge(base + 1, base + 2);
    two_triangles.add_edge(base, base + 2);
  }
  EXPECT_FALSE(is_isomorphic(cycle_graph(6), two_triangles));
}

TEST(IsomorphismTest, RandomRelabelings) {
  std::mt19937 rng(42);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 8 + i % 5;
    const Graph g = random_connected(n, 0.35, rng);
    const Graph h = g.permuted(random_permutation(n, rng));
    EXPECT_TRUE(is_isomorphic(g, h));
  }
}

TEST(IsomorphismTest, AgreesWithCanonicalForms) {
  // Distinct iso classes from the generator are pairwise non-isomorphic.
  for (std::size_t n = 1; n <= 5; ++n) {
    const std::vector<Graph> classes = connected_graphs_up_to_iso(n);
    for (std::size_t i = 0; i < classes.size(); ++i) {
      for (std::size_t j = 0; j < classes.size(); ++j) {
        EXPECT_EQ(is_isomorphic(classes[i], classes[j]), i == j);
      }
    }
  }
}

TEST(IsomorphismTest, TooLarge) {
  try {
    is_isomorphic(path_graph(13), path_graph(13));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
}

TEST(DotTest, Format) {
  Graph g(3, {"[2]", "[8]", "x\"y"});
  g.add_edge(1, 0);
  g.add_edge(1, 2);
  EXPECT_EQ(to_dot(g, {"{2,6}", "{8}", "{4}"}),
            "graph G {\n"
            "  n0 [label=\"[2]\", tooltip=\"{2,6}\"];\n"
            "  n1 [label=\"[8]\", tooltip=\"{8}\"];\n"
            "  n2 [label=\"x\\\"y\", tooltip=\"{4}\"];\n"
            "  n0 -- n1;\n"
            "  n1 -- n2;\n"
            "}\n");
  EXPECT_EQ(to_dot(Graph(1)), "graph G {\n  n0 [label=\"0\"];\n}\n");
}

TEST(EdgeListTest, Parse) {
  std::istringstream in("4\n0 1\n\n1 2\n2 3\n3 0\n");
  const Graph g = read_edge_list(in);
  EXPECT_TRUE(is_isomorphic(g, cycle_graph(4)));
  std::istringstream single("1\n");
  EXPECT_EQ(read_edge_list(single).vertex_count(), 1u);
}

TEST(EdgeListTest, Malformed) {
  for (const char* text : {"", "x\n", "3\n0 3\n", "3\n1 1\n", "3\n0\n", "3\n0 1 2\n",
                           "-1\n", "2 2\n"}) {
    std::istringstream in(text);
    try {
      read_edge_list(in);
      ADD_FAILURE() << "accepted: " << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kMalformedInput) << text;
    }
  }
}

}  // namespace
}  // namespace czdg
