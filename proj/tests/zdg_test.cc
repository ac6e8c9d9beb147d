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

#include "czdg/zdg.h"

#include <map>
#include <set>

#include "czdg/error.h"
#include "czdg/spec_parser.h"
#include "graph_factories.h"
#include "gtest/gtest.h"

namespace czdg {
namespace {

using namespace czdg::testing;

std::vector<std::vector<std::string>> zd_class_labels(const FiniteRing& r) {
  const AnnClassPartition p = ann_classes(r);
  std::vector<std::vector<std::string>> out;
  for (std::size_t i : p.zero_divisor_classes()) {
    std::vector<std::string> members;
    for (Element e : p.classes[i].members.elements()) members.push_back(r.label(e));
    out.push_back(members);
  }
  return out;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

TEST(BuildZdgTest, Z16) {
  const FiniteRing r = build_zn(16);
  const Graph g = build_zdg(r);
  EXPECT_EQ(g.labels(),
            (std::vector<std::string>{"2", "4", "6", "8", "10", "12", "14"}));
  for (Vertex u = 0; u < 7; ++u) {
    for (Vertex v = 0; v < 7; ++v) {
      const int a = 2 * (u + 1), b = 2 * (v + 1);
      EXPECT_EQ(g.has_edge(u, v), u != v && a * b % 16 == 0) << a << "," << b;
    }
  }
}

TEST(BuildZdgTest, Z10IsAStarCenteredAtFive) {
  const FiniteRing r = build_zn(10);
  const Graph g = build_zdg(r);
  // Products mod 10: only 5 times an even residue vanishes.
  std::set<std::pair<int, int>> edges;
  for (int a = 1; a < 10; ++a) {
    for (int b = a + 1; b < 10; ++b) {
      if (a * b % 10 == 0) edges.emplace(a, b);
    }
  }
  EXPECT_EQ(edges.size(), 4u);
  for (auto [a, b] : edges) EXPECT_TRUE(a == 5 || b == 5);
  ASSERT_EQ(g.vertex_count(), 5u);
  EXPECT_EQ(g.edge_count(), edges.size());
  EXPECT_TRUE(is_isomorphic(g, star_graph(5)));
  const Vertex five = 2;  // 2, 4, 5, 6, 8
  EXPECT_EQ(g.label(five), "5");
  EXPECT_EQ(g.degree(five), 4u);
}

TEST(BuildZdgTest, DomainsAreUndefined) {
  const FiniteRing f9 = build_gf(3, 2);
  EXPECT_EQ(code_of([&] { build_zdg(f9); }), ErrorCode::kEmptyGraphUndefined);
  EXPECT_EQ(code_of([&] { build_czdg(f9); }), ErrorCode::kEmptyGraphUndefined);
  EXPECT_EQ(code_of([] { build_czdg(build_zn(7)); }), ErrorCode::kEmptyGraphUndefined);
}

TEST(AnnClassesTest, Z16) {
  // Annihilator scan by hand.
  std::map<std::set<int>, std::vector<std::string>> groups;
  for (int x = 1; x < 16; ++x) {
    std::set<int> ann;
    for (int y = 0; y < 16; ++y) {
      if (x * y % 16 == 0) ann.insert(y);
    }
    if (ann.size() > 1) groups[ann].push_back(std::to_string(x));
  }
  std::vector<std::vector<std::string>> expected;
  for (auto& [ann, members] : groups) expected.push_back(members);
  std::sort(expected.begin(), expected.end(),
            [](const auto& a, const auto& b) { return std::stoi(a[0]) < std::stoi(b[0]); });
  EXPECT_EQ(expected, (std::vector<std::vector<std::string>>{
                          {"2", "6", "10", "14"}, {"4", "12"}, {"8"}}));
  EXPECT_EQ(zd_class_labels(build_zn(16)), expected);
}

TEST(AnnClassesTest, SquareOfMaximalIdeal) {
  EXPECT_EQ(zd_class_labels(build_ring("Z2[x,y]/(x^2,xy,y^2)")),
            (std::vector<std::vector<std::string>>{{"y", "x", "x+y"}}));
}

TEST(AnnClassesTest, SquareOfPrime) {
  EXPECT_EQ(zd_class_labels(build_zn(25)),
            (std::vector<std::vector<std::string>>{{"5", "10", "15", "20"}}));
}

TEST(AnnClassesTest, PartitionShape) {
  for (const char* spec : {"Z12", "Z16", "GF(4)", "Z2 x Z4", "Z3[x]/(x^3)"}) {
    const FiniteRing r = build_ring(spec);
    const AnnClassPartition p = ann_classes(r);
    std::size_t zero = 0, unit = 0, total = 0;
    for (std::size_t i = 0; i < p.classes.size(); ++i) {
      const AnnClass& c = p.classes[i];
      total += c.members.size();
      EXPECT_EQ(c.representative, c.members.elements().front());
      for (Element e : c.members.elements()) {
        EXPECT_EQ(p.class_of[e], i);
        EXPECT_EQ(annihilator(r, e), c.annihilator);
      }
      if (c.kind == AnnClass::Kind::kZero) {
        ++zero;
        EXPECT_EQ(c.members.elements(), std::vector<Element>{r.zero()});
      }
      if (c.kind == AnnClass::Kind::kUnit) {
        ++unit;
        EXPECT_EQ(c.members, units(r));
      }
    }
    EXPECT_EQ(total, r.order()) << spec;
    EXPECT_EQ(zero, 1u);
    EXPECT_EQ(unit, 1u);
  }
}

TEST(BuildCzdgTest, Z16IsP3) {
  const FiniteRing r = build_zn(16);
  const CompressedGraph c = build_czdg(r);
  EXPECT_EQ(c.graph.labels(), (std::vector<std::string>{"[2]", "[4]", "[8]"}));
  EXPECT_TRUE(c.graph.has_edge(0, 2));
  EXPECT_TRUE(c.graph.has_edge(1, 2));
  EXPECT_FALSE(c.graph.has_edge(0, 1));
  EXPECT_TRUE(is_isomorphic(c.graph, path_graph(3)));
  EXPECT_EQ(c.members_text(r, 0), "{2,6,10,14}");
}

TEST(BuildCzdgTest, TwiceAnOddPrimeIsP2) {
  for (std::uint64_t p : {3, 5, 7, 11, 13}) {
    const CompressedGraph c = build_czdg(build_zn(2 * p));
    EXPECT_TRUE(is_isomorphic(c.graph, path_graph(2))) << p;
  }
}

TEST(BuildCzdgTest, FieldPairProduct) {
  const FiniteRing r = build_ring("GF(2) x GF(3)");
  const CompressedGraph c = build_czdg(r);
  EXPECT_EQ(c.graph.labels(), (std::vector<std::string>{"[(0,1)]", "[(1,0)]"}));
  EXPECT_TRUE(c.graph.has_edge(0, 1));
}

TEST(BuildCzdgTest, DotCarriesMembers) {
  const FiniteRing r = build_zn(16);
  const CompressedGraph c = build_czdg(r);
  std::vector<std::string> tips;
  for (Vertex v = 0; v < c.graph.vertex_count(); ++v) tips.push_back(c.members_text(r, v));
  const std::string dot = to_dot(c.graph, tips);
  EXPECT_NE(dot.find("n0 [label=\"[2]\", tooltip=\"{2,6,10,14}\"]"), std::string::npos);
  EXPECT_NE(dot.find("n0 -- n2;"), std::string::npos);
}

// Structural properties over a mixed sample; the acceptance suite runs the
// full atlas.
class ZdgPropertyTest : public ::testing::TestWithParam<std::string> {};

TEST_P(ZdgPropertyTest, Invariants) {
  const FiniteRing r = build_ring(GetParam());
  const Graph g = build_zdg(r);
  const CompressedGraph c = build_czdg(r);
  const Graph& e = c.graph;

  // Class adjacency, pair by pair over all members.
  for (Vertex a = 0; a < e.vertex_count(); ++a) {
    for (Vertex b = 0; b < e.vertex_count(); ++b) {
      if (a == b) continue;
      for (Element x : c.partition.classes[c.class_index[a]].members.elements()) {
        for (Element y : c.partition.classes[c.class_index[b]].members.elements()) {
          ASSERT_EQ(r.mul(x, y) == r.zero(), e.has_edge(a, b));
        }
      }
    }
  }
  EXPECT_TRUE(is_connected(e));
  EXPECT_TRUE(is_connected(g));
  EXPECT_LE(diameter(e), 3u);
  EXPECT_LE(diameter(e), diameter(g));
  const std::uint32_t gr = girth(e);
  EXPECT_TRUE(gr == 3 || gr == kInfinity) << gr;
  if (e.vertex_count() >= 3) {
    EXPECT_LT(e.edge_count(), e.vertex_count() * (e.vertex_count() - 1) / 2);
    std::set<std::size_t> degrees;
    for (Vertex v = 0; v < e.vertex_count(); ++v) degrees.insert(e.degree(v));
    EXPECT_GT(degrees.size(), 1u);
  }
  if (is_reduced(r)) {
    // Equal neighborhoods in the full graph exactly when annihilators agree.
    const std::vector<Element> zd = zero_divisors(r).elements();
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        EXPECT_EQ(g.neighbors(u) == g.neighbors(v),
                  annihilator(r, zd[u]) == annihilator(r, zd[v]));
      }
    }
  }
  if (is_boolean(r)) {
    // Classes are singletons, so the vertex orders already line up.
    EXPECT_EQ(e.vertex_count(), g.vertex_count());
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      EXPECT_EQ(e.neighbors(u), g.neighbors(u));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(
    Sample, ZdgPropertyTest,
    ::testing::Values("Z4", "Z6", "Z8", "Z12", "Z16", "Z18", "Z30", "Z36", "Z64",
                      "Z2 x Z2", "Z2 x Z2 x Z2", "Z2 x Z2 x Z2 x Z2", "GF(4) x Z3",
                      "Z4 x Z2", "Z9 x Z3", "Z2[x]/(x^3)", "Z2[x,y]/(x^2,y^2)",
                      "Z4[x]/(x^2+x+1)", "GF(4)[x]/(x^2)", "Z8[x]/(2x,x^2)"),
    [](const ::testing::TestParamInfo<std::string>& info) {
      std::string name;
      for (char ch : info.param) {
        name += std::isalnum(static_cast<unsigned char>(ch)) ? ch : '_';
      }
      return name + "_" + std::to_string(info.index);
    });

}  // namespace
}  // namespace czdg
