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

// Named graph families and random graphs for tests.

#ifndef CZDG_TESTS_GRAPH_FACTORIES_H_
#define CZDG_TESTS_GRAPH_FACTORIES_H_

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "czdg/graph.h"

namespace czdg::testing {

inline Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle_graph(std::size_t n) {
  Graph g = path_graph(n);
  g.add_edge(0, static_cast<Vertex>(n - 1));
  return g;
}

inline Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

inline Graph complete_bipartite(std::size_t m, std::size_t n) {
  Graph g(m + n);
  for (Vertex u = 0; u < m; ++u) {
    for (Vertex v = 0; v < n; ++v) g.add_edge(u, static_cast<Vertex>(m + v));
  }
  return g;
}

// One center (vertex 0) and n-1 leaves.
inline Graph star_graph(std::size_t n) { return complete_bipartite(1, n - 1); }

inline std::vector<Vertex> random_permutation(std::size_t n, std::mt19937& rng) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Random spanning tree plus each remaining pair with probability p.
inline Graph random_connected(std::size_t n, double p, std::mt19937& rng) {
  Graph g(n);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const std::vector<Vertex> order = random_permutation(n, rng);
  for (std::size_t i = 1; i < n; ++i) {
    g.add_edge(order[i], order[std::uniform_int_distribution<std::size_t>(0, i - 1)(rng)]);
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng) < p) g.add_edge(u, v);
    }
  }
  return g;
}

// Every connected graph on n vertices, one per isomorphism class. Canonical
// form = lexicographically smallest adjacency bit string over all vertex
// orders; fine for n <= 6.
inline std::vector<Graph> connected_graphs_up_to_iso(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  std::vector<std::vector<Vertex>> perms;
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::vector<Graph> out;
  std::vector<std::uint64_t> seen;
  const std::uint64_t masks = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    Graph g(n);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (mask >> k & 1) g.add_edge(pairs[k].first, pairs[k].second);
    }
    if (!is_connected(g)) continue;
    std::uint64_t canon = ~std::uint64_t{0};
    for (const auto& perm : perms) {
      std::uint64_t code = 0;
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (g.has_edge(perm[pairs[k].first], perm[pairs[k].second])) {
          code |= std::uint64_t{1} << k;
        }
      }
      canon = std::min(canon, code);
    }
    if (std::find(seen.begin(), seen.end(), canon) != seen.end()) continue;
    seen.push_back(canon);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace czdg::testing

#endif  // CZDG_TESTS_GRAPH_FACTORIES_H_
