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

// Simple undirected graphs over vertices 0..n-1 with bitset adjacency.

#ifndef CZDG_GRAPH_H_
#define CZDG_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <string>
#include <vector>

#include "czdg/bitset.h"

namespace czdg {

using Vertex = std::uint32_t;

class Graph {
 public:
  // Labels default to the decimal vertex index.
  explicit Graph(std::size_t n = 0);
  Graph(std::size_t n, std::vector<std::string> labels);

  // Idempotent. Self-loops and out-of-range endpoints throw kInvalidArgument.
  void add_edge(Vertex u, Vertex v);

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const;
  bool has_edge(Vertex u, Vertex v) const { return adj_[u].test(v); }
  const Bitset& neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].count(); }

  const std::string& label(Vertex v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Vertex v of this graph becomes vertex perm[v] of the result.
  Graph permuted(const std::vector<Vertex>& perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Bitset> adj_;
  std::vector<std::string> labels_;
};

// Hop count for unreachable pairs, and for diameter/girth when infinite.
inline constexpr std::uint32_t kInfinity = std::numeric_limits<std::uint32_t>::max();

class DistanceMatrix {
 public:
  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, kInfinity) {}

  std::size_t size() const { return n_; }
  std::uint32_t at(Vertex u, Vertex v) const { return d_[u * n_ + v]; }
  std::uint32_t* row(Vertex u) { return d_.data() + u * n_; }
  const std::uint32_t* row(Vertex u) const { return d_.data() + u * n_; }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<std::uint32_t> d_;
};

// BFS from every vertex, sources split across OpenMP threads.
DistanceMatrix all_pairs_distances(const Graph& g);
// Single-threaded reference.
DistanceMatrix all_pairs_distances_serial(const Graph& g);

bool is_connected(const Graph& g);
// Largest finite distance, or kInfinity if disconnected. 0 for n <= 1.
std::uint32_t diameter(const Graph& g);
std::uint32_t diameter(const DistanceMatrix& d);
// Shortest cycle length, or kInfinity for forests.
std::uint32_t girth(const Graph& g);

// "inf" for kInfinity.
std::string extent_text(std::uint32_t value);

struct FamilyTag {
  enum class Kind {
    kComplete,
    kCompleteBipartite,
    kPath,
    kCycle,
    kStar,
    kSingleVertex,
    kOther,
  };

  Kind kind = Kind::kOther;
  // Vertex counts: n for Complete/Path/Cycle/Star, (m, n) with m <= n for
  // CompleteBipartite.
  std::size_t m = 0;
  std::size_t n = 0;

  // E.g. "Complete(3)", "CompleteBipartite(1,2)", "SingleVertex".
  std::string text() const;

  friend auto operator<=>(const FamilyTag&, const FamilyTag&) = default;
};

// Every family the graph belongs to, ordered by Kind; {Other} if none.
// Star(n) is K_{1,n-1} with n >= 2; K_1 is SingleVertex, Complete(1), Path(1).
std::vector<FamilyTag> classify_family(const Graph& g);

inline constexpr std::size_t kIsomorphismLimit = 12;

// Backtracking with degree pruning. Throws kTooLarge above
// kIsomorphismLimit vertices.
bool is_isomorphic(const Graph& a, const Graph& b);

// DOT text with nodes n0..n{k-1} in index order and edges (u < v) in
// lexicographic order. Optional tooltips, one per vertex.
std::string to_dot(const Graph& g, const std::vector<std::string>& tooltips = {});

// First line: vertex count. Then one "u v" pair per line, zero-based.
// Blank lines are skipped. Throws kMalformedInput.
Graph read_edge_list(std::istream& in);

}  // namespace czdg

#endif  // CZDG_GRAPH_H_
