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

#include <algorithm>
#include <deque>
#include <sstream>

#include "czdg/error.h"

namespace czdg {

Graph::Graph(std::size_t n) : adj_(n, Bitset(n)), labels_(n) {
  for (std::size_t v = 0; v < n; ++v) labels_[v] = std::to_string(v);
}

Graph::Graph(std::size_t n, std::vector<std::string> labels)
    : adj_(n, Bitset(n)), labels_(std::move(labels)) {
  if (labels_.size() != n) {
    throw Error(ErrorCode::kInvalidArgument, "graph: label count mismatch");
  }
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u >= vertex_count() || v >= vertex_count()) {
    throw Error(ErrorCode::kInvalidArgument, "graph: vertex out of range");
  }
  if (u == v) throw Error(ErrorCode::kInvalidArgument, "graph: self-loop");
  adj_[u].set(v);
  adj_[v].set(u);
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const Bitset& row : adj_) twice += row.count();
  return twice / 2;
}

Graph Graph::permuted(const std::vector<Vertex>& perm) const {
  const std::size_t n = vertex_count();
  std::vector<std::string> labels(n);
  for (std::size_t v = 0; v < n; ++v) labels[perm[v]] = labels_[v];
  Graph out(n, std::move(labels));
  for (Vertex u = 0; u < n; ++u) {
    adj_[u].for_each([&](std::size_t v) {
      if (u < v) out.add_edge(perm[u], perm[v]);
    });
  }
  return out;
}

// ---- distances -------------------------------------------------------------

namespace {

// Level-synchronous BFS on bitsets: the next frontier is the union of the
// frontier's neighbor rows minus everything already seen.
void bfs_row(const Graph& g, Vertex s, std::uint32_t* row) {
  const std::size_t n = g.vertex_count();
  Bitset seen(n), frontier(n), next(n);
  seen.set(s);
  frontier.set(s);
  row[s] = 0;
  for (std::uint32_t level = 1; frontier.any(); ++level) {
    next.clear();
    frontier.for_each([&](std::size_t u) { next |= g.neighbors(u); });
    next.subtract(seen);
    next.for_each([&](std::size_t v) { row[v] = level; });
    seen |= next;
    std::swap(frontier, next);
  }
}

}  // namespace

DistanceMatrix all_pairs_distances(const Graph& g) {
  const std::int64_t n = static_cast<std::int64_t>(g.vertex_count());
  DistanceMatrix d(g.vertex_count());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t s = 0; s < n; ++s) {
    bfs_row(g, static_cast<Vertex>(s), d.row(static_cast<Vertex>(s)));
  }
  return d;
}

DistanceMatrix all_pairs_distances_serial(const Graph& g) {
  // Plain queue BFS, deliberately not sharing bfs_row.
  const std::size_t n = g.vertex_count();
  DistanceMatrix d(n);
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex u = 0; u < n; ++u) {
    g.neighbors(u).for_each([&](std::size_t v) { adj[u].push_back(v); });
  }
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    std::uint32_t* row = d.row(s);
    row[s] = 0;
    queue.assign(1, s);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex v : adj[u]) {
        if (row[v] != kInfinity) continue;
        row[v] = row[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return d;
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<std::uint32_t> row(n, kInfinity);
  bfs_row(g, 0, row.data());
  return std::find(row.begin(), row.end(), kInfinity) == row.end();
}

std::uint32_t diameter(const DistanceMatrix& d) {
  std::uint32_t best = 0;
  for (Vertex u = 0; u < d.size(); ++u) {
    const std::uint32_t* row = d.row(u);
    for (Vertex v = 0; v < d.size(); ++v) best = std::max(best, row[v]);
  }
  return best;
}

std::uint32_t diameter(const Graph& g) {
  if (!is_connected(g)) return kInfinity;
  return diameter(all_pairs_distances(g));
}

std::uint32_t girth(const Graph& g) {
  const std::size_t n = g.vertex_count();
  // Triangles by common neighbors of an edge.
  for (Vertex u = 0; u < n; ++u) {
    for (std::size_t v = g.neighbors(u).next(u + 1); v < n;
         v = g.neighbors(u).next(v + 1)) {
      if (g.neighbors(u).intersects(g.neighbors(v))) return 3;
    }
  }
  // A non-tree edge met during BFS from s closes a closed walk through s of
  // length dist[u] + dist[w] + 1; the minimum over all s is the girth.
  std::uint32_t best = kInfinity;
  std::vector<std::uint32_t> dist(n);
  std::vector<Vertex> parent(n);
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < n && best > 4; ++s) {
    std::fill(dist.begin(), dist.end(), kInfinity);
    dist[s] = 0;
    parent[s] = s;
    queue.assign(1, s);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      if (2 * dist[u] + 1 >= best) break;
      g.neighbors(u).for_each([&](std::size_t w) {
        if (dist[w] == kInfinity) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(static_cast<Vertex>(w));
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      });
    }
  }
  return best;
}

std::string extent_text(std::uint32_t value) {
  return value == kInfinity ? "inf" : std::to_string(value);
}

// ---- families --------------------------------------------------------------

std::string FamilyTag::text() const {
  switch (kind) {
    case Kind::kComplete: return "Complete(" + std::to_string(n) + ")";
    case Kind::kCompleteBipartite:
      return "CompleteBipartite(" + std::to_string(m) + "," + std::to_string(n) + ")";
    case Kind::kPath: return "Path(" + std::to_string(n) + ")";
    case Kind::kCycle: return "Cycle(" + std::to_string(n) + ")";
    case Kind::kStar: return "Star(" + std::to_string(n) + ")";
    case Kind::kSingleVertex: return "SingleVertex";
    case Kind::kOther: return "Other";
  }
  return "Other";
}

std::vector<FamilyTag> classify_family(const Graph& g) {
  using Kind = FamilyTag::Kind;
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  std::vector<FamilyTag> tags;
  if (n == 0 || !is_connected(g)) return {FamilyTag{Kind::kOther, 0, 0}};

  std::size_t max_deg = 0, min_deg = n;
  for (Vertex v = 0; v < n; ++v) {
    max_deg = std::max(max_deg, g.degree(v));
    min_deg = std::min(min_deg, g.degree(v));
  }
  if (m == n * (n - 1) / 2) tags.push_back({Kind::kComplete, 0, n});

  // Bipartite 2-coloring from vertex 0; complete if every cross pair is an
  // edge, i.e. m = |A| |B|.
  if (n >= 2) {
    std::vector<int> side(n, -1);
    side[0] = 0;
    std::deque<Vertex> queue{0};
    bool bipartite = true;
    while (!queue.empty() && bipartite) {
      const Vertex u = queue.front();
      queue.pop_front();
      g.neighbors(u).for_each([&](std::size_t v) {
        if (side[v] < 0) {
          side[v] = 1 - side[u];
          queue.push_back(static_cast<Vertex>(v));
        } else if (side[v] == side[u]) {
          bipartite = false;
        }
      });
    }
    if (bipartite) {
      const std::size_t a = std::count(side.begin(), side.end(), 0);
      const std::size_t b = n - a;
      if (m == a * b) {
        tags.push_back({Kind::kCompleteBipartite, std::min(a, b), std::max(a, b)});
      }
    }
  }
  if (m == n - 1 && max_deg <= 2) tags.push_back({Kind::kPath, 0, n});
  if (n >= 3 && m == n && min_deg == 2 && max_deg == 2) {
    tags.push_back({Kind::kCycle, 0, n});
  }
  if (n >= 2 && m == n - 1 && max_deg == n - 1) tags.push_back({Kind::kStar, 0, n});
  if (n == 1) tags.push_back({Kind::kSingleVertex, 0, 0});
  if (tags.empty()) tags.push_back({Kind::kOther, 0, 0});
  return tags;
}

// ---- isomorphism -----------------------------------------------------------

namespace {

class IsoSearch {
 public:
  IsoSearch(const Graph& a, const Graph& b) : a_(a), b_(b) {
    const std::size_t n = a.vertex_count();
    order_.resize(n);
    for (Vertex v = 0; v < n; ++v) order_[v] = v;
    // Highest degree first; ties by index.
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex x, Vertex y) {
      return a.degree(x) > a.degree(y);
    });
    map_.assign(n, kUnmapped);
    used_.assign(n, false);
  }

  bool run() { return extend(0); }

 private:
  static constexpr Vertex kUnmapped = ~Vertex{0};

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex u = order_[depth];
    for (Vertex v = 0; v < b_.vertex_count(); ++v) {
      if (used_[v] || a_.degree(u) != b_.degree(v)) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const Vertex w = order_[k];
        ok = a_.has_edge(u, w) == b_.has_edge(v, map_[w]);
      }
      if (!ok) continue;
      map_[u] = v;
      used_[v] = true;
      if (extend(depth + 1)) return true;
      used_[v] = false;
      map_[u] = kUnmapped;
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
};

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> d(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() > kIsomorphismLimit || b.vertex_count() > kIsomorphismLimit) {
    throw Error(ErrorCode::kTooLarge,
                "isomorphism test limited to " + std::to_string(kIsomorphismLimit) +
                    " vertices");
  }
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) {
    return false;
  }
  if (degree_sequence(a) != degree_sequence(b)) return false;
  return IsoSearch(a, b).run();
}

// ---- I/O -------------------------------------------------------------------

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string to_dot(const Graph& g, const std::vector<std::string>& tooltips) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  n" << v << " [label=" << dot_quote(g.label(v));
    if (v < tooltips.size()) out << ", tooltip=" << dot_quote(tooltips[v]);
    out << "];\n";
  }
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    g.neighbors(u).for_each([&](std::size_t v) {
      if (u < v) out << "  n" << u << " -- n" << v << ";\n";
    });
  }
  out << "}\n";
  return out.str();
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto malformed = [&](const std::string& why) {
    return Error(ErrorCode::kMalformedInput,
                 "edge list line " + std::to_string(line_no) + ": " + why);
  };
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) {
    throw Error(ErrorCode::kMalformedInput, "edge list: missing vertex count");
  }
  std::istringstream head(line);
  long long n = -1;
  std::string rest;
  if (!(head >> n) || n < 0 || (head >> rest)) {
    throw malformed("expected a nonnegative vertex count");
  }
  Graph g(static_cast<std::size_t>(n));
  while (next_line()) {
    std::istringstream ls(line);
    long long u = -1, v = -1;
    if (!(ls >> u >> v) || (ls >> rest)) throw malformed("expected \"u v\"");
    if (u < 0 || v < 0 || u >= n || v >= n) throw malformed("vertex out of range");
    if (u == v) throw malformed("self-loop");
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return g;
}

}  // namespace czdg
