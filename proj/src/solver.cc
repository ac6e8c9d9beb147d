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

#include "czdg/solver.h"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <numeric>
#include <optional>
#include <set>

#include "czdg/error.h"

namespace czdg {

std::string_view solve_mode_name(SolveMode mode) {
  switch (mode) {
    case SolveMode::kGamma: return "gamma";
    case SolveMode::kDim: return "dim";
    case SolveMode::kDdim: return "ddim";
  }
  return "?";
}

SolveMode parse_solve_mode(std::string_view text) {
  if (text == "gamma") return SolveMode::kGamma;
  if (text == "dim") return SolveMode::kDim;
  if (text == "ddim") return SolveMode::kDdim;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown mode '" + std::string(text) + "' (gamma|dim|ddim)");
}

CoverInstance make_cover_instance(const Graph& g, const DistanceMatrix& d,
                                  SolveMode mode) {
  const std::size_t n = g.vertex_count();
  const bool dominate = mode != SolveMode::kDim;
  const bool distinguish = mode != SolveMode::kGamma;
  CoverInstance inst;
  inst.mode = mode;
  inst.candidate_count = n;
  inst.item_count = (dominate ? n : 0) + (distinguish ? n * (n - 1) / 2 : 0);
  inst.coverage.assign(n, Bitset(inst.item_count));
  for (Vertex w = 0; w < n; ++w) {
    Bitset& row = inst.coverage[w];
    std::size_t item = 0;
    if (dominate) {
      row.set(w);
      g.neighbors(w).for_each([&](std::size_t v) { row.set(v); });
      item = n;
    }
    if (distinguish) {
      const std::uint32_t* dw = d.row(w);
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v, ++item) {
          if (dw[u] != dw[v]) row.set(item);
        }
      }
    }
  }
  return inst;
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::size_t and_count(const Bitset& a, const Bitset& b) {
  std::size_t c = 0;
  for (std::size_t k = 0; k < a.word_count(); ++k) {
    c += std::popcount(a.data()[k] & b.data()[k]);
  }
  return c;
}

Bitset and_of(const Bitset& a, const Bitset& b) {
  Bitset out = a;
  out &= b;
  return out;
}

// The instance after dropping items implied by others: if every candidate
// covering a also covers b, any cover of a covers b.
struct Reduced {
  std::size_t nc = 0;
  std::size_t ni = 0;
  std::vector<Bitset> cov;    // candidate -> kept items
  std::vector<Bitset> cands;  // kept item -> candidates
  std::vector<std::size_t> lb_order;
};

Reduced reduce(const CoverInstance& inst) {
  const std::size_t nc = inst.candidate_count;
  std::vector<Bitset> cands(inst.item_count, Bitset(nc));
  for (std::size_t c = 0; c < nc; ++c) {
    inst.coverage[c].for_each([&](std::size_t i) { cands[i].set(c); });
  }
  for (std::size_t i = 0; i < inst.item_count; ++i) {
    if (cands[i].none()) {
      throw Error(ErrorCode::kInfeasible,
                  "item " + std::to_string(i) + " has no covering candidate");
    }
  }
  std::vector<std::size_t> order(inst.item_count);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return cands[a].count() < cands[b].count();
  });
  std::vector<std::size_t> kept;
  constexpr std::size_t kReductionLimit = 20000;
  for (std::size_t b : order) {
    bool implied = false;
    if (inst.item_count <= kReductionLimit) {
      for (std::size_t a : kept) {
        if (cands[a].is_subset_of(cands[b])) {
          implied = true;
          break;
        }
      }
    }
    if (!implied) kept.push_back(b);
  }
  std::sort(kept.begin(), kept.end());

  Reduced r;
  r.nc = nc;
  r.ni = kept.size();
  r.cov.assign(nc, Bitset(r.ni));
  r.cands.reserve(r.ni);
  for (std::size_t k = 0; k < r.ni; ++k) {
    r.cands.push_back(cands[kept[k]]);
    r.cands[k].for_each([&](std::size_t c) { r.cov[c].set(k); });
  }
  r.lb_order.resize(r.ni);
  std::iota(r.lb_order.begin(), r.lb_order.end(), 0);
  std::stable_sort(r.lb_order.begin(), r.lb_order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return r.cands[a].count() < r.cands[b].count();
                   });
  return r;
}

struct Node {
  Bitset uncovered;
  Bitset allowed;
  std::vector<Vertex> chosen;
};

std::vector<Vertex> greedy(const Reduced& r) {
  Bitset uncovered(r.ni);
  for (std::size_t i = 0; i < r.ni; ++i) uncovered.set(i);
  std::vector<Vertex> chosen;
  while (uncovered.any()) {
    std::size_t best = kNone, gain = 0;
    for (std::size_t c = 0; c < r.nc; ++c) {
      const std::size_t g = and_count(r.cov[c], uncovered);
      if (g > gain) {
        gain = g;
        best = c;
      }
    }
    chosen.push_back(static_cast<Vertex>(best));
    uncovered.subtract(r.cov[best]);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

class Search {
 public:
  Search(const Reduced& r, std::uint64_t budget, std::atomic<std::uint64_t>& explored,
         std::atomic<std::size_t>* global_best)
      : r_(r), budget_(budget), explored_(explored), global_best_(global_best) {}

  Node root() const {
    Node n{Bitset(r_.ni), Bitset(r_.nc), {}};
    for (std::size_t i = 0; i < r_.ni; ++i) n.uncovered.set(i);
    for (std::size_t c = 0; c < r_.nc; ++c) n.allowed.set(c);
    return n;
  }

  // Max of two bounds on how many more candidates the node needs: items
  // with pairwise disjoint candidate sets each need their own, and no
  // candidate covers more than `most` uncovered items. kNone if some
  // uncovered item has no allowed candidate.
  std::size_t lower_bound(const Node& n) const {
    Bitset used(r_.nc);
    std::size_t disjoint = 0;
    for (std::size_t i : r_.lb_order) {
      if (!n.uncovered.test(i)) continue;
      const Bitset ci = and_of(r_.cands[i], n.allowed);
      if (ci.none()) return kNone;
      if (!ci.intersects(used)) {
        used |= ci;
        ++disjoint;
      }
    }
    std::size_t most = 0;
    n.allowed.for_each([&](std::size_t c) {
      most = std::max(most, and_count(r_.cov[c], n.uncovered));
    });
    const std::size_t left = n.uncovered.count();
    const std::size_t ratio = most == 0 ? 0 : (left + most - 1) / most;
    return std::max(disjoint, ratio);
  }

  // Children in branching order; empty if the node is a leaf.
  std::vector<Node> children(const Node& n) const {
    std::size_t item = kNone, fewest = kNone;
    n.uncovered.for_each([&](std::size_t i) {
      const std::size_t k = and_count(r_.cands[i], n.allowed);
      if (k < fewest) {
        fewest = k;
        item = i;
      }
    });
    std::vector<std::pair<std::size_t, std::size_t>> order;  // (-gain, c)
    and_of(r_.cands[item], n.allowed).for_each([&](std::size_t c) {
      order.emplace_back(kNone - and_count(r_.cov[c], n.uncovered), c);
    });
    std::sort(order.begin(), order.end());
    std::vector<Node> out;
    out.reserve(order.size());
    Bitset allowed = n.allowed;
    for (auto [key, c] : order) {
      allowed.reset(c);
      Node child{n.uncovered, allowed, n.chosen};
      child.uncovered.subtract(r_.cov[c]);
      child.chosen.push_back(static_cast<Vertex>(c));
      out.push_back(std::move(child));
    }
    return out;
  }

  void count_node() {
    if (explored_.fetch_add(1, std::memory_order_relaxed) >= budget_) {
      throw Error(ErrorCode::kResourceCap,
                  "search exceeded " + std::to_string(budget_) + " nodes");
    }
  }

  // Serial depth-first search; only strict improvements on best_size_ are
  // recorded, so the result is the first optimal leaf in search order.
  void dfs(const Node& n) {
    count_node();
    if (n.uncovered.none()) {
      if (n.chosen.size() < best_size_) {
        best_size_ = n.chosen.size();
        best_ = n.chosen;
        if (global_best_) {
          std::size_t g = global_best_->load();
          while (best_size_ < g && !global_best_->compare_exchange_weak(g, best_size_)) {
          }
        }
      }
      return;
    }
    const std::size_t lb = lower_bound(n);
    if (lb == kNone || n.chosen.size() + lb >= best_size_) return;
    if (global_best_ && n.chosen.size() + lb > global_best_->load()) return;
    for (const Node& child : children(n)) dfs(child);
  }

  void set_incumbent(std::size_t size) { best_size_ = size; }
  std::size_t best_size() const { return best_size_; }
  const std::vector<Vertex>& best() const { return best_; }

 private:
  const Reduced& r_;
  std::uint64_t budget_;
  std::atomic<std::uint64_t>& explored_;
  std::atomic<std::size_t>* global_best_;
  std::size_t best_size_ = kNone;
  std::vector<Vertex> best_;
};

// u, v are twins when N(u) - {v} == N(v) - {u}. Returns all but the highest
// vertex of every twin class.
std::vector<Vertex> twin_forced(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<Vertex> out;
  for (Vertex u = 0; u < n; ++u) {
    if (seen[u]) continue;
    Bitset nu = g.neighbors(u);
    std::vector<Vertex> cls{u};
    for (Vertex v = u + 1; v < n; ++v) {
      if (seen[v]) continue;
      Bitset a = nu;
      a.reset(v);
      Bitset b = g.neighbors(v);
      b.reset(u);
      if (a == b) {
        cls.push_back(v);
        seen[v] = true;
      }
    }
    out.insert(out.end(), cls.begin(), cls.end() - 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SolveResult solve_cover(const CoverInstance& inst, const SolveOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  SolveResult res;
  res.mode = inst.mode;
  const Reduced r = reduce(inst);
  std::atomic<std::uint64_t> explored{0};

  if (r.ni == 0) {
    res.elapsed = std::chrono::steady_clock::now() - start;
    return res;
  }
  const std::vector<Vertex> incumbent = greedy(r);

  std::vector<Vertex> witness = incumbent;
  if (!opts.parallel) {
    Search s(r, opts.node_budget, explored, nullptr);
    s.set_incumbent(incumbent.size());
    s.dfs(s.root());
    if (s.best_size() < incumbent.size()) witness = s.best();
  } else {
    // Split the tree into subtrees, in search order, and search them
    // concurrently. Each subtree prunes against its own best (>=) and the
    // shared best (>), so it still finds its own first optimal leaf; the
    // earliest subtree holding an optimum then gives the serial answer.
    std::atomic<std::size_t> global{incumbent.size()};
    Search top(r, opts.node_budget, explored, nullptr);
    std::vector<Node> frontier{top.root()};
    const std::size_t target = 8 * static_cast<std::size_t>(omp_get_max_threads()) + 24;
    for (int depth = 0; depth < 4 && frontier.size() < target; ++depth) {
      std::vector<Node> next;
      bool grew = false;
      for (Node& n : frontier) {
        top.count_node();
        if (n.uncovered.none()) {
          next.push_back(std::move(n));
          continue;
        }
        const std::size_t lb = top.lower_bound(n);
        if (lb == kNone || n.chosen.size() + lb > incumbent.size()) continue;
        for (Node& c : top.children(n)) next.push_back(std::move(c));
        grew = true;
      }
      frontier = std::move(next);
      if (!grew) break;
    }

    const std::int64_t count = static_cast<std::int64_t>(frontier.size());
    std::vector<std::size_t> sizes(frontier.size(), kNone);
    std::vector<std::vector<Vertex>> bests(frontier.size());
    std::optional<Error> failure;
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < count; ++i) {
      try {
        Search s(r, opts.node_budget, explored, &global);
        s.dfs(frontier[i]);
        sizes[i] = s.best_size();
        bests[i] = s.best();
      } catch (const Error& e) {
#pragma omp critical(czdg_solver_failure)
        if (!failure) failure = e;
      }
    }
    if (failure) throw *failure;
    std::size_t best = incumbent.size();
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      if (sizes[i] < best) {
        best = sizes[i];
        witness = bests[i];
      }
    }
  }
  std::sort(witness.begin(), witness.end());
  res.optimum = witness.size();
  res.witness = std::move(witness);
  res.explored_nodes = explored.load();
  res.elapsed = std::chrono::steady_clock::now() - start;
  return res;
}

SolveResult solve_graph(const Graph& g, SolveMode mode, const SolveOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = g.vertex_count();
  if (n == 0) {
    throw Error(ErrorCode::kUndefinedForEmptyGraph,
                std::string(solve_mode_name(mode)) + " is undefined for the empty graph");
  }
  if (mode != SolveMode::kGamma && !is_connected(g)) {
    throw Error(ErrorCode::kDisconnected,
                std::string(solve_mode_name(mode)) + " needs a connected graph");
  }
  if (n == 1) {
    SolveResult res;
    res.mode = mode;
    if (mode == SolveMode::kGamma) {
      res.optimum = 1;
      res.witness = {0};
    }
    res.elapsed = std::chrono::steady_clock::now() - start;
    return res;
  }
  const DistanceMatrix d = all_pairs_distances(g);
  CoverInstance inst = make_cover_instance(g, d, mode);
  if (mode == SolveMode::kGamma) {
    SolveResult res = solve_cover(inst, opts);
    res.elapsed = std::chrono::steady_clock::now() - start;
    return res;
  }

  // Only u or v separates twins u, v, so a resolving set keeps all but at
  // most one vertex of each twin class. Permuting a twin class is an
  // automorphism, hence some optimum holds the lowest k-1 of every class.
  const std::vector<Vertex> forced = twin_forced(g);
  Bitset covered(inst.item_count);
  for (Vertex f : forced) covered |= inst.coverage[f];
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < inst.item_count; ++i) {
    if (!covered.test(i)) keep.push_back(i);
  }
  CoverInstance rest;
  rest.mode = mode;
  rest.candidate_count = inst.candidate_count;
  rest.item_count = keep.size();
  for (const Bitset& cov : inst.coverage) {
    Bitset b(keep.size());
    for (std::size_t j = 0; j < keep.size(); ++j) {
      if (cov.test(keep[j])) b.set(j);
    }
    rest.coverage.push_back(std::move(b));
  }
  SolveResult res = solve_cover(rest, opts);
  res.witness.insert(res.witness.end(), forced.begin(), forced.end());
  std::sort(res.witness.begin(), res.witness.end());
  res.optimum = res.witness.size();
  res.elapsed = std::chrono::steady_clock::now() - start;
  return res;
}

SolveResult dominating_number(const Graph& g, const SolveOptions& opts) {
  return solve_graph(g, SolveMode::kGamma, opts);
}
SolveResult metric_dimension(const Graph& g, const SolveOptions& opts) {
  return solve_graph(g, SolveMode::kDim, opts);
}
SolveResult dominant_metric_dimension(const Graph& g, const SolveOptions& opts) {
  return solve_graph(g, SolveMode::kDdim, opts);
}

// ---- oracle ----------------------------------------------------------------

bool is_dominating_set(const Graph& g, const std::vector<Vertex>& s) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    bool hit = false;
    for (Vertex w : s) hit = hit || w == v || g.has_edge(w, v);
    if (!hit) return false;
  }
  return true;
}

bool is_resolving_set(const DistanceMatrix& d, const std::vector<Vertex>& s) {
  std::set<std::vector<std::uint32_t>> seen;
  for (Vertex v = 0; v < d.size(); ++v) {
    std::vector<std::uint32_t> code;
    for (Vertex w : s) code.push_back(d.at(v, w));
    if (!seen.insert(std::move(code)).second) return false;
  }
  return true;
}

SolveResult brute_force_oracle(const Graph& g, SolveMode mode) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = g.vertex_count();
  if (n > kOracleLimit) {
    throw Error(ErrorCode::kTooLarge,
                "oracle limited to " + std::to_string(kOracleLimit) + " vertices");
  }
  if (n == 0) {
    throw Error(ErrorCode::kUndefinedForEmptyGraph, "empty graph");
  }
  const DistanceMatrix d = all_pairs_distances_serial(g);
  if (mode != SolveMode::kGamma) {
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        if (d.at(u, v) == kInfinity) {
          throw Error(ErrorCode::kDisconnected, "oracle: disconnected graph");
        }
      }
    }
  }
  SolveResult res;
  res.mode = mode;
  if (n == 1 && mode == SolveMode::kDdim) return res;  // convention
  auto accepts = [&](const std::vector<Vertex>& s) {
    switch (mode) {
      case SolveMode::kGamma: return is_dominating_set(g, s);
      case SolveMode::kDim: return is_resolving_set(d, s);
      case SolveMode::kDdim: return is_dominating_set(g, s) && is_resolving_set(d, s);
    }
    return false;
  };
  for (std::size_t k = 0; k <= n; ++k) {
    // Lexicographic k-combinations of 0..n-1.
    std::vector<Vertex> s(k);
    std::iota(s.begin(), s.end(), 0);
    for (;;) {
      ++res.explored_nodes;
      if (accepts(s)) {
        res.optimum = k;
        res.witness = s;
        res.elapsed = std::chrono::steady_clock::now() - start;
        return res;
      }
      std::size_t i = k;
      while (i > 0 && s[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++s[i - 1];
      for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
    }
  }
  throw Error(ErrorCode::kInternal, "oracle found no solution");
}

}  // namespace czdg
