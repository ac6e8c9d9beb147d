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

// Exact domination number, metric dimension and dominant metric dimension,
// all posed as minimum set cover over the vertices.

#ifndef CZDG_SOLVER_H_
#define CZDG_SOLVER_H_

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "czdg/bitset.h"
#include "czdg/graph.h"

namespace czdg {

enum class SolveMode { kGamma, kDim, kDdim };

std::string_view solve_mode_name(SolveMode mode);  // "gamma", "dim", "ddim"
// Throws kInvalidArgument for anything else.
SolveMode parse_solve_mode(std::string_view text);

// Items are vertices to dominate (gamma, ddim) followed by unordered pairs to
// distinguish (dim, ddim). coverage[w] holds the items candidate w covers:
// vertex v if v is w or adjacent to w, pair {u,v} if d(u,w) != d(v,w).
struct CoverInstance {
  SolveMode mode = SolveMode::kGamma;
  std::size_t candidate_count = 0;
  std::size_t item_count = 0;
  std::vector<Bitset> coverage;
};

CoverInstance make_cover_instance(const Graph& g, const DistanceMatrix& d,
                                  SolveMode mode);

struct SolveResult {
  SolveMode mode = SolveMode::kGamma;
  std::size_t optimum = 0;
  std::vector<Vertex> witness;  // ascending
  std::uint64_t explored_nodes = 0;
  std::chrono::nanoseconds elapsed{0};
};

struct SolveOptions {
  bool parallel = true;
  // Search nodes before giving up with kResourceCap.
  std::uint64_t node_budget = 200'000'000;
};

// Branch and bound: greedy upper bound, branching on the uncovered item with
// the fewest remaining candidates, candidates tried by current coverage then
// index. The parallel search returns the same witness as the serial one.
// Throws kInfeasible if some item has no candidate.
SolveResult solve_cover(const CoverInstance& inst, const SolveOptions& opts = {});

// Graph entry points. Conventions: gamma(K_1) = 1, dim(K_1) = ddim(K_1) = 0.
// Throws kUndefinedForEmptyGraph on zero vertices and kDisconnected for
// dim/ddim on a disconnected graph.
SolveResult solve_graph(const Graph& g, SolveMode mode, const SolveOptions& opts = {});
SolveResult dominating_number(const Graph& g, const SolveOptions& opts = {});
SolveResult metric_dimension(const Graph& g, const SolveOptions& opts = {});
SolveResult dominant_metric_dimension(const Graph& g, const SolveOptions& opts = {});

inline constexpr std::size_t kOracleLimit = 20;

// Subsets in order of size, then lexicographically; checks each with the
// predicates below. Throws kTooLarge above kOracleLimit vertices.
SolveResult brute_force_oracle(const Graph& g, SolveMode mode);

bool is_dominating_set(const Graph& g, const std::vector<Vertex>& s);
bool is_resolving_set(const DistanceMatrix& d, const std::vector<Vertex>& s);

}  // namespace czdg

#endif  // CZDG_SOLVER_H_
