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

// Per-ring report: predicates, graph invariants, solver values. JSON and CSV
// forms.

#ifndef CZDG_REPORT_H_
#define CZDG_REPORT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "czdg/ring.h"
#include "czdg/solver.h"
#include "json.hpp"

namespace czdg {

struct ParameterValue {
  std::size_t optimum = 0;
  std::vector<std::string> witness;  // vertex labels
  std::uint64_t explored_nodes = 0;
  friend bool operator==(const ParameterValue&, const ParameterValue&) = default;
};

struct GraphStats {
  // False for integral domains; every other field is then meaningless.
  bool defined = false;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::uint32_t diameter = 0;  // kInfinity when disconnected
  std::uint32_t girth = 0;     // kInfinity when acyclic
  std::vector<std::string> families;
  std::optional<ParameterValue> gamma, dim, ddim;
  // Why the solver values are missing, empty when present.
  std::string solver_skipped;
  friend bool operator==(const GraphStats&, const GraphStats&) = default;
};

struct ClassListing {
  std::string label;  // "[rep]"
  std::vector<std::string> members;
  friend bool operator==(const ClassListing&, const ClassListing&) = default;
};

struct RingReport {
  std::string spec;
  std::size_t order = 0;
  bool field = false, local = false, reduced = false, boolean = false, vnr = false;
  std::size_t zd_count = 0;  // nonzero zero divisors
  GraphStats zdg;
  GraphStats czdg;
  std::vector<ClassListing> classes;  // zero-divisor classes only
  friend bool operator==(const RingReport&, const RingReport&) = default;
};

// Graphs above this many vertices get structure only, no solver values.
inline constexpr std::size_t kReportSolveLimit = 64;

struct ReportOptions {
  std::size_t solve_limit = kReportSolveLimit;
  SolveOptions solve;
};

RingReport build_report(const FiniteRing& r, const ReportOptions& opts = {});

// Structure and solver values of one graph.
GraphStats graph_stats(const Graph& g, const ReportOptions& opts = {});

nlohmann::ordered_json to_json(const RingReport& report);
RingReport report_from_json(const nlohmann::ordered_json& j);

// Column names, comma separated, no trailing newline.
std::string csv_header();
std::string csv_row(const RingReport& report);
// RFC 4180 quoting when needed.
std::string csv_field(const std::string& text);

// Multi-line summary for terminals.
std::string render_text(const RingReport& report);

}  // namespace czdg

#endif  // CZDG_REPORT_H_
