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

// czdg command line: info, verify, atlas, solve.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "czdg/atlas.h"
#include "czdg/claims.h"
#include "czdg/error.h"
#include "czdg/graph.h"
#include "czdg/report.h"
#include "czdg/solver.h"
#include "czdg/spec_parser.h"
#include "czdg/zdg.h"

namespace czdg {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitUndefined = 3;
constexpr int kExitResource = 4;
constexpr int kExitVerify = 5;

int exit_code(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kSyntaxError:
    case ErrorCode::kUnknownVariable:
    case ErrorCode::kNonPrimePowerGF:
    case ErrorCode::kMalformedInput:
    case ErrorCode::kNotPrime:
    case ErrorCode::kNonOrientableRelation:
    case ErrorCode::kInconsistentPresentation:
      return kExitInput;
    case ErrorCode::kOrderOutOfRange:
      // Too small is bad input; too large is the cap.
      return std::string(e.what()).find("order cap") != std::string::npos ? kExitResource
                                                                          : kExitInput;
    case ErrorCode::kEmptyGraphUndefined:
    case ErrorCode::kUndefinedForEmptyGraph:
    case ErrorCode::kDisconnected:
      return kExitUndefined;
    case ErrorCode::kResourceCap:
    case ErrorCode::kTooLarge:
    case ErrorCode::kNonTerminating:
      return kExitResource;
    case ErrorCode::kInvalidArgument:
      return kExitUsage;
    case ErrorCode::kInfeasible:
    case ErrorCode::kInternal:
      break;
  }
  return kExitUsage;
}

struct InfoArgs {
  std::string spec;
  std::string dot;
  std::string dot_file;
  bool json = false;
};

int cmd_info(const InfoArgs& a, std::size_t cap) {
  const FiniteRing r = build_ring(a.spec, cap);
  std::string dot;
  if (!a.dot.empty()) {
    // Throws kEmptyGraphUndefined for domains: exit 3.
    if (a.dot == "zdg") {
      dot = to_dot(build_zdg(r));
    } else {
      const CompressedGraph c = build_czdg(r);
      std::vector<std::string> tips;
      for (Vertex v = 0; v < c.graph.vertex_count(); ++v) tips.push_back(c.members_text(r, v));
      dot = to_dot(c.graph, tips);
    }
    if (a.dot_file.empty()) {
      std::cout << dot;
      return kExitOk;
    }
    std::ofstream out(a.dot_file);
    if (!(out << dot)) throw Error(ErrorCode::kMalformedInput, "cannot write " + a.dot_file);
  }
  const RingReport rep = build_report(r);
  if (a.json) {
    std::cout << to_json(rep).dump(2) << "\n";
  } else {
    std::cout << render_text(rep);
  }
  return kExitOk;
}

struct VerifyArgs {
  bool json = false;
  std::vector<std::string> only;
  std::size_t max_order = 64;
};

int cmd_verify(const VerifyArgs& a, std::size_t cap) {
  VerifyOptions opts;
  opts.only = a.only;
  opts.atlas_max_order = a.max_order;
  opts.cap = cap;
  const std::vector<ClaimResult> results = run_claims(opts);
  if (!a.only.empty() && results.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "--only matched no claim");
  }
  if (a.json) {
    std::cout << claims_to_json(results).dump(2) << "\n";
  } else {
    std::cout << render_claims_text(results);
  }
  return verify_passed(results) ? kExitOk : kExitVerify;
}

struct AtlasArgs {
  std::size_t max_order = 0;
  std::string families = "zn,products,presentations";
  bool csv = false;
  bool json = false;
};

int cmd_atlas(const AtlasArgs& a, std::size_t cap) {
  if (a.max_order > cap) {
    std::cerr << "error: --max-order " << a.max_order << " exceeds the order cap " << cap
              << "\n";
    return kExitResource;
  }
  const std::vector<RingReport> rows =
      run_atlas(atlas_specs(a.max_order, parse_families(a.families)), cap);
  if (a.json) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const RingReport& r : rows) j.push_back(to_json(r));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << csv_header() << "\n";
    for (const RingReport& r : rows) std::cout << csv_row(r) << "\n";
  }
  return kExitOk;
}

struct SolveArgs {
  std::string file;
  std::string mode;
  bool oracle = false;
};

int cmd_solve(const SolveArgs& a) {
  std::ifstream in(a.file);
  if (!in) throw Error(ErrorCode::kMalformedInput, "cannot read " + a.file);
  const Graph g = read_edge_list(in);
  const SolveMode mode = parse_solve_mode(a.mode);
  const SolveResult res = a.oracle ? brute_force_oracle(g, mode) : solve_graph(g, mode);
  std::vector<std::string> witness;
  for (Vertex v : res.witness) witness.push_back(g.label(v));
  nlohmann::ordered_json j;
  j["mode"] = std::string(solve_mode_name(res.mode));
  j["solver"] = a.oracle ? "oracle" : "branch-and-bound";
  j["vertices"] = g.vertex_count();
  j["optimum"] = res.optimum;
  j["witness"] = witness;
  j["explored_nodes"] = res.explored_nodes;
  j["elapsed_us"] =
      std::chrono::duration_cast<std::chrono::microseconds>(res.elapsed).count();
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int run(int argc, char** argv) {
  CLI::App app{"Zero-divisor graphs of finite commutative rings"};
  app.require_subcommand(1);

  InfoArgs info;
  CLI::App* info_cmd = app.add_subcommand("info", "Report on one ring");
  info_cmd->add_option("spec", info.spec, "Ring spec, e.g. \"Z4[x]/(2x,x^2-2)\"")->required();
  info_cmd->add_option("--dot", info.dot, "Emit DOT for a graph")
      ->check(CLI::IsMember({"zdg", "czdg"}));
  info_cmd->add_option("--dot-file", info.dot_file,
                       "Write DOT here and print the report; default is DOT on stdout only");
  info_cmd->add_flag("--json", info.json, "Report as JSON");

  VerifyArgs verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Check the claims catalog");
  verify_cmd->add_flag("--json", verify.json, "Results as JSON");
  verify_cmd->add_option("--only", verify.only, "Claim ids or id prefixes")->delimiter(',');
  verify_cmd->add_option("--max-order", verify.max_order, "Sweep population order bound")
      ->check(CLI::Range(2, 4096));

  AtlasArgs atlas;
  CLI::App* atlas_cmd = app.add_subcommand("atlas", "Sweep ring families");
  atlas_cmd->add_option("--max-order", atlas.max_order, "Largest Z_n / product order")
      ->required()
      ->check(CLI::PositiveNumber);
  atlas_cmd->add_option("--families", atlas.families, "zn,products,presentations");
  CLI::Option* csv = atlas_cmd->add_flag("--csv", atlas.csv, "CSV rows (default)");
  CLI::Option* json = atlas_cmd->add_flag("--json", atlas.json, "JSON array");
  csv->excludes(json);

  SolveArgs solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve an edge-list graph");
  solve_cmd->add_option("file", solve.file, "Edge list: vertex count, then \"u v\" lines")
      ->required();
  solve_cmd->add_option("--mode", solve.mode, "gamma, dim or ddim")
      ->required()
      ->check(CLI::IsMember({"gamma", "dim", "ddim"}));
  solve_cmd->add_flag("--oracle", solve.oracle, "Use the brute-force oracle (<= 20 vertices)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const std::size_t cap = cap_from_env();
    if (*info_cmd) return cmd_info(info, cap);
    if (*verify_cmd) return cmd_verify(verify, cap);
    if (*atlas_cmd) return cmd_atlas(atlas, cap);
    return cmd_solve(solve);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e);
  }
}

}  // namespace
}  // namespace czdg

int main(int argc, char** argv) { return czdg::run(argc, argv); }
