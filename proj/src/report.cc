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

#include "czdg/report.h"

#include <sstream>

#include "czdg/error.h"
#include "czdg/graph.h"
#include "czdg/zdg.h"

namespace czdg {
namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kUndefined = "undefined";

ParameterValue parameter(const Graph& g, SolveMode mode, const SolveOptions& opts) {
  const SolveResult res = solve_graph(g, mode, opts);
  ParameterValue v;
  v.optimum = res.optimum;
  v.explored_nodes = res.explored_nodes;
  for (Vertex w : res.witness) v.witness.push_back(g.label(w));
  return v;
}

Json extent_json(std::uint32_t v) {
  if (v == kInfinity) return "inf";
  return v;
}

std::uint32_t extent_from(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "inf") throw Error(ErrorCode::kMalformedInput, "bad extent");
    return kInfinity;
  }
  return j.get<std::uint32_t>();
}

Json parameter_json(const std::optional<ParameterValue>& v) {
  if (!v) return nullptr;
  Json j;
  j["value"] = v->optimum;
  j["witness"] = v->witness;
  j["explored_nodes"] = v->explored_nodes;
  return j;
}

std::optional<ParameterValue> parameter_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  ParameterValue v;
  v.optimum = j.at("value").get<std::size_t>();
  v.witness = j.at("witness").get<std::vector<std::string>>();
  v.explored_nodes = j.at("explored_nodes").get<std::uint64_t>();
  return v;
}

Json stats_json(const GraphStats& s) {
  if (!s.defined) return kUndefined;
  Json j;
  j["vertices"] = s.vertices;
  j["edges"] = s.edges;
  j["diameter"] = extent_json(s.diameter);
  j["girth"] = extent_json(s.girth);
  j["families"] = s.families;
  j["gamma"] = parameter_json(s.gamma);
  j["dim"] = parameter_json(s.dim);
  j["ddim"] = parameter_json(s.ddim);
  if (!s.solver_skipped.empty()) j["solver_skipped"] = s.solver_skipped;
  return j;
}

GraphStats stats_from(const Json& j) {
  GraphStats s;
  if (j.is_string()) {
    if (j.get<std::string>() != kUndefined) {
      throw Error(ErrorCode::kMalformedInput, "graph stats must be an object or \"undefined\"");
    }
    return s;
  }
  s.defined = true;
  s.vertices = j.at("vertices").get<std::size_t>();
  s.edges = j.at("edges").get<std::size_t>();
  s.diameter = extent_from(j.at("diameter"));
  s.girth = extent_from(j.at("girth"));
  s.families = j.at("families").get<std::vector<std::string>>();
  s.gamma = parameter_from(j.at("gamma"));
  s.dim = parameter_from(j.at("dim"));
  s.ddim = parameter_from(j.at("ddim"));
  if (j.contains("solver_skipped")) s.solver_skipped = j["solver_skipped"].get<std::string>();
  return s;
}

std::string value_cell(const GraphStats& s, const std::optional<ParameterValue>& v) {
  if (!s.defined) return kUndefined;
  return v ? std::to_string(v->optimum) : "skipped";
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string text_value(const std::optional<ParameterValue>& v) {
  if (!v) return "-";
  return std::to_string(v->optimum) + " {" + join(v->witness, ", ") + "}";
}

void text_stats(std::ostringstream& out, const char* name, const GraphStats& s) {
  if (!s.defined) {
    out << name << ": undefined (no zero divisors)\n";
    return;
  }
  out << name << ": " << s.vertices << " vertices, " << s.edges << " edges, diameter "
      << extent_text(s.diameter) << ", girth " << extent_text(s.girth) << "\n";
  out << "  families: " << join(s.families, " ") << "\n";
  if (!s.solver_skipped.empty()) {
    out << "  solver: skipped (" << s.solver_skipped << ")\n";
    return;
  }
  out << "  gamma " << text_value(s.gamma) << "\n";
  out << "  dim   " << text_value(s.dim) << "\n";
  out << "  ddim  " << text_value(s.ddim) << "\n";
}

}  // namespace

GraphStats graph_stats(const Graph& g, const ReportOptions& opts) {
  GraphStats s;
  s.defined = true;
  s.vertices = g.vertex_count();
  s.edges = g.edge_count();
  const DistanceMatrix d = all_pairs_distances(g);
  s.diameter = diameter(d);
  s.girth = girth(g);
  for (const FamilyTag& t : classify_family(g)) s.families.push_back(t.text());
  if (s.vertices > opts.solve_limit) {
    s.solver_skipped = "more than " + std::to_string(opts.solve_limit) + " vertices";
    return s;
  }
  s.gamma = parameter(g, SolveMode::kGamma, opts.solve);
  s.dim = parameter(g, SolveMode::kDim, opts.solve);
  s.ddim = parameter(g, SolveMode::kDdim, opts.solve);
  return s;
}

RingReport build_report(const FiniteRing& r, const ReportOptions& opts) {
  RingReport rep;
  rep.spec = r.source_spec();
  rep.order = r.order();
  rep.field = is_field(r);
  rep.local = is_local(r);
  rep.reduced = is_reduced(r);
  rep.boolean = is_boolean(r);
  rep.vnr = is_vnr(r);
  rep.zd_count = zero_divisors(r).size();
  if (rep.zd_count == 0) return rep;
  rep.zdg = graph_stats(build_zdg(r), opts);
  const CompressedGraph c = build_czdg(r);
  rep.czdg = graph_stats(c.graph, opts);
  for (Vertex v = 0; v < c.graph.vertex_count(); ++v) {
    ClassListing cl;
    cl.label = c.graph.label(v);
    for (Element e : c.partition.classes[c.class_index[v]].members.elements()) {
      cl.members.push_back(r.label(e));
    }
    rep.classes.push_back(std::move(cl));
  }
  return rep;
}

nlohmann::ordered_json to_json(const RingReport& rep) {
  Json j;
  j["spec"] = rep.spec;
  j["order"] = rep.order;
  j["predicates"] = {{"field", rep.field},     {"local", rep.local},
                     {"reduced", rep.reduced}, {"boolean", rep.boolean},
                     {"vnr", rep.vnr}};
  j["zd_count"] = rep.zd_count;
  j["zdg"] = stats_json(rep.zdg);
  j["czdg"] = stats_json(rep.czdg);
  Json classes = Json::array();
  for (const ClassListing& cl : rep.classes) {
    classes.push_back({{"label", cl.label}, {"members", cl.members}});
  }
  j["classes"] = classes;
  return j;
}

RingReport report_from_json(const nlohmann::ordered_json& j) {
  try {
    RingReport rep;
    rep.spec = j.at("spec").get<std::string>();
    rep.order = j.at("order").get<std::size_t>();
    const Json& p = j.at("predicates");
    rep.field = p.at("field").get<bool>();
    rep.local = p.at("local").get<bool>();
    rep.reduced = p.at("reduced").get<bool>();
    rep.boolean = p.at("boolean").get<bool>();
    rep.vnr = p.at("vnr").get<bool>();
    rep.zd_count = j.at("zd_count").get<std::size_t>();
    rep.zdg = stats_from(j.at("zdg"));
    rep.czdg = stats_from(j.at("czdg"));
    for (const Json& cl : j.at("classes")) {
      rep.classes.push_back({cl.at("label").get<std::string>(),
                             cl.at("members").get<std::vector<std::string>>()});
    }
    return rep;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kMalformedInput, std::string("report JSON: ") + e.what());
  }
}

std::string csv_header() {
  return "spec,order,field,local,reduced,boolean,vnr,zd_count,"
         "zdg_vertices,zdg_edges,zdg_diameter,zdg_girth,zdg_gamma,zdg_dim,zdg_ddim,"
         "czdg_vertices,czdg_edges,czdg_diameter,czdg_girth,czdg_families,"
         "czdg_gamma,czdg_dim,czdg_ddim";
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_row(const RingReport& rep) {
  std::vector<std::string> cells = {
      csv_field(rep.spec),           std::to_string(rep.order),
      rep.field ? "1" : "0",         rep.local ? "1" : "0",
      rep.reduced ? "1" : "0",       rep.boolean ? "1" : "0",
      rep.vnr ? "1" : "0",           std::to_string(rep.zd_count)};
  const auto add_structure = [&](const GraphStats& s, bool with_families) {
    if (!s.defined) {
      for (int i = 0; i < (with_families ? 5 : 4); ++i) cells.push_back(kUndefined);
      return;
    }
    cells.push_back(std::to_string(s.vertices));
    cells.push_back(std::to_string(s.edges));
    cells.push_back(extent_text(s.diameter));
    cells.push_back(extent_text(s.girth));
    if (with_families) cells.push_back(csv_field(join(s.families, ";")));
  };
  const auto add_values = [&](const GraphStats& s) {
    cells.push_back(value_cell(s, s.gamma));
    cells.push_back(value_cell(s, s.dim));
    cells.push_back(value_cell(s, s.ddim));
  };
  add_structure(rep.zdg, false);
  add_values(rep.zdg);
  add_structure(rep.czdg, true);
  add_values(rep.czdg);
  return join(cells, ",");
}

std::string render_text(const RingReport& rep) {
  std::ostringstream out;
  out << rep.spec << " (order " << rep.order << ")\n";
  out << "  field " << rep.field << ", local " << rep.local << ", reduced " << rep.reduced
      << ", boolean " << rep.boolean << ", vnr " << rep.vnr << "\n";
  out << "nonzero zero divisors: " << rep.zd_count << "\n";
  text_stats(out, "zdg", rep.zdg);
  text_stats(out, "czdg", rep.czdg);
  if (!rep.classes.empty()) out << "classes:\n";
  for (const ClassListing& cl : rep.classes) {
    out << "  " << cl.label << " = {" << join(cl.members, ", ") << "}\n";
  }
  return out.str();
}

}  // namespace czdg
