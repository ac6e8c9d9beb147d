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

#include "czdg/atlas.h"

#include <algorithm>
#include <exception>
#include <optional>

#include "czdg/error.h"
#include "czdg/numeric.h"
#include "czdg/spec_parser.h"

namespace czdg {
namespace {

struct Factor {
  std::size_t order;
  std::string spec;
};

std::vector<Factor> local_factors(std::size_t max_order) {
  std::vector<Factor> out;
  for (std::size_t q = 2; q <= max_order; ++q) {
    const std::optional<PrimePower> pp = as_prime_power(q);
    if (!pp) continue;
    out.push_back({q, "Z" + std::to_string(q)});
    if (pp->exponent >= 2) out.push_back({q, "GF(" + std::to_string(q) + ")"});
  }
  return out;
}

void extend(const std::vector<Factor>& factors, std::size_t first, std::size_t order,
            std::size_t max_order, std::vector<std::size_t>& picked,
            std::vector<std::pair<std::size_t, std::vector<std::size_t>>>& out) {
  if (picked.size() >= 2) out.emplace_back(order, picked);
  for (std::size_t i = first; i < factors.size(); ++i) {
    if (order * factors[i].order > max_order) break;  // sorted by order
    picked.push_back(i);
    extend(factors, i, order * factors[i].order, max_order, picked, out);
    picked.pop_back();
  }
}

}  // namespace

AtlasFamilies parse_families(std::string_view text) {
  AtlasFamilies f{false, false, false};
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view name = text.substr(pos, end - pos);
    if (name == "zn") {
      f.zn = true;
    } else if (name == "products") {
      f.products = true;
    } else if (name == "presentations") {
      f.presentations = true;
    } else {
      throw Error(ErrorCode::kInvalidArgument, "unknown family '" + std::string(name) +
                                                   "' (expected zn, products, presentations)");
    }
    pos = end + 1;
  }
  return f;
}

std::vector<std::string> zn_specs(std::size_t max_order) {
  std::vector<std::string> out;
  for (std::size_t n = 2; n <= max_order; ++n) out.push_back("Z" + std::to_string(n));
  return out;
}

std::vector<std::string> local_factor_specs(std::size_t max_order) {
  std::vector<std::string> out;
  for (const Factor& f : local_factors(max_order)) out.push_back(f.spec);
  return out;
}

std::vector<std::string> product_specs(std::size_t max_order) {
  const std::vector<Factor> factors = local_factors(max_order / 2);
  std::vector<std::pair<std::size_t, std::vector<std::size_t>>> picks;
  std::vector<std::size_t> picked;
  extend(factors, 0, 1, max_order, picked, picks);
  std::stable_sort(picks.begin(), picks.end());
  std::vector<std::string> out;
  for (const auto& [order, idx] : picks) {
    std::string spec;
    for (std::size_t i : idx) spec += (spec.empty() ? "" : " x ") + factors[i].spec;
    out.push_back(spec);
  }
  return out;
}

const std::vector<std::string>& builtin_presentations() {
  static const std::vector<std::string> kList = {
      // order p^2
      "Z2[x]/(x^2)", "Z3[x]/(x^2)", "Z5[x]/(x^2)",
      // order 8
      "Z2[x]/(x^3)", "Z4[x]/(2x,x^2-2)", "Z2[x,y]/((x,y)^2)", "Z4[x]/(2x,x^2)",
      // order 27
      "Z3[x]/(x^3)", "Z9[x]/(3x,x^2-3)", "Z9[x]/(3x,x^2-6)", "Z9[x]/(3x,x^2)",
      "Z3[x,y]/((x,y)^2)",
      // order 16, grouped by expected outcome
      "GF(4)[x]/(x^2)", "Z2[x,y,z]/((x,y,z)^2)", "Z4[x]/(x^2+x+1)", "Z2[x]/(x^4)",
      "Z2[x,y]/(x^3,xy,y^2)", "Z4[x]/(2x,x^3-2)", "Z4[x]/(x^2-2)", "Z8[x]/(2x,x^2)",
      "Z4[x]/(x^2-2x-2)", "Z8[x]/(2x,x^2-2)", "Z4[x]/(x^2-2x)", "Z4[x]/(x^2)",
      "Z2[x,y]/(x^2,y^2)", "Z2[x,y]/(x^2-y^2,xy)", "Z4[x]/(x^3,2x^2,2x)",
      // realizable 4- and 5-vertex examples
      "Z2[x,y]/(x^3,xy,y^3)", "Z9[x]/(x^2)", "Z3[x,y]/(xy,x^3,y^3,x^2-y^2)",
      "Z8[x,y]/(x^2,y^2,4x,4y,2xy)",
      // small fields
      "GF(4)", "GF(8)", "GF(9)", "GF(25)", "GF(27)"};
  return kList;
}

std::vector<std::string> atlas_specs(std::size_t max_order, const AtlasFamilies& families) {
  std::vector<std::string> out;
  if (families.zn) {
    for (std::string& s : zn_specs(max_order)) out.push_back(std::move(s));
  }
  if (families.products) {
    for (std::string& s : product_specs(max_order)) out.push_back(std::move(s));
  }
  if (families.presentations) {
    for (const std::string& s : builtin_presentations()) out.push_back(s);
  }
  return out;
}

std::vector<RingReport> run_atlas(const std::vector<std::string>& specs, std::size_t cap,
                                  const ReportOptions& opts) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(specs.size());
  std::vector<RingReport> rows(specs.size());
  std::vector<std::exception_ptr> errors(specs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      rows[i] = build_report(build_ring(specs[i], cap), opts);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  // First failure in row order, so the error does not depend on scheduling.
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

}  // namespace czdg
