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

// Ring families swept by the atlas.

#ifndef CZDG_ATLAS_H_
#define CZDG_ATLAS_H_

#include <string>
#include <string_view>
#include <vector>

#include "czdg/report.h"

namespace czdg {

struct AtlasFamilies {
  bool zn = true;
  bool products = true;
  bool presentations = true;
};

// "zn,products" style list; throws kInvalidArgument on unknown names.
AtlasFamilies parse_families(std::string_view text);

// Z2..Zn.
std::vector<std::string> zn_specs(std::size_t max_order);

// Local factors Z_{p^k} (k >= 1) and GF(p^k) (k >= 2).
std::vector<std::string> local_factor_specs(std::size_t max_order);

// Products of two or more local factors, order <= max_order, each multiset
// once. Sorted by order, then factor list.
std::vector<std::string> product_specs(std::size_t max_order);

// Fixed list of named quotient rings and small fields; independent of
// max_order.
const std::vector<std::string>& builtin_presentations();

std::vector<std::string> atlas_specs(std::size_t max_order, const AtlasFamilies& families);

// One report per spec, in input order. Rows are computed in parallel.
std::vector<RingReport> run_atlas(const std::vector<std::string>& specs, std::size_t cap,
                                  const ReportOptions& opts = {});

}  // namespace czdg

#endif  // CZDG_ATLAS_H_
