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

// Claims catalog. Each claim recomputes its quantity and compares it with
// the claimed value.

#ifndef CZDG_CLAIMS_H_
#define CZDG_CLAIMS_H_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace czdg {

enum class ClaimStatus { kPass, kFail, kFailKnown, kSkipped };

// "PASS", "FAIL", "FAIL(known)", "SKIPPED".
std::string_view claim_status_text(ClaimStatus status);

struct ClaimResult {
  std::string id;  // "P3.3a/Z6": group id, then the ring or scope
  std::string description;
  ClaimStatus status = ClaimStatus::kPass;
  std::string claimed;
  std::string computed;
  std::string detail;  // counterexamples, skip reason, discrepancy note
};

// Claims expected to fail, with the analysis. Versioned with the catalog.
struct KnownDiscrepancy {
  std::string id;
  std::string reason;
};
const std::vector<KnownDiscrepancy>& known_discrepancies();

struct VerifyOptions {
  // Empty: everything. Otherwise an entry selects a claim id exactly or
  // every id below it ("P3.3a" selects "P3.3a/Z6").
  std::vector<std::string> only;
  // Z_n and product rings up to this order form the sweep population.
  std::size_t atlas_max_order = 64;
  std::size_t cap = 4096;
};

// Top-level group ids in catalog order.
std::vector<std::string> claim_groups();

bool claim_selected(std::string_view id, const std::vector<std::string>& only);

std::vector<ClaimResult> run_claims(const VerifyOptions& opts = {});

// True when no claim has status kFail.
bool verify_passed(const std::vector<ClaimResult>& results);

nlohmann::ordered_json claims_to_json(const std::vector<ClaimResult>& results);
std::string render_claims_text(const std::vector<ClaimResult>& results);

}  // namespace czdg

#endif  // CZDG_CLAIMS_H_
