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

#include "czdg/claims.h"

#include <map>
#include <set>

#include "gtest/gtest.h"

namespace czdg {
namespace {

const std::vector<ClaimResult>& full_run() {
  static const std::vector<ClaimResult> kResults = run_claims();
  return kResults;
}

const ClaimResult* find(const std::vector<ClaimResult>& rs, const std::string& id) {
  for (const ClaimResult& r : rs) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

TEST(ClaimsTest, Selection) {
  EXPECT_TRUE(claim_selected("P3.3a/Z6", {}));
  EXPECT_TRUE(claim_selected("P3.3a/Z6", {"P3.3a"}));
  EXPECT_TRUE(claim_selected("P3.3a/Z6", {"P3.3a/Z6"}));
  EXPECT_FALSE(claim_selected("P3.3a/Z6", {"P3.3"}));
  EXPECT_FALSE(claim_selected("P3.3b/Z4", {"P3.3a"}));
  EXPECT_TRUE(claim_selected("T4.2c", {"T2", "T4.2c"}));
}

TEST(ClaimsTest, OnlyRunsSelected) {
  VerifyOptions opts;
  opts.only = {"P3.3a"};
  const std::vector<ClaimResult> rs = run_claims(opts);
  ASSERT_EQ(rs.size(), 5u);
  for (const ClaimResult& r : rs) {
    EXPECT_EQ(r.id.rfind("P3.3a/", 0), 0u) << r.id;
    EXPECT_EQ(r.status, ClaimStatus::kPass) << r.id;
    EXPECT_EQ(r.computed, "2 vertices, Ddim 1");
  }
}

TEST(ClaimsTest, CatalogCoversEveryGroup) {
  const std::vector<std::string> groups = claim_groups();
  const std::set<std::string> have(groups.begin(), groups.end());
  for (const char* g : {"P2.1", "P2.2", "C2.1", "P3.1i", "P3.1ii", "P3.1L", "L3.1", "P3.2i",
                        "P3.2ii", "P3.3a", "P3.3b", "P3.4", "P3.5", "P3.6", "T4.1i", "T4.1ii",
                        "C4.1", "T4.2a", "T4.2b", "T4.2c", "T4.2d"}) {
    EXPECT_TRUE(have.count(g)) << g;
  }
}

TEST(ClaimsTest, FullRunPassesWithKnownDiscrepancies) {
  const std::vector<ClaimResult>& rs = full_run();
  EXPECT_TRUE(verify_passed(rs));
  std::set<std::string> ids;
  for (const ClaimResult& r : rs) {
    EXPECT_TRUE(ids.insert(r.id).second) << "duplicate " << r.id;
    EXPECT_NE(r.status, ClaimStatus::kFail) << r.id << ": " << r.computed;
  }
  // Every table entry names a claim that exists and actually fails.
  for (const KnownDiscrepancy& k : known_discrepancies()) {
    const ClaimResult* r = find(rs, k.id);
    ASSERT_NE(r, nullptr) << k.id;
    EXPECT_EQ(r->status, ClaimStatus::kFailKnown) << k.id;
    EXPECT_FALSE(r->claimed.empty());
    EXPECT_FALSE(r->computed.empty());
  }
}

TEST(ClaimsTest, SpecificOutcomes) {
  const std::vector<ClaimResult>& rs = full_run();
  const std::map<std::string, ClaimStatus> want = {
      {"E1.ann/14", ClaimStatus::kFailKnown},
      {"P3.4", ClaimStatus::kFailKnown},
      {"P3.2ii/Z16", ClaimStatus::kFailKnown},
      {"L3.1", ClaimStatus::kSkipped},
      {"P3.3b/Z49", ClaimStatus::kPass},
      {"P2.1", ClaimStatus::kPass},
      {"T4.2d", ClaimStatus::kPass},
  };
  for (const auto& [id, status] : want) {
    const ClaimResult* r = find(rs, id);
    ASSERT_NE(r, nullptr) << id;
    EXPECT_EQ(r->status, status) << id << ": " << r->computed;
  }
  EXPECT_EQ(find(rs, "P3.4")->claimed, "1");
  EXPECT_EQ(find(rs, "P3.3b/Z49")->computed, "1 vertices, Ddim 0");
}

TEST(ClaimsTest, JsonSummary) {
  const std::vector<ClaimResult>& rs = full_run();
  const nlohmann::ordered_json j = claims_to_json(rs);
  EXPECT_EQ(j["claims"].size(), rs.size());
  const std::size_t total = j["summary"]["PASS"].get<std::size_t>() +
                            j["summary"]["FAIL"].get<std::size_t>() +
                            j["summary"]["FAIL(known)"].get<std::size_t>() +
                            j["summary"]["SKIPPED"].get<std::size_t>();
  EXPECT_EQ(total, rs.size());
  EXPECT_EQ(j["summary"]["FAIL"], 0);
  EXPECT_EQ(j["passed"], true);
}

TEST(ClaimsTest, StatusText) {
  EXPECT_EQ(claim_status_text(ClaimStatus::kFailKnown), "FAIL(known)");
  EXPECT_EQ(claim_status_text(ClaimStatus::kSkipped), "SKIPPED");
}

}  // namespace
}  // namespace czdg
