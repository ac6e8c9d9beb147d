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

#include <set>
#include <sstream>

#include "czdg/atlas.h"
#include "czdg/error.h"
#include "czdg/spec_parser.h"
#include "gtest/gtest.h"

namespace czdg {
namespace {

RingReport report(const std::string& spec) { return build_report(build_ring(spec)); }

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        out.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  return out;
}

TEST(ReportTest, Z16) {
  const RingReport r = report("Z16");
  EXPECT_EQ(r.order, 16u);
  EXPECT_TRUE(r.local);
  EXPECT_FALSE(r.reduced);
  EXPECT_EQ(r.zd_count, 7u);
  EXPECT_EQ(r.zdg.vertices, 7u);
  EXPECT_EQ(r.czdg.vertices, 3u);
  EXPECT_EQ(r.czdg.edges, 2u);
  EXPECT_EQ(r.czdg.girth, kInfinity);
  EXPECT_NE(std::find(r.czdg.families.begin(), r.czdg.families.end(), "Path(3)"),
            r.czdg.families.end());
  ASSERT_TRUE(r.czdg.ddim);
  EXPECT_EQ(r.czdg.ddim->optimum, 2u);
  ASSERT_EQ(r.classes.size(), 3u);
  std::size_t members = 0;
  for (const ClassListing& c : r.classes) members += c.members.size();
  EXPECT_EQ(members, 7u);
}

TEST(ReportTest, DomainIsUndefined) {
  const RingReport r = report("GF(9)");
  EXPECT_TRUE(r.field);
  EXPECT_FALSE(r.zdg.defined);
  EXPECT_FALSE(r.czdg.defined);
  const nlohmann::ordered_json j = to_json(r);
  EXPECT_EQ(j["czdg"], "undefined");
  EXPECT_EQ(csv_row(r).find("skipped"), std::string::npos);
}

TEST(ReportTest, SolveLimitSkipsLargeGraphs) {
  ReportOptions opts;
  opts.solve_limit = 4;
  const RingReport r = build_report(build_ring("Z16"), opts);
  EXPECT_FALSE(r.zdg.ddim);
  EXPECT_FALSE(r.zdg.solver_skipped.empty());
  EXPECT_TRUE(r.czdg.ddim);
  EXPECT_NE(csv_row(r).find("skipped"), std::string::npos);
}

TEST(ReportTest, JsonRoundTripIsByteIdentical) {
  for (const char* spec : {"Z16", "GF(9)", "Z2 x Z2", "Z4 x GF(4)", "Z2[x,y]/(x^3,xy,y^3)",
                           "Z8[x,y]/(x^2,y^2,4x,4y,2xy)"}) {
    const RingReport r = report(spec);
    const std::string text = to_json(r).dump(2);
    const RingReport back = report_from_json(nlohmann::ordered_json::parse(text));
    EXPECT_EQ(back, r) << spec;
    EXPECT_EQ(to_json(back).dump(2), text) << spec;
  }
}

TEST(ReportTest, MalformedJson) {
  nlohmann::ordered_json j = to_json(report("Z6"));
  j.erase("order");
  try {
    report_from_json(j);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMalformedInput);
  }
}

TEST(CsvTest, Quoting) {
  EXPECT_EQ(csv_field("Z6"), "Z6");
  EXPECT_EQ(csv_field("Z2[x,y]/(x^2,y^2)"), "\"Z2[x,y]/(x^2,y^2)\"");
  EXPECT_EQ(csv_field("a\"b"), "\"a\"\"b\"");
  EXPECT_EQ(csv_field("a\nb"), "\"a\nb\"");
}

TEST(CsvTest, RowsMatchHeader) {
  const std::size_t columns = split(csv_header()).size();
  EXPECT_EQ(columns, 23u);
  for (const char* spec : {"Z16", "GF(9)", "Z2[x,y]/(x^2,y^2)", "Z3 x GF(4)"}) {
    const std::vector<std::string> row = split(csv_row(report(spec)));
    ASSERT_EQ(row.size(), columns) << spec;
    EXPECT_EQ(row[0], spec);
  }
}

TEST(AtlasTest, ZnRowsAndOrder) {
  const std::vector<std::string> specs = atlas_specs(16, parse_families("zn"));
  ASSERT_EQ(specs.size(), 15u);
  const std::vector<RingReport> rows = run_atlas(specs, 4096);
  EXPECT_EQ(rows.back().spec, "Z16");
  EXPECT_EQ(rows.back().czdg.vertices, 3u);
  EXPECT_EQ(rows[2].spec, "Z4");
  EXPECT_EQ(rows[2].czdg.vertices, 1u);
  EXPECT_EQ(rows[2].czdg.ddim->optimum, 0u);
}

TEST(AtlasTest, ProductsHaveBoundedOrderAndNoDuplicates) {
  const std::vector<std::string> specs = product_specs(64);
  std::set<std::string> seen(specs.begin(), specs.end());
  EXPECT_EQ(seen.size(), specs.size());
  std::size_t last = 0;
  for (const std::string& s : specs) {
    const std::size_t order = build_ring(s).order();
    EXPECT_LE(order, 64u) << s;
    EXPECT_GE(order, last) << s;
    last = order;
  }
  EXPECT_TRUE(seen.count("Z2 x Z2"));
  EXPECT_TRUE(seen.count("Z4 x GF(4)"));
  EXPECT_TRUE(seen.count("Z2 x Z2 x Z2 x Z2 x Z2 x Z2"));
}

TEST(AtlasTest, PresentationsBuild) {
  const std::vector<RingReport> rows = run_atlas(builtin_presentations(), 4096);
  for (const RingReport& r : rows) {
    if (r.spec == "Z9[x]/(3x,x^2-3)") EXPECT_EQ(r.czdg.vertices, 2u);
  }
}

TEST(AtlasTest, FirstErrorInRowOrder) {
  try {
    run_atlas({"Z6", "Z0", "GF(6)"}, 4096);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOrderOutOfRange);
  }
}

TEST(AtlasTest, UnknownFamily) {
  EXPECT_THROW(parse_families("zn,lattices"), Error);
}

}  // namespace
}  // namespace czdg
