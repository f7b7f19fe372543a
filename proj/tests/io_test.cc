// Copyright 2026 The foldtree Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <json.hpp>

#include "foldtree/aleksandrov.h"
#include "foldtree/canonical.h"
#include "foldtree/enumerate.h"
#include "foldtree/error.h"
#include "foldtree/io.h"

namespace foldtree {
namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kBadInput;
}

TEST(PolygonJson, BoundaryRoundTrip) {
  for (const PolygonSpec& p : {latin_cross(), m_star(6), rectangle(3, Rational(1, 2))}) {
    const PolygonSpec q = read_polygon_json(write_polygon_json(p));
    ASSERT_EQ(q.n(), p.n());
    for (int i = 0; i < p.n(); ++i) {
      EXPECT_EQ(q.exact_length(i), p.exact_length(i));
      EXPECT_EQ(q.angle(i).pi_units().exact(), p.angle(i).pi_units().exact());
    }
  }
}

TEST(PolygonJson, Coordinates) {
  const PolygonSpec p = read_polygon_json(R"({"coords": [[0,0],[2,0],[2,"1/2"],[0,"0.5"]]})");
  EXPECT_EQ(p.n(), 4);
  EXPECT_EQ(p.exact_perimeter(), 5);
  // Binary floating point is refused rather than rounded.
  EXPECT_THROW(read_polygon_json(R"({"coords": [[0,0],[2,0],[2,0.1],[0,0.1]]})"), Error);
}

TEST(PolygonJson, Errors) {
  EXPECT_EQ(code_of([] { read_polygon_json("{"); }), ErrorCode::kBadInput);
  EXPECT_EQ(code_of([] { read_polygon_json(R"({"shape": 3})"); }), ErrorCode::kBadInput);
  EXPECT_EQ(code_of([] { read_polygon_json(R"({"coords": [[0,0],[0,1],[1,1],[1,0]]})"); }),
            ErrorCode::kClockwiseInput);
}

TEST(CatalogJson, RoundTripKeepsKeysAndValidity) {
  for (const PolygonSpec& p : {unit_square(), rectangle(2, 1), latin_cross()}) {
    const EnumerationResult r = enumerate_gluings(p);
    const std::string text = write_catalog_json(r.trees, p);
    const auto entries = read_catalog_json(text);
    ASSERT_EQ(entries.size(), r.trees.size());
    for (size_t i = 0; i < entries.size(); ++i) {
      EXPECT_EQ(entries[i].key, r.keys[i].str());
      EXPECT_EQ(canonical_form(entries[i].tree), r.keys[i]);
      EXPECT_TRUE(check_aleksandrov(entries[i].tree, p).valid);
      EXPECT_EQ(entries[i].tree.belts.size(), r.trees[i].belts.size());
    }
    EXPECT_EQ(write_catalog_json(r.trees, p), text);
  }
}

TEST(CatalogJson, Schema) {
  const PolygonSpec p = rectangle(2, 1);
  const auto j = nlohmann::json::parse(write_catalog_json(enumerate_gluings(p).trees, p));
  ASSERT_TRUE(j.is_array());
  ASSERT_FALSE(j.empty());
  for (const auto& e : j) {
    for (const char* field : {"key", "shape", "leaves", "belts", "nodes", "arcs", "region"}) {
      EXPECT_TRUE(e.contains(field)) << field;
    }
    for (const auto& n : e["nodes"]) {
      EXPECT_TRUE(n.contains("labels"));
      EXPECT_TRUE(n.contains("angle_sum_pi"));
      for (const auto& pt : n["points"]) EXPECT_GE(pt["index"].get<int>(), 1);
    }
  }
}

TEST(CatalogJson, EmptyAndMalformed) {
  EXPECT_TRUE(read_catalog_json("[]").empty());
  EXPECT_THROW(read_catalog_json("{}"), Error);
  EXPECT_THROW(read_catalog_json("[{\"nodes\": 1}]"), Error);
}

}  // namespace
}  // namespace foldtree
