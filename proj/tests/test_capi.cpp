// Copyright 2026 The pdwtile Authors.
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


// Exercises the shared library through its C interface only.

#include "pdwtile/pdwtile.h"

#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

namespace {

constexpr double kPi = 3.14159265358979323846;
const double kSpecialAlpha = std::acos(-1 / (2 * std::sqrt(7.0)));

TEST(CApi, VersionAndNames) {
  EXPECT_GT(std::strlen(pdw_version()), 0u);
  EXPECT_STREQ(pdw_status_name(PDW_OK), "ok");
  EXPECT_STREQ(pdw_region_name(3), "B3");
}

TEST(CApi, ClassifySpecialTile) {
  pdw_classification c{};
  ASSERT_EQ(pdw_classify(6, kSpecialAlpha, 4 * kPi / 3, &c), PDW_OK);
  EXPECT_EQ(c.region, 3);
  EXPECT_EQ(c.multiplicity, 1);
  ASSERT_EQ(c.root_count, 1);
  EXPECT_EQ(c.branch[0], PDW_BRANCH_DOUBLE);
  EXPECT_NEAR(c.a[0], std::acos(1.0 / 3), 1e-9);
  EXPECT_NEAR(c.c1, -2.0 / 3, 1e-12);
  EXPECT_NEAR(c.c0, 1.0 / 9, 1e-12);
}

TEST(CApi, ErrorCodesAndMessages) {
  pdw_classification c{};
  EXPECT_EQ(pdw_classify(2, 1.0, 1.0, &c), PDW_ERR_DOMAIN);
  EXPECT_GT(std::strlen(pdw_last_error()), 0u);
  EXPECT_EQ(pdw_classify(6, kPi / 2, 1.0, &c), PDW_ERR_SINGULAR);
  EXPECT_EQ(pdw_classify(6, 1.0, 1.0, nullptr), PDW_ERR_DOMAIN);
  pdw_quad* q = nullptr;
  EXPECT_EQ(pdw_quad_build(6, kSpecialAlpha, 4 * kPi / 3, kPi / 4, &q), PDW_ERR_NOT_A_TILE);
  EXPECT_EQ(q, nullptr);
  pdw_tiling* t = nullptr;
  EXPECT_EQ(pdw_tiling_from_json("{", &t), PDW_ERR_PARSE);
  EXPECT_EQ(pdw_tiling_from_coords(6, 2.0, 2.0, &t), PDW_ERR_DOMAIN);
  EXPECT_NE(std::string(pdw_last_error()).find("A1"), std::string::npos);
  pdw_quad_free(nullptr);
  pdw_tiling_free(nullptr);
  pdw_string_free(nullptr);
  pdw_tiling_list_free(nullptr);
}

TEST(CApi, OracleAgrees) {
  double out[4];
  int count = 0;
  ASSERT_EQ(pdw_oracle_edge_lengths(6, 0.55 * kPi, 1.32 * kPi, out, 4, &count), PDW_OK);
  ASSERT_EQ(count, 2);
  pdw_classification c{};
  ASSERT_EQ(pdw_classify(6, 0.55 * kPi, 1.32 * kPi, &c), PDW_OK);
  ASSERT_EQ(c.root_count, 2);
  const double lo = std::min(c.a[0], c.a[1]), hi = std::max(c.a[0], c.a[1]);
  EXPECT_NEAR(out[0], lo, 1e-6);
  EXPECT_NEAR(out[1], hi, 1e-6);
  // A short buffer still reports the total.
  ASSERT_EQ(pdw_oracle_edge_lengths(6, 0.55 * kPi, 1.32 * kPi, out, 1, &count), PDW_OK);
  EXPECT_EQ(count, 2);
}

TEST(CApi, QuadTilingLifecycle) {
  pdw_quad* q = nullptr;
  ASSERT_EQ(pdw_quad_build(6, kSpecialAlpha, 4 * kPi / 3, std::acos(1.0 / 3), &q), PDW_OK);
  pdw_quad_info info{};
  ASSERT_EQ(pdw_quad_info_get(q, &info), PDW_OK);
  EXPECT_NEAR(info.b, std::acos(-5.0 / 9), 1e-9);
  EXPECT_NEAR(info.c, std::acos(1.0 / 3), 1e-9);
  EXPECT_NEAR(info.area, kPi / 3, 1e-9);
  EXPECT_NEAR(info.vertices[0][2], 1, 1e-15);

  pdw_tiling* t = nullptr;
  ASSERT_EQ(pdw_tiling_assemble(q, &t), PDW_OK);
  EXPECT_EQ(pdw_tiling_n(t), 6);
  pdw_verify_report rep{};
  ASSERT_EQ(pdw_tiling_verify(t, &rep), PDW_OK);
  EXPECT_TRUE(rep.ok);
  EXPECT_NEAR(rep.area_sum, 4 * kPi, 1e-9);

  pdw_isohedral_report iso{};
  ASSERT_EQ(pdw_tiling_isohedral(t, &iso), PDW_OK);
  EXPECT_TRUE(iso.isohedral);
  EXPECT_EQ(iso.automorphism_count, 24);

  pdw_axis axes[32];
  int count = 0, dihedral = 0;
  ASSERT_EQ(pdw_tiling_axes(t, axes, 32, &count, &dihedral), PDW_OK);
  EXPECT_EQ(dihedral, 1);
  EXPECT_GE(count, 7);

  double phi = 0, a = 0;
  int region = 0;
  ASSERT_EQ(pdw_tiling_coords(t, &phi, &a, &region), PDW_OK);
  EXPECT_NEAR(a, std::acos(1.0 / 3), 1e-9);
  EXPECT_EQ(region, 1);

  EXPECT_EQ(pdw_tiling_verify_tol(t, 0, &rep), PDW_ERR_DOMAIN);
  ASSERT_EQ(pdw_tiling_verify_tol(t, 1e-12, &rep), PDW_OK);
  EXPECT_EQ(pdw_tiling_axes_tol(t, -1, axes, 32, &count, &dihedral), PDW_ERR_DOMAIN);
  ASSERT_EQ(pdw_tiling_axes_tol(t, 1e-6, axes, 32, &count, &dihedral), PDW_OK);
  EXPECT_EQ(dihedral, 1);

  char* json = nullptr;
  ASSERT_EQ(pdw_tiling_to_json(t, &json), PDW_OK);
  pdw_tiling* back = nullptr;
  ASSERT_EQ(pdw_tiling_from_json(json, &back), PDW_OK);
  char* json2 = nullptr;
  ASSERT_EQ(pdw_tiling_to_json(back, &json2), PDW_OK);
  EXPECT_STREQ(json, json2);

  char* obj = nullptr;
  ASSERT_EQ(pdw_tiling_to_obj(t, 8, &obj), PDW_OK);
  EXPECT_EQ(std::string(obj).rfind("# ", 0), 0u);

  pdw_string_free(obj);
  pdw_string_free(json2);
  pdw_string_free(json);
  pdw_tiling_free(back);
  pdw_tiling_free(t);
  pdw_quad_free(q);
}

TEST(CApi, FromCoordsAndSearch) {
  pdw_tiling* t = nullptr;
  ASSERT_EQ(pdw_tiling_from_coords(4, 0.5, 0.7, &t), PDW_OK);
  double phi = 0, a = 0;
  int region = 0;
  ASSERT_EQ(pdw_tiling_coords(t, &phi, &a, &region), PDW_OK);
  EXPECT_NEAR(phi, 0.5, 1e-9);
  EXPECT_NEAR(a, 0.7, 1e-9);
  EXPECT_EQ(region, 2);
  pdw_tiling_free(t);

  pdw_quad* q = nullptr;
  ASSERT_EQ(pdw_quad_build(6, kSpecialAlpha, 4 * kPi / 3, std::acos(1.0 / 3), &q), PDW_OK);
  pdw_tiling_list* list = nullptr;
  ASSERT_EQ(pdw_search(q, 1, &list), PDW_OK);
  ASSERT_GE(pdw_tiling_list_size(list), 2u);
  EXPECT_EQ(pdw_tiling_list_reflected(list, 0), 0);
  EXPECT_EQ(pdw_tiling_list_at(list, pdw_tiling_list_size(list)), nullptr);
  pdw_verify_report rep{};
  for (size_t i = 0; i < pdw_tiling_list_size(list); ++i) {
    ASSERT_EQ(pdw_tiling_verify(pdw_tiling_list_at(list, i), &rep), PDW_OK);
    EXPECT_TRUE(rep.ok);
  }
  pdw_tiling_list_free(list);
  pdw_quad_free(q);
}

TEST(CApi, SpecialPair) {
  pdw_tiling *iso = nullptr, *non = nullptr;
  ASSERT_EQ(pdw_special_pair(&iso, &non), PDW_OK);
  pdw_isohedral_report r{};
  ASSERT_EQ(pdw_tiling_isohedral(iso, &r), PDW_OK);
  EXPECT_TRUE(r.isohedral);
  ASSERT_EQ(pdw_tiling_isohedral(non, &r), PDW_OK);
  EXPECT_FALSE(r.isohedral);
  EXPECT_GE(r.witness_from, 0);
  EXPECT_GE(r.witness_to, 0);
  pdw_tiling_free(iso);
  pdw_tiling_free(non);
}

TEST(CApi, TextOutputs) {
  char* s = nullptr;
  ASSERT_EQ(pdw_matchings_json(6, &s), PDW_OK);
  EXPECT_NE(std::string(s).find("\"count\": 8"), std::string::npos);
  pdw_string_free(s);
  ASSERT_EQ(pdw_phase_csv(6, 10, &s), PDW_OK);
  EXPECT_EQ(std::string(s).rfind("alpha,gamma,", 0), 0u);
  pdw_string_free(s);
  EXPECT_EQ(pdw_phase_csv(6, 1, &s), PDW_ERR_DOMAIN);
  EXPECT_EQ(pdw_matchings_json(5, &s), PDW_ERR_DOMAIN);
}

}  // namespace
