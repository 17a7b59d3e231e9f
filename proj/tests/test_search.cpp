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


#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pdwtile/io.hpp"
#include "pdwtile/tiling.hpp"

#ifndef PDWTILE_FIXTURE_DIR
#error "PDWTILE_FIXTURE_DIR must be defined"
#endif

namespace {

using pdw::Tiling;
using pdw::TileParams;

constexpr double kPi = 3.14159265358979323846;

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// True if some skeleton automorphism carries every edge length and corner
// angle of x onto the matching edge and corner of y.
bool SameLabeling(const Tiling& x, const Tiling& y, double tol = 1e-7) {
  const pdw::Skeleton& sk = x.skeleton;
  const pdw::Labeling lx = x.ToLabeling(), ly = y.ToLabeling();
  for (const auto& s : pdw::Automorphisms(sk)) {
    bool ok = true;
    for (int e = 0; e < sk.num_edges() && ok; ++e)
      ok = std::abs(lx.edge_length[e] - ly.edge_length[s.MapEdge(sk, e)]) < tol;
    for (int f = 0; f < sk.num_faces() && ok; ++f) {
      const int g = s.MapFace(sk, f);
      for (int i = 0; i < 4 && ok; ++i) {
        const int v = sk.face(f)[i];
        ok = std::abs(lx.corner_angle[f][i] - ly.corner_angle[g][sk.CornerIndex(g, s(v))]) < tol;
      }
    }
    if (ok) return true;
  }
  return false;
}

TEST(Search, SpecialTileHasIsohedralAndNonIsohedralLayouts) {
  const pdw::Quadrangle q = pdw::SpecialTile();
  pdw::SearchStats stats;
  const auto layouts = pdw::ExhaustiveLayouts(q, true, &stats);
  ASSERT_GE(layouts.size(), 2u);
  EXPECT_EQ(stats.verified, stats.raw_solutions);
  const Tiling wheel = pdw::Assemble(q);
  int iso = 0, noniso = 0, wheel_class = 0;
  for (const auto& l : layouts) {
    EXPECT_TRUE(pdw::Verify(l.tiling).ok());
    if (pdw::IsIsohedral(l.tiling).isohedral) ++iso;
    else ++noniso;
    wheel_class += pdw::EquivalentTilings(l.tiling, wheel);
  }
  EXPECT_GE(iso, 1);
  EXPECT_GE(noniso, 1);
  EXPECT_EQ(wheel_class, 1);
  // Representatives are pairwise inequivalent.
  for (size_t i = 0; i < layouts.size(); ++i)
    for (size_t j = i + 1; j < layouts.size(); ++j)
      EXPECT_FALSE(pdw::EquivalentTilings(layouts[i].tiling, layouts[j].tiling)) << i << " " << j;
}

TEST(Search, ResultIsDeterministic) {
  const pdw::Quadrangle q = pdw::SpecialTile();
  const auto x = pdw::ExhaustiveLayouts(q, true), y = pdw::ExhaustiveLayouts(q, true);
  ASSERT_EQ(x.size(), y.size());
  for (size_t i = 0; i < x.size(); ++i) {
    EXPECT_EQ(x[i].reflected_count, y[i].reflected_count);
    EXPECT_EQ(pdw::TilingToJson(x[i].tiling), pdw::TilingToJson(y[i].tiling));
  }
}

TEST(Search, WithoutReflectionOnlyUnmirroredCopies) {
  const auto layouts = pdw::ExhaustiveLayouts(pdw::SpecialTile(), false);
  ASSERT_FALSE(layouts.empty());
  for (const auto& l : layouts) EXPECT_EQ(l.reflected_count, 0);
}

TEST(Search, SpecialPairMatchesGoldenFixture) {
  const auto [iso, noniso] = pdw::SpecialPair();
  EXPECT_EQ(iso.skeleton.num_faces(), 12);
  EXPECT_EQ(noniso.skeleton.num_faces(), 12);
  EXPECT_TRUE(pdw::Verify(iso).ok());
  EXPECT_TRUE(pdw::Verify(noniso).ok());
  EXPECT_TRUE(pdw::IsIsohedral(iso).isohedral);
  EXPECT_FALSE(pdw::IsIsohedral(noniso).isohedral);
  EXPECT_TRUE(pdw::HasDihedralAxes(pdw::DetectAxes(iso), 6));
  EXPECT_FALSE(pdw::HasDihedralAxes(pdw::DetectAxes(noniso), 6));

  const Tiling golden =
      pdw::TilingFromJson(ReadFile(std::string(PDWTILE_FIXTURE_DIR) + "/special_noniso.json"));
  EXPECT_TRUE(pdw::Verify(golden).ok());
  EXPECT_TRUE(pdw::EquivalentTilings(noniso, golden));
  EXPECT_FALSE(pdw::EquivalentTilings(iso, golden));
}

TEST(Search, EdgeSwapOnNonIsohedralLabelingIsNotPreserving) {
  const Tiling t =
      pdw::TilingFromJson(ReadFile(std::string(PDWTILE_FIXTURE_DIR) + "/special_noniso.json"));
  const pdw::Skeleton& sk = t.skeleton;
  const pdw::Labeling lab = t.ToLabeling();
  const double a = std::acos(1.0 / 3), b = std::acos(-5.0 / 9);
  int swapping = 0;
  for (const auto& s : pdw::Automorphisms(sk)) {
    bool maps_a_to_b = false;
    for (int e = 0; e < sk.num_edges(); ++e)
      maps_a_to_b = maps_a_to_b || (std::abs(lab.edge_length[e] - a) < 1e-9 &&
                                    std::abs(lab.edge_length[s.MapEdge(sk, e)] - b) < 1e-9);
    if (!maps_a_to_b) continue;
    ++swapping;
    EXPECT_FALSE(pdw::IsLabelPreserving(sk, s, lab));
  }
  EXPECT_GT(swapping, 0);
}

TEST(Search, SpecialPairTilesCarryTheExpectedData) {
  const auto [iso, noniso] = pdw::SpecialPair();
  const pdw::FaceLabel expect{
      {kPi / 3, std::acos(-1 / (2 * std::sqrt(7.0))), std::acos(5 / (2 * std::sqrt(7.0))),
       4 * kPi / 3},
      {std::acos(1.0 / 3), std::acos(-5.0 / 9), std::acos(1.0 / 3), std::acos(1.0 / 3)}};
  for (const Tiling* t : {&iso, &noniso})
    for (const auto& l : t->labels) EXPECT_LT(pdw::MatchLabel(l, expect).residual, 1e-9);
}

TEST(Search, MirrorSymmetricKiteHasOnlyTheWheelClass) {
  const TileParams p{6, 2 * kPi / 3, 2 * kPi / 3};
  const pdw::Quadrangle q = pdw::BuildQuadrangle(p, pdw::EdgeRoots(p).at(0));
  const auto layouts = pdw::ExhaustiveLayouts(q, true);
  ASSERT_EQ(layouts.size(), 1u);
  EXPECT_TRUE(pdw::EquivalentTilings(layouts[0].tiling, pdw::Assemble(q)));
}

TEST(Search, GenericTileLayoutsCarryTheWheelLabeling) {
  for (const TileParams& p :
       {TileParams{6, 0.55 * kPi, 1.32 * kPi}, TileParams{5, 0.6 * kPi, 0.7 * kPi},
        TileParams{4, 0.3 * kPi, 0.35 * kPi}}) {
    for (const auto& root : pdw::EdgeRoots(p)) {
      const pdw::Quadrangle q = pdw::BuildQuadrangle(p, root);
      const Tiling wheel = pdw::Assemble(q);
      const auto layouts = pdw::ExhaustiveLayouts(q, true);
      ASSERT_FALSE(layouts.empty());
      for (const auto& l : layouts)
        EXPECT_TRUE(SameLabeling(wheel, l.tiling))
            << "n=" << p.n << " alpha=" << p.alpha << " gamma=" << p.gamma;
    }
  }
}

}  // namespace
