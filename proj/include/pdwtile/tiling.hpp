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

// Realized tilings over pseudo-double wheels: assembly, verification,
// (phi, a) coordinates, isohedrality and exhaustive layout search.

#ifndef PDWTILE_TILING_HPP_
#define PDWTILE_TILING_HPP_

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "pdwtile/pdwgraph.hpp"
#include "pdwtile/quadcore.hpp"
#include "pdwtile/sphgeom.hpp"

namespace pdw {

// Corner angles of a face in its counterclockwise corner order, and the
// length of the edge leaving each corner toward the next one.
struct FaceLabel {
  std::array<double, 4> angles{};
  std::array<double, 4> edges{};
};

// The same tile traversed clockwise.
FaceLabel Reflected(const FaceLabel& l);

// Best alignment of `l` with `ref` over cyclic shifts, direct or reflected.
struct LabelMatch {
  double residual = 0;  // max absolute difference at the best alignment
  bool reflected = false;
  int shift = 0;
};
LabelMatch MatchLabel(const FaceLabel& l, const FaceLabel& ref);

FaceLabel LabelOf(const Quadrangle& q);

struct Tiling {
  explicit Tiling(int n) : skeleton(2 * n) {}

  int n() const { return skeleton.n(); }
  Labeling ToLabeling() const;

  Skeleton skeleton;
  std::vector<sph::UnitVector> positions;  // by vertex id
  std::vector<FaceLabel> labels;           // by face
  FaceLabel reference;                     // the prototile
};

// 2n copies of q arranged with N at the north pole, v_2i at colatitude a
// and longitude 2pi i/n, v_2i+1 at colatitude pi - a and longitude
// 2pi i/n + phi'.
Tiling Assemble(const Quadrangle& q);

struct VerifyCheck {
  std::string name;
  bool passed = false;
  double residual = 0;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  double area_sum = 0;
  bool ok() const;
  const VerifyCheck* Find(const std::string& name) const;
};

// Checks, at tolerance 1e-9: edge_agreement, realized_angles, angle_sums,
// area, congruence, no_straight_angle.
VerifyReport Verify(const Tiling& t, double tol = 1e-9);

struct Coords {
  double phi = 0;
  double a = 0;
};

// 1..4 for the open rectangles A1..A4, 0 outside.
int RegionOfCoords(int n, const Coords& c);

// phi = longitude(v2) - longitude(v1), a = distance(N, v0).
Coords ToCoords(const Tiling& t);

// Throws DomainError naming the rectangle bounds if c lies outside A_n.
Tiling FromCoords(int n, const Coords& c);

struct IsohedralReport {
  // Decision: the label-preserving automorphisms act transitively on faces.
  bool isohedral = false;
  // Whether every graph automorphism preserves the labels.
  bool all_automorphisms_preserve = false;
  int automorphism_count = 0;
  int label_preserving_count = 0;
  // Faces with no label-preserving automorphism between them; -1 if none.
  int witness_from = -1;
  int witness_to = -1;
};

IsohedralReport IsIsohedral(const Tiling& t);

struct Axis {
  sph::UnitVector dir;
  int order = 1;
  std::string through;  // "vertex", "edge" or "face"
};

// Rotation axes carrying positions and labels onto themselves within tol;
// the largest order per axis.
std::vector<Axis> DetectAxes(const Tiling& t, double tol = 1e-7);

// An axis of order divisible by n plus n axes of even order perpendicular
// to it.
bool HasDihedralAxes(const std::vector<Axis>& axes, int n, double tol = 1e-7);

struct Placement {
  bool mirror = false;
  int rotation = 0;
};

struct Layout {
  Tiling tiling;
  std::vector<Placement> placements;  // by face
  int reflected_count = 0;
};

struct SearchStats {
  long raw_solutions = 0;
  long verified = 0;
  long nodes = 0;
};

// Every edge-to-edge tiling of the 2n-face pseudo-double wheel by copies
// of q (optionally mirrored), up to skeleton automorphism and rotation.
// Ordered by reflected tile count, then placement sequence.
std::vector<Layout> ExhaustiveLayouts(const Quadrangle& q, bool allow_reflection,
                                      SearchStats* stats = nullptr);

// True if some skeleton automorphism and proper rotation carry x onto y.
bool EquivalentTilings(const Tiling& x, const Tiling& y, double tol = 1e-6);

// n = 6, alpha = arccos(-1/(2 sqrt 7)), gamma = 4pi/3, a = arccos(1/3).
TileParams SpecialParams();
Quadrangle SpecialTile();

// The isohedral and the non-isohedral tiling by the double-root tile.
// Throws SearchFailure if the search does not produce both.
std::pair<Tiling, Tiling> SpecialPair();

}  // namespace pdw

#endif  // PDWTILE_TILING_HPP_
