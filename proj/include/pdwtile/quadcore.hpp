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

// Tile algebra for quadrangles with angles (alpha, 2pi/n, gamma, delta)
// that tile the sphere over a pseudo-double wheel.
//
// The tile ABCD has its beta corner at the north pole N, two meridian edges
// N-v0 and N-v2 of length a, and its far corner v1 at distance pi - a from
// N. An edge length a admits such a tile iff cos(a) is a root of the monic
// quadratic
//
//   f(x) = x^2 + c1 x + c0,
//   c1 = -cot(pi/n) (cot alpha + cot gamma),  c0 = -cot alpha cot gamma.

#ifndef PDWTILE_QUADCORE_HPP_
#define PDWTILE_QUADCORE_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "pdwtile/sphgeom.hpp"

namespace pdw {

// Angles within this distance of pi/2 or pi are rejected.
inline constexpr double kSingularGuard = 1e-9;
// |discriminant| at or below this counts as a double root.
inline constexpr double kDoubleRootTol = 1e-10;
// Discriminant below this has no real root.
inline constexpr double kNegativeDiscriminantTol = 1e-9;
// Roots with |x| >= 1 - this are degenerate (a = 0 or pi).
inline constexpr double kUnitRootGuard = 1e-12;
// |f(cos a)| above this means a is not an edge length of a tile.
inline constexpr double kTileResidualTol = 1e-8;

struct TileParams {
  int n = 0;
  double alpha = 0;
  double gamma = 0;

  double beta() const { return sph::kTwoPi / n; }
  double delta() const { return sph::kTwoPi - alpha - gamma; }
  TileParams Swapped() const { return {n, gamma, alpha}; }
};

// Throws DomainError for n < 3 or angles outside (0, 2pi), SingularAngle for
// angles within kSingularGuard of pi/2 or pi.
void Validate(const TileParams& p);

struct Coeffs {
  double c1 = 0;
  double c0 = 0;
};

Coeffs FCoeffs(const TileParams& p);
double EvalF(const TileParams& p, double x);
double Discriminant(const TileParams& p);
double AxisOfParabola(const TileParams& p);

// Degeneracy curve on (pi/2, pi); values in (pi, 3pi/2).
double Dgn(int n, double psi);
// Tangency abscissa 3pi/4 - pi/(2n) of the degeneracy curve.
double DgnTangencyAlpha(int n);

enum class Branch { kMinus, kPlus, kDouble };
std::string_view BranchName(Branch b);

struct EdgeRoot {
  double a = 0;  // edge length, arccos(x)
  double x = 0;  // root of f
  Branch branch = Branch::kMinus;
};

// Roots of f in (-1 + guard, 1 - guard), minus branch first.
std::vector<EdgeRoot> EdgeRoots(const TileParams& p);

enum class Region { kOutside = 0, kB1, kB2, kB3, kB4, kB5, kB6, kB7, kB8 };
std::string_view RegionName(Region r);

struct RegionId {
  Region tag = Region::kOutside;
  int multiplicity = 0;
};

struct Classification {
  RegionId region;
  // Admissible edge lengths; size equals region.multiplicity unless a root
  // falls inside the degenerate guard band.
  std::vector<EdgeRoot> roots;
  double discriminant = 0;
  Coeffs coeffs;
};

Classification Classify(const TileParams& p);

struct Quadrangle {
  TileParams params;
  double a = 0, b = 0, c = 0;
  double phi = 0, phi_prime = 0;
  Branch branch = Branch::kMinus;
  // Counterclockwise corners N, v0, v1, v2 with angles beta, alpha, delta,
  // gamma and following edges a, b, c, a.
  sph::UnitVector N, v0, v1, v2;

  double alpha() const { return params.alpha; }
  double beta() const { return params.beta(); }
  double gamma() const { return params.gamma; }
  double delta() const { return params.delta(); }
  // Corner angles in vertex order (beta, alpha, delta, gamma).
  std::array<double, 4> CornerAngles() const;
  // Edge lengths following each corner: (a, b, c, a).
  std::array<double, 4> EdgeLengths() const;
  std::array<sph::UnitVector, 4> Vertices() const { return {N, v0, v1, v2}; }
};

// Realizes the tile for edge length a. Throws NotATile if a does not solve
// the quadratic or the construction does not close, DegenerateError if the
// bending great circles coincide.
Quadrangle BuildQuadrangle(const TileParams& p, double a);

// Same, labelling the branch explicitly.
Quadrangle BuildQuadrangle(const TileParams& p, const EdgeRoot& root);

// Edge lengths found by direct geometric construction on a dense grid of a,
// independent of the quadratic. Step is pi/32768.
std::vector<double> OracleEdgeLengths(const TileParams& p);

}  // namespace pdw

#endif  // PDWTILE_QUADCORE_HPP_
