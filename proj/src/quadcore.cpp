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

#include "pdwtile/quadcore.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pdwtile/errors.hpp"

namespace pdw {

using sph::kPi;
using sph::kTwoPi;

namespace {

double Cot(double x) { return std::cos(x) / std::sin(x); }

// Tolerance for checks on the realized tile.
constexpr double kBuildTol = 1e-7;

}  // namespace

void Validate(const TileParams& p) {
  if (p.n < 3) throw DomainError("n must be at least 3, got " + std::to_string(p.n));
  for (auto [name, v] : {std::pair{"alpha", p.alpha}, std::pair{"gamma", p.gamma}}) {
    if (!std::isfinite(v) || v <= kSingularGuard || v >= kTwoPi - kSingularGuard) {
      std::ostringstream os;
      os << name << " = " << v << " outside (0, 2pi)";
      throw DomainError(os.str());
    }
    if (std::abs(v - kPi / 2) < kSingularGuard || std::abs(v - kPi) < kSingularGuard) {
      std::ostringstream os;
      os << name << " = " << v << " is singular (pi/2 or pi)";
      throw SingularAngle(os.str());
    }
  }
}

Coeffs FCoeffs(const TileParams& p) {
  Validate(p);
  const double ca = Cot(p.alpha), cg = Cot(p.gamma);
  return {-Cot(kPi / p.n) * (ca + cg), -ca * cg};
}

double EvalF(const TileParams& p, double x) {
  const Coeffs c = FCoeffs(p);
  return x * x + c.c1 * x + c.c0;
}

double Discriminant(const TileParams& p) {
  Validate(p);
  const double ca = Cot(p.alpha), cg = Cot(p.gamma), t = std::tan(kPi / p.n);
  return cg * cg + 2 * (2 * t * t + 1) * ca * cg + ca * ca;
}

double AxisOfParabola(const TileParams& p) {
  Validate(p);
  return 0.5 * Cot(kPi / p.n) * (Cot(p.alpha) + Cot(p.gamma));
}

double Dgn(int n, double psi) {
  if (n < 3) throw DomainError("dgn: n must be at least 3");
  if (!(psi > kPi / 2 && psi < kPi)) throw DomainError("dgn: psi outside (pi/2, pi)");
  const double c = std::cos(kPi / n), s = std::sin(kPi / n);
  return kPi - std::atan(c * c / ((s + 1) * (s + 1)) * std::tan(psi));
}

double DgnTangencyAlpha(int n) { return 3 * kPi / 4 - kPi / (2 * n); }

std::string_view BranchName(Branch b) {
  switch (b) {
    case Branch::kMinus: return "minus";
    case Branch::kPlus: return "plus";
    case Branch::kDouble: return "double";
  }
  return "?";
}

std::string_view RegionName(Region r) {
  static constexpr std::string_view kNames[] = {"Outside", "B1", "B2", "B3", "B4",
                                                "B5",      "B6", "B7", "B8"};
  return kNames[static_cast<int>(r)];
}

std::vector<EdgeRoot> EdgeRoots(const TileParams& p) {
  const double disc = Discriminant(p);
  const double axis = AxisOfParabola(p);
  std::vector<EdgeRoot> out;
  auto push = [&](double x, Branch b) {
    if (std::abs(x) < 1 - kUnitRootGuard) out.push_back({std::acos(x), x, b});
  };
  if (std::abs(disc) <= kDoubleRootTol) {
    push(axis, Branch::kDouble);
  } else if (disc > 0) {
    const double h = 0.5 * Cot(kPi / p.n) * std::sqrt(disc);
    push(axis + h, Branch::kMinus);
    push(axis - h, Branch::kPlus);
  }
  return out;
}

namespace {

enum class Side { kNone, kOpen, kCurve, kTwo };

// Regions B2, B3, B4 for (x, y) = (alpha, gamma); B6..B8 use the swap.
Side HalfRegion(int n, double x, double y, double disc) {
  const double t = kPi / n;
  if (x > kPi / 2 && x < kPi && y > kPi && x + y < kTwoPi - t) return Side::kOpen;
  if (x > kPi / 2 && x < DgnTangencyAlpha(n) && y > kPi && y < 1.5 * kPi) {
    if (std::abs(disc) <= kDoubleRootTol) return Side::kCurve;
    if (y > kTwoPi - t - x && y < Dgn(n, x)) return Side::kTwo;
  }
  return Side::kNone;
}

}  // namespace

Classification Classify(const TileParams& p) {
  Classification out;
  out.coeffs = FCoeffs(p);
  out.discriminant = Discriminant(p);
  const double al = p.alpha, ga = p.gamma, t = kPi / p.n;

  Region tag = Region::kOutside;
  if (al > kPi / 2 && al < kPi && ga > kPi / 2 && ga < kPi && al + ga < kTwoPi - t) {
    tag = Region::kB1;
  } else if (al < kPi / 2 && ga < kPi / 2 && al + ga > t) {
    tag = Region::kB5;
  } else {
    static constexpr Region kLeft[] = {Region::kOutside, Region::kB2, Region::kB3, Region::kB4};
    static constexpr Region kRight[] = {Region::kOutside, Region::kB6, Region::kB7, Region::kB8};
    Side s = HalfRegion(p.n, al, ga, out.discriminant);
    if (s != Side::kNone) {
      tag = kLeft[static_cast<int>(s)];
    } else {
      s = HalfRegion(p.n, ga, al, out.discriminant);
      tag = kRight[static_cast<int>(s)];
    }
  }

  std::vector<Branch> wanted;
  switch (tag) {
    case Region::kB1: wanted = {Branch::kMinus}; break;
    case Region::kB2: case Region::kB5: case Region::kB6: wanted = {Branch::kPlus}; break;
    case Region::kB3: case Region::kB7: wanted = {Branch::kDouble}; break;
    case Region::kB4: case Region::kB8: wanted = {Branch::kMinus, Branch::kPlus}; break;
    case Region::kOutside: break;
  }
  out.region = {tag, static_cast<int>(wanted.size())};
  for (const EdgeRoot& r : EdgeRoots(p))
    if (std::find(wanted.begin(), wanted.end(), r.branch) != wanted.end()) out.roots.push_back(r);
  return out;
}

std::array<double, 4> Quadrangle::CornerAngles() const {
  return {beta(), alpha(), delta(), gamma()};
}

std::array<double, 4> Quadrangle::EdgeLengths() const { return {a, b, c, a}; }

namespace {

Quadrangle Construct(const TileParams& p, double a, Branch branch) {
  using sph::UnitVector;
  Quadrangle q;
  q.params = p;
  q.a = a;
  q.branch = branch;
  q.N = UnitVector(0, 0, 1);
  q.v0 = sph::FromPolar(a, 0);
  q.v2 = sph::FromPolar(a, p.beta());

  // Bend the meridians at v0 and v2 by the corner angles; v1 is where the
  // two great circles meet ahead of both rays.
  const sph::Vec3 t0 = sph::RotateTangent(q.v0, sph::TangentToward(q.v0, q.N), -p.alpha);
  const sph::Vec3 t2 = sph::RotateTangent(q.v2, sph::TangentToward(q.v2, q.N), p.gamma);
  const sph::Vec3 meet = sph::Cross(sph::Cross(q.v0, t0), sph::Cross(q.v2, t2));
  if (sph::Norm(meet) < 1e-12) throw DegenerateError("bending great circles coincide");
  UnitVector v1(meet);
  if (sph::Dot(v1, t0) < 0) v1 = -v1;
  if (sph::Dot(v1, t2) <= 0)
    throw NotATile("construction does not close: rays from v0 and v2 do not meet");
  q.v1 = v1;

  std::ostringstream why;
  const double closure = std::abs(sph::Distance(q.N, q.v1) - (kPi - a));
  if (closure > kBuildTol) why << "distance(N, v1) misses pi - a by " << closure << "; ";
  const auto ccw = q.Vertices();
  std::array<double, 4> measured;
  try {
    auto angles = sph::InteriorAngles(ccw);
    std::copy(angles.begin(), angles.end(), measured.begin());
  } catch (const DomainError&) {
    throw NotATile("construction collapses a corner");
  }
  const auto expected = q.CornerAngles();
  for (int k = 0; k < 4; ++k)
    if (std::abs(measured[k] - expected[k]) > kBuildTol)
      why << "corner " << k << " measures " << measured[k] << " not " << expected[k] << "; ";
  if (sph::ArcsCross(q.N, q.v0, q.v1, q.v2) || sph::ArcsCross(q.v0, q.v1, q.v2, q.N))
    why << "edges cross; ";
  if (!why.str().empty()) throw NotATile("construction does not close: " + why.str());

  q.b = sph::Distance(q.v0, q.v1);
  q.c = sph::Distance(q.v1, q.v2);

  q.phi = 2 * std::atan(-std::tan(p.gamma) * std::cos(a));
  q.phi_prime = p.beta() - q.phi;
  const double lon_v1 = std::atan2(q.v1.y(), q.v1.x());
  if (std::abs(sph::WrapPi(lon_v1 - q.phi_prime)) > kBuildTol)
    throw DegenerateError("longitude of v1 disagrees with phi'");
  return q;
}

}  // namespace

Quadrangle BuildQuadrangle(const TileParams& p, double a) {
  Validate(p);
  if (!(a > 0 && a < kPi)) throw DomainError("edge length a outside (0, pi)");
  if (std::abs(a - kPi / 2) < kSingularGuard) throw DomainError("edge length a = pi/2");
  const double x = std::cos(a);
  const double residual = EvalF(p, x);
  if (std::abs(residual) > kTileResidualTol) {
    std::ostringstream os;
    os << "f(cos a) = " << residual << " is not zero";
    throw NotATile(os.str());
  }
  // Snap to the exact root: near a double root the residual test admits a
  // wide band of a.
  const auto roots = EdgeRoots(p);
  const EdgeRoot* best = nullptr;
  for (const EdgeRoot& r : roots)
    if (!best || std::abs(r.x - x) < std::abs(best->x - x)) best = &r;
  if (best) return Construct(p, best->a, best->branch);
  const Branch b = x >= AxisOfParabola(p) ? Branch::kMinus : Branch::kPlus;
  return Construct(p, a, b);
}

Quadrangle BuildQuadrangle(const TileParams& p, const EdgeRoot& root) {
  Validate(p);
  return Construct(p, root.a, root.branch);
}

}  // namespace pdw
