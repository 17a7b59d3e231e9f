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

#include "pdwtile/tiling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "pdwtile/errors.hpp"

namespace pdw {

using sph::kPi;
using sph::kTwoPi;
using sph::UnitVector;

FaceLabel Reflected(const FaceLabel& l) {
  return {{l.angles[0], l.angles[3], l.angles[2], l.angles[1]},
          {l.edges[3], l.edges[2], l.edges[1], l.edges[0]}};
}

LabelMatch MatchLabel(const FaceLabel& l, const FaceLabel& ref) {
  LabelMatch best{std::numeric_limits<double>::infinity(), false, 0};
  for (bool refl : {false, true}) {
    const FaceLabel c = refl ? Reflected(l) : l;
    for (int s = 0; s < 4; ++s) {
      double r = 0;
      for (int k = 0; k < 4; ++k) {
        r = std::max(r, std::abs(c.angles[(k + s) % 4] - ref.angles[k]));
        r = std::max(r, std::abs(c.edges[(k + s) % 4] - ref.edges[k]));
      }
      if (r < best.residual) best = {r, refl, s};
    }
  }
  return best;
}

FaceLabel LabelOf(const Quadrangle& q) { return {q.CornerAngles(), q.EdgeLengths()}; }

Labeling Tiling::ToLabeling() const {
  Labeling lab;
  lab.edge_length.assign(skeleton.num_edges(), std::numeric_limits<double>::quiet_NaN());
  lab.corner_angle.resize(skeleton.num_faces());
  for (int f = 0; f < skeleton.num_faces(); ++f) {
    lab.corner_angle[f] = labels[f].angles;
    const auto& fv = skeleton.face(f);
    for (int k = 0; k < 4; ++k) {
      const int e = skeleton.EdgeIndex(fv[k], fv[(k + 1) % 4]);
      if (std::isnan(lab.edge_length[e])) lab.edge_length[e] = labels[f].edges[k];
    }
  }
  return lab;
}

namespace {

// Standard wheel arrangement: the face (N, v_2i, v_2i+1, v_2i+2) and its image
// (S, v_2i+1, v_2i, v_2i-1) under the half-turn both carry `label` in
// corner order.
Tiling WheelTiling(int n, double a, double phi_prime, const FaceLabel& label) {
  Tiling t(n);
  const int F = 2 * n;
  t.positions.resize(F + 2);
  t.positions[kNorth] = UnitVector(0, 0, 1);
  t.positions[kSouth] = UnitVector(0, 0, -1);
  for (int i = 0; i < n; ++i) {
    const double lon = kTwoPi * i / n;
    t.positions[RimVertex(2 * i, F)] = sph::FromPolar(a, lon);
    t.positions[RimVertex(2 * i + 1, F)] = sph::FromPolar(kPi - a, lon + phi_prime);
  }
  t.labels.assign(F, label);
  t.reference = label;
  return t;
}

double MaxAbs(double acc, double x) { return std::max(acc, std::abs(x)); }

}  // namespace

Tiling Assemble(const Quadrangle& q) {
  const int n = q.params.n;
  if (std::abs(q.phi + q.phi_prime - kTwoPi / n) > 1e-10)
    throw DomainError("assemble: phi + phi' differs from 2pi/n");
  if (std::abs(EvalF(q.params, std::cos(q.a))) > kTileResidualTol)
    throw NotATile("assemble: edge length does not solve the tile quadratic");
  return WheelTiling(n, q.a, q.phi_prime, LabelOf(q));
}

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed; });
}

const VerifyCheck* VerifyReport::Find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

VerifyReport Verify(const Tiling& t, double tol) {
  const Skeleton& sk = t.skeleton;
  const double inf = std::numeric_limits<double>::infinity();
  VerifyReport rep;
  double edge_res = 0, realized_res = 0, congr_res = 0, min_straight = inf, area = 0;
  std::vector<double> vsum(sk.num_vertices(), 0.0);
  bool degenerate = false;

  for (int f = 0; f < sk.num_faces(); ++f) {
    const auto& fv = sk.face(f);
    std::array<UnitVector, 4> pts;
    for (int k = 0; k < 4; ++k) pts[k] = t.positions[fv[k]];
    for (int k = 0; k < 4; ++k)
      edge_res = MaxAbs(edge_res, sph::Distance(pts[k], pts[(k + 1) % 4]) - t.labels[f].edges[k]);
    std::vector<double> ang;
    try {
      ang = sph::InteriorAngles(pts);
    } catch (const DomainError&) {
      degenerate = true;
      continue;
    }
    for (int k = 0; k < 4; ++k) {
      realized_res = MaxAbs(realized_res, ang[k] - t.labels[f].angles[k]);
      vsum[fv[k]] += ang[k];
      min_straight = std::min(min_straight, std::abs(ang[k] - kPi));
      min_straight = std::min(min_straight, std::abs(t.labels[f].angles[k] - kPi));
    }
    area += sph::PolygonArea(pts, ang);
    congr_res = std::max(congr_res, MatchLabel(t.labels[f], t.reference).residual);
  }
  double sum_res = 0;
  for (double s : vsum) sum_res = MaxAbs(sum_res, s - kTwoPi);
  if (degenerate) realized_res = sum_res = inf;

  rep.area_sum = area;
  const double area_res = degenerate ? inf : std::abs(area - 4 * kPi);
  rep.checks = {
      {"edge_agreement", edge_res <= tol, edge_res},
      {"realized_angles", realized_res <= tol, realized_res},
      {"angle_sums", sum_res <= tol, sum_res},
      {"area", area_res <= tol, area_res},
      {"congruence", congr_res <= tol, congr_res},
      {"no_straight_angle", min_straight > tol, min_straight},
  };
  return rep;
}

int RegionOfCoords(int n, const Coords& c) {
  const double b = kTwoPi / n, h = kPi / 2;
  auto in = [](double x, double lo, double hi) { return x > lo && x < hi; };
  if (in(c.a, 0, h)) {
    if (in(c.phi, b - kPi, 0)) return 1;
    if (in(c.phi, 0, b)) return 2;
    if (in(c.phi, b, kPi)) return 3;
  } else if (in(c.a, h, kPi) && in(c.phi, 0, b)) {
    return 4;
  }
  return 0;
}

Coords ToCoords(const Tiling& t) {
  const int F = t.skeleton.num_faces();
  const auto& P = t.positions;
  return {sph::WrapPi(sph::CornerAngle(P[RimVertex(1, F)], P[kNorth], P[RimVertex(2, F)])),
          sph::Distance(P[kNorth], P[RimVertex(0, F)])};
}

Tiling FromCoords(int n, const Coords& c) {
  if (n < 3) throw DomainError("n must be at least 3");
  if (RegionOfCoords(n, c) == 0) {
    std::ostringstream os;
    os.precision(17);
    os << "(phi, a) = (" << c.phi << ", " << c.a << ") lies outside A_" << n
       << ": A1 = (2pi/n - pi, 0) x (0, pi/2), A2 = (0, 2pi/n) x (0, pi/2), "
          "A3 = (2pi/n, pi) x (0, pi/2), A4 = (0, 2pi/n) x (pi/2, pi) with 2pi/n = "
       << kTwoPi / n;
    throw DomainError(os.str());
  }
  // Measure the tile off the realized first face.
  Tiling t = WheelTiling(n, c.a, kTwoPi / n - c.phi, {});
  const auto& f0 = t.skeleton.face(0);
  std::array<UnitVector, 4> pts;
  for (int k = 0; k < 4; ++k) pts[k] = t.positions[f0[k]];
  FaceLabel l;
  const auto ang = sph::InteriorAngles(pts);
  for (int k = 0; k < 4; ++k) {
    l.angles[k] = ang[k];
    l.edges[k] = sph::Distance(pts[k], pts[(k + 1) % 4]);
  }
  t.labels.assign(2 * n, l);
  t.reference = l;
  return t;
}

IsohedralReport IsIsohedral(const Tiling& t) {
  const Skeleton& sk = t.skeleton;
  const auto auts = Automorphisms(sk);
  const Labeling lab = t.ToLabeling();
  IsohedralReport rep;
  rep.automorphism_count = static_cast<int>(auts.size());
  std::set<int> orbit;
  for (const auto& a : auts) {
    if (!IsLabelPreserving(sk, a, lab)) continue;
    ++rep.label_preserving_count;
    orbit.insert(a.MapFace(sk, 0));
  }
  rep.all_automorphisms_preserve = rep.label_preserving_count == rep.automorphism_count;
  rep.isohedral = static_cast<int>(orbit.size()) == sk.num_faces();
  if (!rep.isohedral) {
    rep.witness_from = 0;
    for (int f = 0; f < sk.num_faces(); ++f)
      if (!orbit.count(f)) { rep.witness_to = f; break; }
  }
  return rep;
}

namespace {

// Vertex permutation induced by rotation m, or empty if some vertex has no
// image within tol.
std::vector<int> InducedPermutation(const Tiling& t, const sph::Mat3& m, double tol) {
  const int V = t.skeleton.num_vertices();
  std::vector<int> perm(V, -1);
  std::vector<bool> used(V, false);
  for (int v = 0; v < V; ++v) {
    const sph::Vec3 img = m * t.positions[v].vec();
    for (int w = 0; w < V; ++w)
      if (!used[w] && sph::Norm(img - t.positions[w].vec()) < tol) {
        perm[v] = w;
        used[w] = true;
        break;
      }
    if (perm[v] < 0) return {};
  }
  return perm;
}

bool IsSkeletonAutomorphism(const Skeleton& sk, const std::vector<int>& perm) {
  for (const auto& [u, v] : sk.edges())
    if (!sk.Adjacent(perm[u], perm[v])) return false;
  return true;
}

}  // namespace

std::vector<Axis> DetectAxes(const Tiling& t, double tol) {
  const Skeleton& sk = t.skeleton;
  std::vector<std::pair<sph::Vec3, std::string>> cand;
  for (const auto& p : t.positions) cand.push_back({p.vec(), "vertex"});
  for (const auto& [u, v] : sk.edges())
    cand.push_back({t.positions[u].vec() + t.positions[v].vec(), "edge"});
  for (const auto& fv : sk.faces()) {
    sph::Vec3 s;
    for (int v : fv) s = s + t.positions[v].vec();
    cand.push_back({s, "face"});
  }

  const Labeling lab = t.ToLabeling();
  std::vector<Axis> out;
  for (const auto& [raw, kind] : cand) {
    if (sph::Norm(raw) < 1e-9) continue;
    const UnitVector u(raw);
    bool dup = false;
    for (const auto& ax : out) dup = dup || std::abs(sph::Dot(ax.dir, u)) > 1 - 1e-9;
    if (dup) continue;
    for (int k = 2 * t.n(); k >= 2; --k) {
      const auto perm = InducedPermutation(t, sph::Mat3::Rotation(u, kTwoPi / k), tol);
      if (perm.empty() || !IsSkeletonAutomorphism(sk, perm)) continue;
      if (!IsLabelPreserving(sk, Automorphism{perm, 1}, lab, tol)) continue;
      out.push_back({u, k, kind});
      break;
    }
  }
  return out;
}

bool HasDihedralAxes(const std::vector<Axis>& axes, int n, double tol) {
  for (const auto& p : axes) {
    if (p.order % n != 0) continue;
    int perpendicular = 0;
    for (const auto& q : axes)
      if (q.order % 2 == 0 && std::abs(sph::Dot(p.dir, q.dir)) < tol) ++perpendicular;
    if (perpendicular >= n) return true;
  }
  return false;
}

TileParams SpecialParams() {
  return {6, std::acos(-1 / (2 * std::sqrt(7.0))), 4 * kPi / 3};
}

Quadrangle SpecialTile() { return BuildQuadrangle(SpecialParams(), std::acos(1.0 / 3)); }

}  // namespace pdw
