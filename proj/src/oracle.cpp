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

// Brute-force edge-length finder. Uses only the geometric construction:
// lay N-v0 and N-v2 of length a at longitudes 0 and beta, bend at alpha and
// gamma, and look for a where the meeting point v1 lands at distance pi - a
// from N. No part of the tile quadratic is used.

#include <algorithm>
#include <cmath>
#include <vector>

#include "pdwtile/errors.hpp"
#include "pdwtile/quadcore.hpp"

namespace pdw {

using sph::kPi;
using sph::kTwoPi;

namespace {

constexpr int kGrid = 32768;
constexpr double kStep = kPi / kGrid;
constexpr double kOracleTol = 1e-6;

struct Sample {
  double r = 0;     // P_z + cos a; zero when the tile closes
  bool ok = false;  // meeting point lies ahead of both rays
};

class Closure {
 public:
  explicit Closure(const TileParams& p)
      : sal_(std::sin(p.alpha)), cal_(std::cos(p.alpha)), sga_(std::sin(p.gamma)),
        cga_(std::cos(p.gamma)), sb_(std::sin(p.beta())), cb_(std::cos(p.beta())) {}

  Sample At(double ca, double sa, sph::Vec3* point = nullptr) const {
    // Great-circle normals and forward tangents at v0 and (before the
    // rotation by beta) v2, in closed form.
    const sph::Vec3 n0{-ca * sal_, -cal_, sa * sal_};
    const sph::Vec3 t0{-cal_ * ca, sal_, cal_ * sa};
    const sph::Vec3 m{ca * sga_, -cga_, -sa * sga_};
    const sph::Vec3 u{-cga_ * ca, -sga_, cga_ * sa};
    const sph::Vec3 n2{cb_ * m.x - sb_ * m.y, sb_ * m.x + cb_ * m.y, m.z};
    const sph::Vec3 t2{cb_ * u.x - sb_ * u.y, sb_ * u.x + cb_ * u.y, u.z};
    sph::Vec3 P = sph::Cross(n0, n2);
    const double len = sph::Norm(P);
    if (len < 1e-14) return {};
    const double s0 = sph::Dot(P, t0);
    if (s0 == 0) return {};
    P = P * ((s0 > 0 ? 1.0 : -1.0) / len);
    if (point) *point = P;
    return {P.z + ca, sph::Dot(P, t2) > 0};
  }

  Sample At(double a, sph::Vec3* point = nullptr) const {
    return At(std::cos(a), std::sin(a), point);
  }

 private:
  double sal_, cal_, sga_, cga_, sb_, cb_;
};

const std::vector<std::pair<double, double>>& GridTrig() {
  static const std::vector<std::pair<double, double>> table = [] {
    std::vector<std::pair<double, double>> t(kGrid);
    for (int k = 0; k < kGrid; ++k) {
      const double a = (k + 0.5) * kStep;
      t[k] = {std::cos(a), std::sin(a)};
    }
    return t;
  }();
  return table;
}

double GridA(int k) { return (k + 0.5) * kStep; }

double Bisect(const Closure& cl, double lo, double hi, double r_lo) {
  for (int it = 0; it < 80 && hi - lo > 1e-16; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double rm = cl.At(mid).r;
    if ((rm > 0) == (r_lo > 0)) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

// Minimizer of s * r on [lo, hi] by golden section.
double GoldenMin(const Closure& cl, double lo, double hi, double s) {
  const double g = 0.5 * (std::sqrt(5.0) - 1);
  double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
  double f1 = s * cl.At(x1).r, f2 = s * cl.At(x2).r;
  for (int it = 0; it < 100 && hi - lo > 1e-15; ++it) {
    if (f1 < f2) {
      hi = x2; x2 = x1; f2 = f1;
      x1 = hi - g * (hi - lo); f1 = s * cl.At(x1).r;
    } else {
      lo = x1; x1 = x2; f1 = f2;
      x2 = lo + g * (hi - lo); f2 = s * cl.At(x2).r;
    }
  }
  return 0.5 * (lo + hi);
}

bool ValidTile(const TileParams& p, const Closure& cl, double a) {
  if (a < kOracleTol || a > kPi - kOracleTol) return false;
  sph::Vec3 P;
  if (!cl.At(a, &P).ok) return false;
  const sph::UnitVector N(0, 0, 1), v0 = sph::FromPolar(a, 0), v2 = sph::FromPolar(a, p.beta());
  const sph::UnitVector v1(P);
  if (std::abs(sph::Distance(N, v1) - (kPi - a)) > kOracleTol) return false;
  try {
    // The angle at v1 must be the one forced by the angle sum, not its
    // reflex complement.
    if (std::abs(sph::CornerAngle(v2, v1, v0) - (kTwoPi - p.alpha - p.gamma)) > kOracleTol)
      return false;
  } catch (const DomainError&) {
    return false;
  }
  return !sph::ArcsCross(N, v0, v1, v2) && !sph::ArcsCross(v0, v1, v2, N);
}

}  // namespace

std::vector<double> OracleEdgeLengths(const TileParams& p) {
  const Closure cl(p);
  const auto& trig = GridTrig();
  std::vector<Sample> s(kGrid);
  for (int k = 0; k < kGrid; ++k) s[k] = cl.At(trig[k].first, trig[k].second);

  std::vector<double> cand;
  for (int k = 0; k + 1 < kGrid; ++k) {
    if (!s[k].ok || !s[k + 1].ok) continue;
    if ((s[k].r > 0) != (s[k + 1].r > 0)) cand.push_back(Bisect(cl, GridA(k), GridA(k + 1), s[k].r));
  }
  // Tangential contacts and root pairs closer than the grid step show up as
  // a local extremum of |r| without a sign change.
  for (int k = 1; k + 1 < kGrid; ++k) {
    const Sample &l = s[k - 1], &c = s[k], &r = s[k + 1];
    if (!l.ok || !c.ok || !r.ok) continue;
    if ((l.r > 0) != (c.r > 0) || (c.r > 0) != (r.r > 0)) continue;
    if (std::abs(c.r) > 1e-3 || std::abs(c.r) > std::abs(l.r) || std::abs(c.r) > std::abs(r.r))
      continue;
    const double sign = c.r > 0 ? 1.0 : -1.0;
    const double lo = GridA(k - 1), hi = GridA(k + 1);
    const double am = GoldenMin(cl, lo, hi, sign);
    const double fm = sign * cl.At(am).r;
    if (fm < -1e-14) {
      cand.push_back(Bisect(cl, lo, am, l.r));
      cand.push_back(Bisect(cl, am, hi, -sign));
    } else if (fm <= 1e-12) {
      cand.push_back(am);
    }
  }

  std::vector<double> out;
  for (double a : cand)
    if (ValidTile(p, cl, a)) out.push_back(a);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(),
                        [](double x, double y) { return std::abs(x - y) < 1e-7; }),
            out.end());
  return out;
}

}  // namespace pdw
