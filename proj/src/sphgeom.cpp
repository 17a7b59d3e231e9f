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

#include "pdwtile/sphgeom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "pdwtile/errors.hpp"

namespace pdw::sph {

namespace {

constexpr double kDegenerate = 1e-12;

double ClampedAcos(double x) { return std::acos(std::clamp(x, -1.0, 1.0)); }

}  // namespace

UnitVector::UnitVector(const Vec3& v) {
  const double n2 = Dot(v, v);
  if (!(n2 > 1e-300)) throw DomainError("UnitVector: zero vector");
  // Already unit to rounding: keep the input bits so text round trips are exact.
  if (std::abs(n2 - 1) <= 4 * std::numeric_limits<double>::epsilon()) {
    v_ = v;
    return;
  }
  v_ = v * (1.0 / std::sqrt(n2));
}

Mat3 Mat3::FromColumns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
  Mat3 r;
  r.m = {c0.x, c1.x, c2.x, c0.y, c1.y, c2.y, c0.z, c1.z, c2.z};
  return r;
}

Mat3 Mat3::Rotation(const UnitVector& axis, double angle) {
  const double c = std::cos(angle), s = std::sin(angle), t = 1 - c;
  const double x = axis.x(), y = axis.y(), z = axis.z();
  Mat3 r;
  r.m = {t * x * x + c,     t * x * y - s * z, t * x * z + s * y,
         t * x * y + s * z, t * y * y + c,     t * y * z - s * x,
         t * x * z - s * y, t * y * z + s * x, t * z * z + c};
  return r;
}

Vec3 Mat3::operator*(const Vec3& v) const {
  return {m[0] * v.x + m[1] * v.y + m[2] * v.z, m[3] * v.x + m[4] * v.y + m[5] * v.z,
          m[6] * v.x + m[7] * v.y + m[8] * v.z};
}

UnitVector Mat3::operator*(const UnitVector& v) const { return UnitVector(*this * v.vec()); }

Mat3 Mat3::operator*(const Mat3& o) const {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0;
      for (int k = 0; k < 3; ++k) s += m[i * 3 + k] * o.m[k * 3 + j];
      r.m[i * 3 + j] = s;
    }
  return r;
}

Mat3 Mat3::Transposed() const {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i * 3 + j] = m[j * 3 + i];
  return r;
}

double Mat3::Determinant() const {
  return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
         m[2] * (m[3] * m[7] - m[4] * m[6]);
}

namespace {

Mat3 FrameOf(const UnitVector& p, const UnitVector& q) {
  Vec3 e2 = q.vec() - p.vec() * Dot(p, q);
  double len = Norm(e2);
  if (len < kDegenerate) throw DegenerateError("RotationTaking: parallel points");
  e2 = e2 * (1.0 / len);
  return Mat3::FromColumns(p.vec(), e2, Cross(p.vec(), e2));
}

}  // namespace

Mat3 RotationTaking(const UnitVector& p, const UnitVector& q, const UnitVector& u,
                    const UnitVector& v) {
  return FrameOf(u, v) * FrameOf(p, q).Transposed();
}

UnitVector FromPolar(double colatitude, double longitude) {
  if (!(colatitude >= 0.0 && colatitude <= kPi))
    throw DomainError("FromPolar: colatitude " + std::to_string(colatitude) +
                      " outside [0, pi]");
  const double s = std::sin(colatitude);
  return UnitVector(s * std::cos(longitude), s * std::sin(longitude), std::cos(colatitude));
}

double Distance(const UnitVector& p, const UnitVector& q) {
  // atan2 keeps full precision near 0 and pi, where acos of a clamped dot
  // product loses half the digits.
  return std::atan2(Norm(Cross(p, q)), Dot(p, q));
}

Vec3 TangentToward(const UnitVector& from, const UnitVector& to) {
  Vec3 t = to.vec() - from.vec() * Dot(from, to);
  double len = Norm(t);
  if (len < kDegenerate) throw DomainError("TangentToward: coincident or antipodal points");
  return t * (1.0 / len);
}

UnitVector Travel(const UnitVector& from, const Vec3& dir, double length) {
  return UnitVector(from.vec() * std::cos(length) + dir * std::sin(length));
}

Vec3 RotateTangent(const UnitVector& at, const Vec3& t, double angle) {
  return t * std::cos(angle) + Cross(at.vec(), t) * std::sin(angle);
}

double WrapTwoPi(double angle) {
  double r = std::fmod(angle, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (r >= kTwoPi) r -= kTwoPi;
  return r;
}

double WrapPi(double angle) {
  double r = WrapTwoPi(angle + kPi) - kPi;
  return r;
}

double CornerAngle(const UnitVector& p, const UnitVector& q, const UnitVector& r) {
  if (Norm(Cross(p, q)) < kDegenerate || Norm(Cross(r, q)) < kDegenerate)
    throw DomainError("CornerAngle: point coincides with or is antipodal to the corner");
  const Vec3 t1 = p.vec() - q.vec() * Dot(p, q);
  const Vec3 t2 = r.vec() - q.vec() * Dot(r, q);
  return WrapTwoPi(std::atan2(Dot(q, Cross(t1, t2)), Dot(t1, t2)));
}

double LongitudeAbout(const UnitVector& pole, const UnitVector& ref, const UnitVector& x) {
  return WrapPi(CornerAngle(ref, pole, x));
}

std::vector<double> InteriorAngles(std::span<const UnitVector> ccw) {
  const size_t k = ccw.size();
  std::vector<double> out(k);
  for (size_t i = 0; i < k; ++i)
    out[i] = CornerAngle(ccw[(i + 1) % k], ccw[i], ccw[(i + k - 1) % k]);
  return out;
}

bool ArcsCross(const UnitVector& p1, const UnitVector& p2, const UnitVector& q1,
               const UnitVector& q2) {
  const Vec3 n1 = Cross(p1, p2), n2 = Cross(q1, q2);
  const Vec3 d = Cross(n1, n2);
  if (Norm(d) < kDegenerate) return false;
  const Vec3 x = d * (1.0 / Norm(d));
  auto on_arc = [](const Vec3& x, const Vec3& a, const Vec3& b, const Vec3& n) {
    return Dot(Cross(a, x), n) > 0 && Dot(Cross(x, b), n) > 0;
  };
  for (const Vec3& c : {x, -x})
    if (on_arc(c, p1, p2, n1) && on_arc(c, q1, q2, n2)) return true;
  return false;
}

SphericalTriangle TriangleFromAngles(double A, double B, double C) {
  for (double t : {A, B, C})
    if (!(t > 0 && t < kPi)) throw NoSuchTriangle("0 < A, B, C < pi");
  if (!(A + B + C > kPi)) throw NoSuchTriangle("A + B + C > pi");
  if (!(-A + B + C < kPi)) throw NoSuchTriangle("-A + B + C < pi");
  if (!(A - B + C < kPi)) throw NoSuchTriangle("A - B + C < pi");
  if (!(A + B - C < kPi)) throw NoSuchTriangle("A + B - C < pi");
  // Dual cosine law: cos A = -cos B cos C + sin B sin C cos a.
  auto side = [](double X, double Y, double Z) {
    return ClampedAcos((std::cos(X) + std::cos(Y) * std::cos(Z)) / (std::sin(Y) * std::sin(Z)));
  };
  return {A, B, C, side(A, B, C), side(B, C, A), side(C, A, B)};
}

double SideFromSidesAndAngle(double b, double c, double A) {
  // Haversine form of cos a = cos b cos c + sin b sin c cos A; accurate for
  // small sides.
  const double h = std::sin((b - c) / 2) * std::sin((b - c) / 2) +
                   std::sin(b) * std::sin(c) * std::sin(A / 2) * std::sin(A / 2);
  return 2 * std::asin(std::sqrt(std::clamp(h, 0.0, 1.0)));
}

double CosineLawResidual(const SphericalTriangle& t) {
  auto r = [](double a, double b, double c, double A) {
    return std::abs(std::cos(a) - (std::cos(b) * std::cos(c) + std::sin(b) * std::sin(c) * std::cos(A)));
  };
  return std::max({r(t.a, t.b, t.c, t.A), r(t.b, t.c, t.a, t.B), r(t.c, t.a, t.b, t.C)});
}

double DualCosineLawResidual(const SphericalTriangle& t) {
  auto r = [](double A, double B, double C, double a) {
    return std::abs(std::cos(A) - (-std::cos(B) * std::cos(C) + std::sin(B) * std::sin(C) * std::cos(a)));
  };
  return std::max({r(t.A, t.B, t.C, t.a), r(t.B, t.C, t.A, t.b), r(t.C, t.A, t.B, t.c)});
}

double PolygonArea(std::span<const UnitVector> vertices, std::span<const double> interior_angles) {
  if (vertices.size() < 3) throw DomainError("PolygonArea: fewer than 3 vertices");
  if (vertices.size() != interior_angles.size())
    throw DomainError("PolygonArea: vertex and angle counts differ");
  double sum = 0;
  for (double a : interior_angles) sum += a;
  return sum - static_cast<double>(vertices.size() - 2) * kPi;
}

}  // namespace pdw::sph
