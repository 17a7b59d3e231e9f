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

// Spherical trigonometry kernel on the unit sphere.
//
// Orientation convention: the sphere is oriented counterclockwise as seen
// from outside (right-handed about the outward normal). corner_angle(P, Q, R)
// is the rotation from the geodesic direction Q->P to the direction Q->R in
// that orientation, so the interior angle at Q of a counterclockwise polygon
// (..., prev, Q, next, ...) is corner_angle(next, Q, prev).

#ifndef PDWTILE_SPHGEOM_HPP_
#define PDWTILE_SPHGEOM_HPP_

#include <array>
#include <cmath>
#include <numbers>
#include <span>
#include <vector>

namespace pdw::sph {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Default absolute tolerance for angle comparisons.
inline constexpr double kAngleTol = 1e-9;

struct Vec3 {
  double x = 0, y = 0, z = 0;

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  friend constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }
  constexpr double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

constexpr double Dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 Cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double Norm(const Vec3& a) { return std::sqrt(Dot(a, a)); }

// Point on the unit sphere. Construction normalizes; the invariant
// |p| = 1 holds to rounding.
class UnitVector {
 public:
  UnitVector() : v_{0, 0, 1} {}
  // Throws DomainError for a (near) zero vector.
  explicit UnitVector(const Vec3& v);
  UnitVector(double x, double y, double z) : UnitVector(Vec3{x, y, z}) {}

  double x() const { return v_.x; }
  double y() const { return v_.y; }
  double z() const { return v_.z; }
  const Vec3& vec() const { return v_; }
  operator const Vec3&() const { return v_; }
  UnitVector operator-() const { return UnitVector(Raw{}, -v_); }

 private:
  struct Raw {};
  UnitVector(Raw, const Vec3& v) : v_(v) {}
  Vec3 v_;
};

// Row-major 3x3 matrix; used for rigid motions of the sphere.
struct Mat3 {
  std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

  static Mat3 Identity() { return {}; }
  static Mat3 FromColumns(const Vec3& c0, const Vec3& c1, const Vec3& c2);
  // Rotation by `angle` counterclockwise about `axis`.
  static Mat3 Rotation(const UnitVector& axis, double angle);

  double operator()(int r, int c) const { return m[r * 3 + c]; }
  Vec3 operator*(const Vec3& v) const;
  UnitVector operator*(const UnitVector& v) const;
  Mat3 operator*(const Mat3& o) const;
  Mat3 Transposed() const;
  double Determinant() const;
};

// Rotation taking p -> u and q -> v, for pairs with equal separation.
// Throws DegenerateError if p, q (or u, v) are parallel.
Mat3 RotationTaking(const UnitVector& p, const UnitVector& q, const UnitVector& u,
                    const UnitVector& v);

// Colatitude in [0, pi] measured from the north pole (0,0,1); longitude
// counterclockwise from the +x meridian.
UnitVector FromPolar(double colatitude, double longitude);

// Length of the minor geodesic arc, in [0, pi].
double Distance(const UnitVector& p, const UnitVector& q);

// Unit tangent at `from` pointing along the geodesic toward `to`.
Vec3 TangentToward(const UnitVector& from, const UnitVector& to);

// Point reached from `from` travelling `length` along unit tangent `dir`.
UnitVector Travel(const UnitVector& from, const Vec3& dir, double length);

// Rotates tangent vector `t` at point `at` counterclockwise by `angle`.
Vec3 RotateTangent(const UnitVector& at, const Vec3& t, double angle);

// Angle from ray Q->P to ray Q->R, counterclockwise about Q, in [0, 2pi).
// Throws DomainError if P or R coincides with Q or with -Q.
double CornerAngle(const UnitVector& p, const UnitVector& q, const UnitVector& r);

// Longitude of `x` about `pole`, measured counterclockwise from the
// meridian through `ref`; result in [-pi, pi).
double LongitudeAbout(const UnitVector& pole, const UnitVector& ref, const UnitVector& x);

// Interior angles of a counterclockwise polygon.
std::vector<double> InteriorAngles(std::span<const UnitVector> ccw_vertices);

// True if the minor arcs p1p2 and q1q2 share an interior point.
bool ArcsCross(const UnitVector& p1, const UnitVector& p2, const UnitVector& q1,
               const UnitVector& q2);

struct SphericalTriangle {
  double A = 0, B = 0, C = 0;  // vertex angles
  double a = 0, b = 0, c = 0;  // opposite sides
};

// Unique triangle with the given angles. Throws NoSuchTriangle naming the
// first violated existence inequality.
SphericalTriangle TriangleFromAngles(double A, double B, double C);

// Side opposite A from the side-angle-side data (cosine law for sides).
double SideFromSidesAndAngle(double b, double c, double A);

// Residuals of the two cosine laws on a triangle (max over the three
// rotations of the formula).
double CosineLawResidual(const SphericalTriangle& t);
double DualCosineLawResidual(const SphericalTriangle& t);

// Angle excess: sum(interior_angles) - (k - 2) pi. Throws DomainError for
// fewer than three vertices or mismatched sizes.
double PolygonArea(std::span<const UnitVector> vertices, std::span<const double> interior_angles);

// Wraps an angle into [0, 2pi).
double WrapTwoPi(double angle);
// Wraps an angle into [-pi, pi).
double WrapPi(double angle);

}  // namespace pdw::sph

#endif  // PDWTILE_SPHGEOM_HPP_
