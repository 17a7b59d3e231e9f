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

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "pdwtile/errors.hpp"
#include "test_support.hpp"

namespace {

using pdw::Branch;
using pdw::Region;
using pdw::TileParams;
using pdwtest::kPi;

const double kSpecialAlpha = std::acos(-1 / (2 * std::sqrt(7.0)));
const TileParams kSpecial{6, kSpecialAlpha, 4 * kPi / 3};
const TileParams kKite{6, 2 * kPi / 3, 2 * kPi / 3};
const TileParams kTwoRoot{6, 0.55 * kPi, 1.32 * kPi};

double Cot(double x) { return std::cos(x) / std::sin(x); }

TEST(Coefficients, SpecialTileIsPerfectSquare) {
  const pdw::Coeffs c = pdw::FCoeffs(kSpecial);
  EXPECT_NEAR(c.c1, -2.0 / 3, 1e-12);
  EXPECT_NEAR(c.c0, 1.0 / 9, 1e-12);
}

TEST(Coefficients, KiteSymbolic) {
  // cot(2pi/3) = -1/sqrt(3), cot(pi/6) = sqrt(3).
  const pdw::Coeffs c = pdw::FCoeffs(kKite);
  EXPECT_NEAR(c.c1, 2.0, 1e-12);
  EXPECT_NEAR(c.c0, -1.0 / 3, 1e-12);
}

TEST(Coefficients, SymmetricUnderSwap) {
  pdwtest::ParamSampler s(21);
  for (int i = 0; i < 1000; ++i) {
    const TileParams p = s.Draw(s.DrawN(3, 20));
    const pdw::Coeffs x = pdw::FCoeffs(p), y = pdw::FCoeffs(p.Swapped());
    EXPECT_EQ(x.c1, y.c1);
    EXPECT_EQ(x.c0, y.c0);
  }
}

TEST(Coefficients, RejectsSingularAndInvalid) {
  EXPECT_THROW(pdw::FCoeffs({6, kPi / 2, 1.0}), pdw::SingularAngle);
  EXPECT_THROW(pdw::FCoeffs({6, 1.0, kPi}), pdw::SingularAngle);
  EXPECT_THROW(pdw::FCoeffs({6, kPi + 1e-10, 1.0}), pdw::SingularAngle);
  EXPECT_THROW(pdw::FCoeffs({2, 1.0, 1.0}), pdw::DomainError);
  EXPECT_THROW(pdw::FCoeffs({6, -0.1, 1.0}), pdw::DomainError);
  EXPECT_THROW(pdw::FCoeffs({6, 1.0, 7.0}), pdw::DomainError);
}

TEST(Discriminant, Examples) {
  EXPECT_NEAR(pdw::Discriminant(kSpecial), 0, 1e-12);
  EXPECT_NEAR(pdw::Discriminant(kKite), 16.0 / 9, 1e-12);
}

TEST(Discriminant, MatchesCoefficientDiscriminant) {
  pdwtest::ParamSampler s(22, 0.05);
  for (int i = 0; i < 10000; ++i) {
    const TileParams p = s.Draw(s.DrawN(3, 20));
    const pdw::Coeffs c = pdw::FCoeffs(p);
    const double k = Cot(kPi / p.n);
    EXPECT_NEAR(c.c1 * c.c1 - 4 * c.c0, k * k * pdw::Discriminant(p), 1e-10);
  }
}

TEST(Discriminant, VanishesOnDegeneracyCurve) {
  for (int n = 3; n <= 40; ++n) {
    const double lim = pdwtest::TangencyRef(n);
    for (int i = 1; i < 50; ++i) {
      const double alpha = kPi / 2 + (lim - kPi / 2) * i / 50;
      EXPECT_NEAR(pdw::Discriminant({n, alpha, pdw::Dgn(n, alpha)}), 0, 1e-9) << n << " " << alpha;
    }
  }
}

TEST(Dgn, Examples) {
  EXPECT_NEAR(pdw::Dgn(6, 2 * kPi / 3), 7 * kPi / 6, 1e-12);
  EXPECT_NEAR(pdw::Dgn(6, kSpecialAlpha), 4 * kPi / 3, 1e-12);
  EXPECT_NEAR(pdw::Dgn(6, kPi / 2 + 1e-9), 1.5 * kPi, 1e-6);
  EXPECT_THROW(pdw::Dgn(6, kPi / 2), pdw::DomainError);
  EXPECT_THROW(pdw::Dgn(6, kPi), pdw::DomainError);
  EXPECT_THROW(pdw::Dgn(2, 2.0), pdw::DomainError);
}

TEST(Dgn, MatchesReferenceFormula) {
  for (int n = 3; n <= 12; ++n)
    for (int i = 1; i < 100; ++i) {
      const double psi = kPi / 2 + kPi / 2 * i / 100;
      EXPECT_NEAR(pdw::Dgn(n, psi), pdwtest::DgnRef(n, psi), 1e-14);
    }
}

TEST(Dgn, DecreasingConvexAndBounded) {
  for (int n : {3, 4, 6, 12, 40}) {
    const double h = 1e-4;
    for (int i = 1; i <= 1000; ++i) {
      const double psi = kPi / 2 + 2 * h + (kPi / 2 - 4 * h) * i / 1001;
      const double lo = pdw::Dgn(n, psi - h), mid = pdw::Dgn(n, psi), hi = pdw::Dgn(n, psi + h);
      EXPECT_LT(hi - lo, 0);
      EXPECT_GT(hi - 2 * mid + lo, 0);
      EXPECT_GT(mid, kPi);
      EXPECT_LT(mid, 1.5 * kPi);
    }
    const double lim = pdwtest::TangencyRef(n);
    for (int i = 1; i < 100; ++i) {
      const double alpha = kPi / 2 + (lim - kPi / 2) * i / 100;
      EXPECT_GT(pdw::Dgn(n, alpha), 2 * kPi - kPi / n - alpha);
      EXPECT_LT(pdw::Dgn(n, alpha), 2 * kPi - alpha);
    }
  }
}

TEST(Dgn, TangentToBoundaryLine) {
  for (int n = 3; n <= 40; ++n) {
    const double t = pdw::DgnTangencyAlpha(n);
    EXPECT_NEAR(t, pdwtest::TangencyRef(n), 1e-15);
    EXPECT_NEAR(pdw::Dgn(n, t), 2 * kPi - kPi / n - t, 1e-12);
    const double h = 1e-6;
    EXPECT_NEAR((pdw::Dgn(n, t + h) - pdw::Dgn(n, t - h)) / (2 * h), -1, 1e-6);
  }
}

TEST(Axis, Examples) {
  EXPECT_NEAR(pdw::AxisOfParabola(kSpecial), 1.0 / 3, 1e-12);
  EXPECT_NEAR(pdw::AxisOfParabola(kKite), -1, 1e-12);
  for (int n = 3; n <= 40; ++n) {
    const double t = pdwtest::TangencyRef(n);
    EXPECT_NEAR(pdw::AxisOfParabola({n, t, pdw::Dgn(n, t)}), 1, 1e-10);
  }
}

TEST(Identities, ValuesAtPlusMinusOne) {
  pdwtest::ParamSampler s(23, 0.05);
  for (int i = 0; i < 10000; ++i) {
    const TileParams p = s.Draw(s.DrawN(3, 20));
    const double k = 1 / (std::sin(p.alpha) * std::sin(p.gamma) * std::sin(kPi / p.n));
    EXPECT_NEAR(pdw::EvalF(p, 1), -k * std::sin(kPi / p.n + p.alpha + p.gamma), 1e-10);
    EXPECT_NEAR(pdw::EvalF(p, -1), k * std::sin(-kPi / p.n + p.alpha + p.gamma), 1e-10);
  }
}

TEST(Identities, AxisOnDegeneracyCurve) {
  pdwtest::ParamSampler s(24);
  for (int i = 0; i < 10000; ++i) {
    const int n = s.DrawN(3, 20);
    const double alpha = s.Uniform(kPi / 2 + 0.01, kPi - 0.01);
    const double expect =
        -(std::sin(kPi / n) + 1) / std::cos(kPi / n) * Cot(alpha);
    EXPECT_NEAR(pdw::AxisOfParabola({n, alpha, pdw::Dgn(n, alpha)}), expect, 1e-10);
  }
}

TEST(EdgeRoots, SpecialTileDoubleRoot) {
  const auto roots = pdw::EdgeRoots(kSpecial);
  ASSERT_EQ(roots.size(), 1u);
  EXPECT_EQ(roots[0].branch, Branch::kDouble);
  EXPECT_NEAR(roots[0].a, std::acos(1.0 / 3), 1e-9);
}

TEST(EdgeRoots, KiteSingleMinusRoot) {
  const auto roots = pdw::EdgeRoots(kKite);
  ASSERT_EQ(roots.size(), 1u);
  EXPECT_EQ(roots[0].branch, Branch::kMinus);
  EXPECT_NEAR(roots[0].a, std::acos(-1 + 2 / std::sqrt(3.0)), 1e-12);
}

TEST(EdgeRoots, OnDegeneracyCurve) {
  for (int n = 3; n <= 12; ++n) {
    const double lim = pdwtest::TangencyRef(n);
    for (int i = 1; i < 20; ++i) {
      const double alpha = kPi / 2 + (lim - kPi / 2) * i / 20;
      const TileParams p{n, alpha, pdw::Dgn(n, alpha)};
      if (std::abs(pdw::Discriminant(p)) > pdw::kDoubleRootTol) continue;
      const auto roots = pdw::EdgeRoots(p);
      ASSERT_EQ(roots.size(), 1u);
      EXPECT_EQ(roots[0].branch, Branch::kDouble);
      const double expect =
          kPi - std::acos((std::sin(kPi / n) + 1) / std::cos(kPi / n) * Cot(alpha));
      EXPECT_NEAR(roots[0].a, expect, 1e-7);
    }
  }
}

TEST(EdgeRoots, AgreeWithTextbookFormula) {
  pdwtest::ParamSampler s(25, 0.01);
  for (int i = 0; i < 10000; ++i) {
    const TileParams p = s.Draw(s.DrawN(3, 20));
    const double d = pdw::Discriminant(p);
    if (std::abs(d) < 1e-6) continue;
    const pdw::Coeffs c = pdw::FCoeffs(p);
    std::vector<double> expect;
    for (double x : pdwtest::QuadraticRoots(c.c1, c.c0))
      if (std::abs(x) < 1 - 1e-9) expect.push_back(std::acos(x));
    const auto roots = pdw::EdgeRoots(p);
    ASSERT_EQ(roots.size(), expect.size());
    for (const auto& r : roots) {
      double best = 1e9;
      for (double e : expect) best = std::min(best, std::abs(e - r.a));
      EXPECT_LT(best, 1e-8);
    }
  }
}

TEST(EdgeRoots, GapBeyondTangencyHasNoTile) {
  pdwtest::ParamSampler s(26);
  int tested = 0;
  while (tested < 1000) {
    const int n = s.DrawN(3, 20);
    const double alpha = s.Uniform(pdwtest::TangencyRef(n), kPi);
    const double gamma = s.Uniform(kPi, 1.25 * kPi - kPi / (2.0 * n));
    if (alpha + gamma <= 2 * kPi - kPi / n || gamma >= pdw::Dgn(n, alpha)) continue;
    if (pdwtest::SingularDistance(alpha) < 1e-6 || pdwtest::SingularDistance(gamma) < 1e-6) continue;
    const TileParams p{n, alpha, gamma};
    EXPECT_TRUE(pdw::EdgeRoots(p).empty());
    const pdw::Coeffs c = pdw::FCoeffs(p);
    for (double x : pdwtest::QuadraticRoots(c.c1, c.c0)) EXPECT_GE(x, 1 - 1e-10);
    ++tested;
  }
}

TEST(Classify, Examples) {
  const auto kite = pdw::Classify(kKite);
  EXPECT_EQ(kite.region.tag, Region::kB1);
  EXPECT_EQ(kite.region.multiplicity, 1);
  EXPECT_EQ(kite.roots.at(0).branch, Branch::kMinus);

  const auto special = pdw::Classify(kSpecial);
  EXPECT_EQ(special.region.tag, Region::kB3);
  EXPECT_EQ(special.region.multiplicity, 1);
  EXPECT_EQ(special.roots.at(0).branch, Branch::kDouble);

  const auto two = pdw::Classify(kTwoRoot);
  EXPECT_EQ(two.region.tag, Region::kB4);
  EXPECT_EQ(two.region.multiplicity, 2);
  EXPECT_EQ(two.roots.size(), 2u);

  EXPECT_EQ(pdw::Classify({6, 0.3 * kPi, 0.4 * kPi}).region.tag, Region::kB5);
  EXPECT_EQ(pdw::Classify({6, 0.6 * kPi, 1.1 * kPi}).region.tag, Region::kB2);
  EXPECT_EQ(pdw::Classify({6, 1.1 * kPi, 0.6 * kPi}).region.tag, Region::kB6);
  EXPECT_EQ(pdw::Classify({6, 0.2 * kPi, 0.2 * kPi + 1.5}).region.tag, Region::kOutside);
}

TEST(Classify, MirrorSymmetry) {
  auto mirror = [](Region r) {
    switch (r) {
      case Region::kB2: return Region::kB6;
      case Region::kB3: return Region::kB7;
      case Region::kB4: return Region::kB8;
      case Region::kB6: return Region::kB2;
      case Region::kB7: return Region::kB3;
      case Region::kB8: return Region::kB4;
      default: return r;
    }
  };
  EXPECT_EQ(pdw::Classify(kSpecial.Swapped()).region.tag, Region::kB7);
  pdwtest::ParamSampler s(27);
  for (int i = 0; i < 10000; ++i) {
    const TileParams p = s.Draw(s.DrawN(3, 20));
    const auto a = pdw::Classify(p), b = pdw::Classify(p.Swapped());
    EXPECT_EQ(b.region.tag, mirror(a.region.tag));
    EXPECT_EQ(b.region.multiplicity, a.region.multiplicity);
  }
}

TEST(Classify, MultiplicityMatchesRootCount) {
  pdwtest::ParamSampler s(28);
  for (int i = 0; i < 10000; ++i) {
    const TileParams p = s.Draw(s.DrawN(3, 20));
    const auto c = pdw::Classify(p);
    const bool two = c.region.tag == Region::kB4 || c.region.tag == Region::kB8;
    EXPECT_EQ(c.region.multiplicity == 2, two);
    EXPECT_EQ(c.region.multiplicity == 0, c.region.tag == Region::kOutside);
    if (pdwtest::BoundaryDistance(p.n, p.alpha, p.gamma) > 1e-6) {
      EXPECT_EQ(static_cast<int>(c.roots.size()), c.region.multiplicity);
    }
  }
}

void ExpectQuadrangleInvariants(const pdw::Quadrangle& q) {
  using namespace pdw::sph;
  const double a = q.a, beta = q.beta();
  EXPECT_NEAR(Distance(q.N, q.v0), a, 1e-9);
  EXPECT_NEAR(Distance(q.N, q.v2), a, 1e-9);
  EXPECT_NEAR(Distance(q.N, q.v1), kPi - a, 1e-9);
  EXPECT_NEAR(Distance(q.v0, q.v1), q.b, 1e-9);
  EXPECT_NEAR(Distance(q.v1, q.v2), q.c, 1e-9);
  const auto vs = q.Vertices();
  const std::vector<double> angles = InteriorAngles(vs);
  const auto expect = q.CornerAngles();
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(angles[i], expect[i], 1e-9);
  EXPECT_NEAR(angles[0], beta, 1e-9);
  EXPECT_NEAR(PolygonArea(vs, angles), beta, 1e-9);
  EXPECT_NEAR(q.phi + q.phi_prime, beta, 1e-12);
}

TEST(BuildQuadrangle, SpecialTile) {
  const pdw::Quadrangle q = pdw::BuildQuadrangle(kSpecial, std::acos(1.0 / 3));
  EXPECT_NEAR(q.b, std::acos(-5.0 / 9), 1e-9);
  EXPECT_NEAR(q.c, std::acos(1.0 / 3), 1e-9);
  EXPECT_NEAR(q.delta(), std::acos(5 / (2 * std::sqrt(7.0))), 1e-9);
  EXPECT_NEAR(q.beta(), kPi / 3, 1e-15);
  EXPECT_EQ(q.branch, Branch::kDouble);
  ExpectQuadrangleInvariants(q);
  EXPECT_THROW(pdw::BuildQuadrangle(kSpecial, kPi / 4), pdw::NotATile);
}

TEST(BuildQuadrangle, Kite) {
  const pdw::Quadrangle q = pdw::BuildQuadrangle(kKite, std::acos(-1 + 2 / std::sqrt(3.0)));
  const auto vs = q.Vertices();
  const auto angles = pdw::sph::InteriorAngles(vs);
  EXPECT_NEAR(angles[2], 2 * kPi / 3, 1e-9);
  EXPECT_NEAR(pdw::sph::PolygonArea(vs, angles), kPi / 3, 1e-9);
  ExpectQuadrangleInvariants(q);
}

TEST(BuildQuadrangle, RejectsOutOfRange) {
  EXPECT_THROW(pdw::BuildQuadrangle(kKite, 0), pdw::DomainError);
  EXPECT_THROW(pdw::BuildQuadrangle(kKite, kPi), pdw::DomainError);
}

TEST(BuildQuadrangle, InvariantsOnClassifiedSamples) {
  pdwtest::ParamSampler s(29);
  int built = 0;
  while (built < 1000) {
    const TileParams p = s.Draw(s.DrawN(3, 12));
    const auto c = pdw::Classify(p);
    for (const auto& r : c.roots) {
      const pdw::Quadrangle q = pdw::BuildQuadrangle(p, r);
      ExpectQuadrangleInvariants(q);
      // With a reflex corner above pi the edge a stays below pi/2.
      if (p.alpha > kPi || p.gamma > kPi) {
        EXPECT_LT(q.a, kPi / 2);
      }
      ++built;
    }
  }
}

TEST(Names, RegionAndBranch) {
  EXPECT_EQ(pdw::RegionName(Region::kB3), "B3");
  EXPECT_EQ(pdw::RegionName(Region::kOutside), "Outside");
  EXPECT_EQ(pdw::BranchName(Branch::kDouble), "double");
}

}  // namespace
