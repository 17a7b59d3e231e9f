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

// Backtracking placement of tile copies on the faces of a pseudo-double
// wheel. Faces are visited breadth-first from face 0; each later face is
// glued along an edge shared with an already placed face, so a placement is
// one of 8 choices (mirror flag x cyclic rotation) and its position is then
// forced.

#include <algorithm>
#include <cmath>
#include <deque>

#include "pdwtile/errors.hpp"
#include "pdwtile/tiling.hpp"

namespace pdw {

using sph::kTwoPi;
using sph::UnitVector;

namespace {

constexpr double kPlaceTol = 1e-6;

struct Template {
  std::array<UnitVector, 4> pts;
  FaceLabel label;
};

class LayoutSearch {
 public:
  LayoutSearch(const Quadrangle& q, bool allow_reflection)
      : q_(q), sk_(2 * q.params.n), allow_reflection_(allow_reflection) {
    const auto T = q.Vertices();
    tmpl_[0] = {T, LabelOf(q)};
    std::array<UnitVector, 4> M;
    for (int k = 0; k < 4; ++k) {
      const UnitVector& p = T[(4 - k) % 4];
      M[k] = UnitVector(p.x(), -p.y(), p.z());
    }
    tmpl_[1] = {M, Reflected(LabelOf(q))};

    const int F = sk_.num_faces(), V = sk_.num_vertices();
    std::vector<bool> seen(F, false);
    std::deque<int> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
      const int f = queue.front();
      queue.pop_front();
      order_.push_back(f);
      const auto& fv = sk_.face(f);
      for (int k = 0; k < 4; ++k) {
        const auto [g1, g2] = sk_.EdgeFaces(sk_.EdgeIndex(fv[k], fv[(k + 1) % 4]));
        const int g = g1 == f ? g2 : g1;
        if (!seen[g]) { seen[g] = true; queue.push_back(g); }
      }
    }
    placed_.assign(V, false);
    pos_.resize(V);
    angle_sum_.assign(V, 0.0);
    count_.assign(V, 0);
    assign_.resize(F);
  }

  std::vector<std::vector<Placement>> Run(SearchStats* stats) {
    Place(0);
    if (stats) { stats->nodes = nodes_; stats->raw_solutions = static_cast<long>(sols_.size()); }
    return sols_;
  }

  Tiling Realize(const std::vector<Placement>& pl) const {
    Tiling t(q_.params.n);
    t.positions.resize(sk_.num_vertices());
    t.labels.resize(sk_.num_faces());
    t.reference = LabelOf(q_);
    std::vector<bool> done(sk_.num_vertices(), false);
    for (int f : order_) {
      const auto& fv = sk_.face(f);
      const auto img = Image(f, pl[f], done, t.positions);
      for (int j = 0; j < 4; ++j) {
        if (!done[fv[j]]) { t.positions[fv[j]] = img[j]; done[fv[j]] = true; }
        const int s = (j + pl[f].rotation) % 4;
        t.labels[f].angles[j] = tmpl_[pl[f].mirror].label.angles[s];
        t.labels[f].edges[j] = tmpl_[pl[f].mirror].label.edges[s];
      }
    }
    return t;
  }

 private:
  // Positions of the face corners for placement p, glued to already placed
  // vertices; empty if the shared edge lengths disagree.
  std::vector<UnitVector> Image(int f, const Placement& p, const std::vector<bool>& placed,
                                const std::vector<UnitVector>& pos) const {
    const auto& fv = sk_.face(f);
    const auto& X = tmpl_[p.mirror].pts;
    std::vector<UnitVector> pts(4);
    for (int j = 0; j < 4; ++j) pts[j] = X[(j + p.rotation) % 4];
    int j = 0;
    while (j < 4 && !(placed[fv[j]] && placed[fv[(j + 1) % 4]])) ++j;
    if (j == 4) return pts;  // seed face
    const UnitVector &u = pos[fv[j]], &v = pos[fv[(j + 1) % 4]];
    const UnitVector &a = pts[j], &b = pts[(j + 1) % 4];
    if (std::abs(sph::Dot(a, b) - sph::Dot(u, v)) > kPlaceTol) return {};
    const sph::Mat3 R = sph::RotationTaking(a, b, u, v);
    for (auto& x : pts) x = R * x;
    return pts;
  }

  void Place(size_t k) {
    ++nodes_;
    if (k == order_.size()) {
      sols_.push_back(assign_);
      return;
    }
    const int f = order_[k];
    const auto& fv = sk_.face(f);
    for (int mirror = 0; mirror <= (allow_reflection_ ? 1 : 0); ++mirror) {
      for (int r = 0; r < 4; ++r) {
        const Placement p{mirror == 1, r};
        const auto img = Image(f, p, placed_, pos_);
        if (img.empty()) continue;
        bool ok = true;
        for (int j = 0; j < 4 && ok; ++j)
          ok = !placed_[fv[j]] || sph::Norm(pos_[fv[j]].vec() - img[j].vec()) < kPlaceTol;
        if (!ok) continue;

        const FaceLabel& lab = tmpl_[mirror].label;
        for (int j = 0; j < 4; ++j) {
          const int w = fv[j];
          angle_sum_[w] += lab.angles[(j + r) % 4];
          ++count_[w];
          const int deg = static_cast<int>(sk_.VertexFaces(w).size());
          if (angle_sum_[w] > kTwoPi + kPlaceTol ||
              (count_[w] == deg && std::abs(angle_sum_[w] - kTwoPi) > kPlaceTol))
            ok = false;
        }
        if (ok) {
          std::vector<int> added;
          for (int j = 0; j < 4; ++j)
            if (!placed_[fv[j]]) {
              placed_[fv[j]] = true;
              pos_[fv[j]] = img[j];
              added.push_back(fv[j]);
            }
          assign_[f] = p;
          Place(k + 1);
          for (int w : added) placed_[w] = false;
        }
        for (int j = 0; j < 4; ++j) {
          angle_sum_[fv[j]] -= lab.angles[(j + r) % 4];
          --count_[fv[j]];
        }
      }
    }
  }

  const Quadrangle& q_;
  Skeleton sk_;
  bool allow_reflection_;
  std::array<Template, 2> tmpl_;
  std::vector<int> order_;
  std::vector<bool> placed_;
  std::vector<UnitVector> pos_;
  std::vector<double> angle_sum_;
  std::vector<int> count_;
  std::vector<Placement> assign_;
  std::vector<std::vector<Placement>> sols_;
  long nodes_ = 0;
};

bool Equivalent(const Tiling& x, const Tiling& y, const std::vector<Automorphism>& auts,
                double tol) {
  if (x.n() != y.n()) return false;
  const int V = x.skeleton.num_vertices();
  const int p = kNorth, q = RimVertex(0, x.skeleton.num_faces());
  for (const auto& s : auts) {
    const double dx = sph::Dot(x.positions[p], x.positions[q]);
    const double dy = sph::Dot(y.positions[s(p)], y.positions[s(q)]);
    if (std::abs(dx - dy) > tol) continue;
    const sph::Mat3 R =
        sph::RotationTaking(x.positions[p], x.positions[q], y.positions[s(p)], y.positions[s(q)]);
    bool ok = true;
    for (int v = 0; v < V && ok; ++v)
      ok = sph::Norm(R * x.positions[v].vec() - y.positions[s(v)].vec()) < tol;
    if (ok) return true;
  }
  return false;
}

bool PlacementLess(const Layout& x, const Layout& y) {
  if (x.reflected_count != y.reflected_count) return x.reflected_count < y.reflected_count;
  for (size_t f = 0; f < x.placements.size(); ++f) {
    const auto& a = x.placements[f];
    const auto& b = y.placements[f];
    if (a.mirror != b.mirror) return a.mirror < b.mirror;
    if (a.rotation != b.rotation) return a.rotation < b.rotation;
  }
  return false;
}

}  // namespace

bool EquivalentTilings(const Tiling& x, const Tiling& y, double tol) {
  if (x.n() != y.n()) return false;
  return Equivalent(x, y, Automorphisms(x.skeleton), tol);
}

std::vector<Layout> ExhaustiveLayouts(const Quadrangle& q, bool allow_reflection,
                                      SearchStats* stats) {
  LayoutSearch search(q, allow_reflection);
  const auto raw = search.Run(stats);
  std::vector<Layout> all;
  for (const auto& pl : raw) {
    Tiling t = search.Realize(pl);
    if (!Verify(t).ok()) continue;
    const int refl = static_cast<int>(
        std::count_if(pl.begin(), pl.end(), [](const Placement& p) { return p.mirror; }));
    all.push_back({std::move(t), pl, refl});
  }
  if (stats) stats->verified = static_cast<long>(all.size());
  std::sort(all.begin(), all.end(), PlacementLess);

  const auto auts = Automorphisms(Skeleton(2 * q.params.n));
  std::vector<Layout> reps;
  for (auto& l : all) {
    bool seen = false;
    for (const auto& r : reps) seen = seen || Equivalent(l.tiling, r.tiling, auts, kPlaceTol);
    if (!seen) reps.push_back(std::move(l));
  }
  return reps;
}

std::pair<Tiling, Tiling> SpecialPair() {
  const Quadrangle q = SpecialTile();
  Tiling iso = Assemble(q);
  for (auto& l : ExhaustiveLayouts(q, true))
    if (!IsIsohedral(l.tiling).isohedral) return {std::move(iso), std::move(l.tiling)};
  throw SearchFailure("layout search found no non-isohedral tiling by the double-root tile");
}

}  // namespace pdw
