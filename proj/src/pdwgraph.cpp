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

#include "pdwtile/pdwgraph.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "pdwtile/errors.hpp"

namespace pdw {

Skeleton::Skeleton(int F) : F_(F) {
  if (F < 6 || F % 2 != 0)
    throw DomainError("pseudo-double wheel needs an even face count >= 6, got " +
                      std::to_string(F));
  const int n = F / 2, V = F + 2;
  for (int i = 0; i < n; ++i)
    faces_.push_back({kNorth, RimVertex(2 * i, F), RimVertex(2 * i + 1, F), RimVertex(2 * i + 2, F)});
  for (int i = 0; i < n; ++i)
    faces_.push_back({kSouth, RimVertex(2 * i + 1, F), RimVertex(2 * i, F), RimVertex(2 * i - 1, F)});

  edge_index_.assign(V * V, -1);
  std::map<std::pair<int, int>, std::vector<int>> sides;
  for (int f = 0; f < F; ++f)
    for (int k = 0; k < 4; ++k) {
      int u = faces_[f][k], v = faces_[f][(k + 1) % 4];
      sides[{std::min(u, v), std::max(u, v)}].push_back(f);
    }
  for (const auto& [uv, fs] : sides) {
    const int e = static_cast<int>(edges_.size());
    edges_.push_back(uv);
    edge_faces_.push_back({fs[0], fs[1]});
    edge_index_[uv.first * V + uv.second] = edge_index_[uv.second * V + uv.first] = e;
  }

  // Counterclockwise around v, a face (.., p, v, q, ..) turns from q to p.
  rotation_.assign(V, {});
  vertex_faces_.assign(V, {});
  std::vector<std::map<int, int>> succ(V);
  for (int f = 0; f < F; ++f)
    for (int k = 0; k < 4; ++k) {
      const int v = faces_[f][k], p = faces_[f][(k + 3) % 4], q = faces_[f][(k + 1) % 4];
      succ[v][q] = p;
      vertex_faces_[v].push_back(f);
    }
  for (int v = 0; v < V; ++v) {
    int start = succ[v].begin()->first, w = start;
    do {
      rotation_[v].push_back(w);
      w = succ[v].at(w);
    } while (w != start);
  }
}

int Skeleton::EdgeIndex(int u, int v) const {
  const int V = num_vertices();
  if (u < 0 || v < 0 || u >= V || v >= V) return -1;
  return edge_index_[u * V + v];
}

int Skeleton::FaceWithVertices(std::array<int, 4> vs) const {
  std::sort(vs.begin(), vs.end());
  for (int f = 0; f < F_; ++f) {
    auto w = faces_[f];
    std::sort(w.begin(), w.end());
    if (w == vs) return f;
  }
  return -1;
}

int Skeleton::CornerIndex(int f, int v) const {
  for (int k = 0; k < 4; ++k)
    if (faces_[f][k] == v) return k;
  return -1;
}

std::string Skeleton::VertexName(int v) const {
  if (v == kNorth) return "N";
  if (v == kSouth) return "S";
  return "v" + std::to_string(v - 2);
}

int Skeleton::VertexId(const std::string& name) const {
  if (name == "N") return kNorth;
  if (name == "S") return kSouth;
  if (name.size() < 2 || name[0] != 'v') return -1;
  for (size_t i = 1; i < name.size(); ++i)
    if (name[i] < '0' || name[i] > '9') return -1;
  if ((name.size() > 2 && name[1] == '0') || name.size() > 10) return -1;
  const int i = std::stoi(name.substr(1));
  return i < F_ ? 2 + i : -1;
}

int Automorphism::MapFace(const Skeleton& sk, int f) const {
  const auto& fv = sk.face(f);
  return sk.FaceWithVertices({perm[fv[0]], perm[fv[1]], perm[fv[2]], perm[fv[3]]});
}

int Automorphism::MapEdge(const Skeleton& sk, int e) const {
  const auto& [u, v] = sk.edges()[e];
  return sk.EdgeIndex(perm[u], perm[v]);
}

namespace {

// +1 / -1 if `rot` equals `target` up to cyclic shift / reversal, else 0.
int CyclicRelation(const std::vector<int>& rot, const std::vector<int>& target) {
  const int d = static_cast<int>(rot.size());
  auto pos = std::find(target.begin(), target.end(), rot[0]);
  if (pos == target.end()) return 0;
  const int s = static_cast<int>(pos - target.begin());
  bool fwd = true, bwd = true;
  for (int k = 0; k < d; ++k) {
    fwd = fwd && target[(s + k) % d] == rot[k];
    bwd = bwd && target[((s - k) % d + d) % d] == rot[k];
  }
  return fwd ? 1 : (bwd ? -1 : 0);
}

int OrientationOf(const Skeleton& sk, const std::vector<int>& perm) {
  int orient = 2;
  for (int v = 0; v < sk.num_vertices(); ++v) {
    std::vector<int> img;
    for (int w : sk.Rotation(v)) img.push_back(perm[w]);
    const int r = CyclicRelation(img, sk.Rotation(perm[v]));
    if (r == 0) return 0;
    if (orient == 2) orient = r;
    else if (orient != r) return 0;
  }
  return orient;
}

class AutSearch {
 public:
  explicit AutSearch(const Skeleton& sk) : sk_(sk), V_(sk.num_vertices()) {
    // N, then around the rim, then S: every vertex after N has a mapped
    // neighbor whose image bounds its candidates to a few vertices.
    order_.push_back(kNorth);
    for (int i = 0; i < sk.num_faces(); ++i) order_.push_back(RimVertex(i, sk.num_faces()));
    order_.push_back(kSouth);
    anchor_.assign(V_, -1);
    for (size_t k = 1; k < order_.size(); ++k)
      for (size_t j = 0; j < k && anchor_[order_[k]] < 0; ++j)
        if (sk.Adjacent(order_[j], order_[k])) anchor_[order_[k]] = order_[j];
    perm_.assign(V_, -1);
    used_.assign(V_, false);
  }

  std::vector<Automorphism> Run() {
    Extend(0);
    std::sort(out_.begin(), out_.end(),
              [](const Automorphism& x, const Automorphism& y) { return x.perm < y.perm; });
    return out_;
  }

 private:
  void Extend(size_t k) {
    if (k == order_.size()) {
      out_.push_back({perm_, OrientationOf(sk_, perm_)});
      return;
    }
    const int v = order_[k];
    std::vector<int> candidates;
    if (anchor_[v] < 0) {
      for (int img = 0; img < V_; ++img) candidates.push_back(img);
    } else {
      candidates = sk_.Rotation(perm_[anchor_[v]]);
      std::sort(candidates.begin(), candidates.end());
    }
    for (int img : candidates) {
      if (used_[img] || sk_.Degree(img) != sk_.Degree(v)) continue;
      bool ok = true;
      for (size_t j = 0; j < k && ok; ++j) {
        const int u = order_[j];
        ok = sk_.Adjacent(u, v) == sk_.Adjacent(perm_[u], img);
      }
      if (!ok) continue;
      perm_[v] = img;
      used_[img] = true;
      Extend(k + 1);
      used_[img] = false;
      perm_[v] = -1;
    }
  }

  const Skeleton& sk_;
  int V_;
  std::vector<int> order_, anchor_, perm_;
  std::vector<bool> used_;
  std::vector<Automorphism> out_;
};

}  // namespace

std::vector<Automorphism> Automorphisms(const Skeleton& sk) { return AutSearch(sk).Run(); }

Automorphism Compose(const Automorphism& outer, const Automorphism& inner) {
  Automorphism r;
  r.perm.resize(inner.perm.size());
  for (size_t v = 0; v < inner.perm.size(); ++v) r.perm[v] = outer.perm[inner.perm[v]];
  r.orientation = outer.orientation * inner.orientation;
  return r;
}

Automorphism Inverse(const Automorphism& a) {
  Automorphism r;
  r.perm.resize(a.perm.size());
  for (size_t v = 0; v < a.perm.size(); ++v) r.perm[a.perm[v]] = static_cast<int>(v);
  r.orientation = a.orientation;
  return r;
}

namespace {

void MatchFrom(const Skeleton& sk, std::vector<bool>& matched, FaceMatching& cur,
               std::vector<FaceMatching>& out) {
  int f = 0;
  while (f < sk.num_faces() && matched[f]) ++f;
  if (f == sk.num_faces()) {
    FaceMatching m = cur;
    std::sort(m.begin(), m.end());
    out.push_back(std::move(m));
    return;
  }
  std::vector<int> es;
  for (int k = 0; k < 4; ++k) es.push_back(sk.EdgeIndex(sk.face(f)[k], sk.face(f)[(k + 1) % 4]));
  std::sort(es.begin(), es.end());
  for (int e : es) {
    const auto [f1, f2] = sk.EdgeFaces(e);
    const int g = f1 == f ? f2 : f1;
    if (matched[g]) continue;
    matched[f] = matched[g] = true;
    cur.push_back(e);
    MatchFrom(sk, matched, cur, out);
    cur.pop_back();
    matched[f] = matched[g] = false;
  }
}

}  // namespace

std::vector<FaceMatching> PerfectFaceMatchings(const Skeleton& sk) {
  std::vector<bool> matched(sk.num_faces(), false);
  FaceMatching cur;
  std::vector<FaceMatching> out;
  MatchFrom(sk, matched, cur, out);
  return out;
}

FaceMatching MapMatching(const Skeleton& sk, const Automorphism& a, const FaceMatching& m) {
  FaceMatching r;
  for (int e : m) r.push_back(a.MapEdge(sk, e));
  std::sort(r.begin(), r.end());
  return r;
}

bool IsLabelPreserving(const Skeleton& sk, const Automorphism& a, const Labeling& lab,
                       double tol) {
  if (static_cast<int>(lab.edge_length.size()) != sk.num_edges() ||
      static_cast<int>(lab.corner_angle.size()) != sk.num_faces())
    throw DomainError("labeling does not cover the skeleton");
  for (double x : lab.edge_length)
    if (std::isnan(x)) throw DomainError("labeling misses an edge length");
  for (const auto& c : lab.corner_angle)
    for (double x : c)
      if (std::isnan(x)) throw DomainError("labeling misses a corner angle");

  for (int e = 0; e < sk.num_edges(); ++e)
    if (std::abs(lab.edge_length[e] - lab.edge_length[a.MapEdge(sk, e)]) > tol) return false;
  for (int f = 0; f < sk.num_faces(); ++f) {
    const int g = a.MapFace(sk, f);
    for (int k = 0; k < 4; ++k) {
      const int j = sk.CornerIndex(g, a(sk.face(f)[k]));
      if (std::abs(lab.corner_angle[f][k] - lab.corner_angle[g][j]) > tol) return false;
    }
  }
  return true;
}

}  // namespace pdw
