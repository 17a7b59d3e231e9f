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

// Pseudo-double wheel maps.
//
// Vertex ids: 0 = N, 1 = S, 2 + i = v_i for the rim cycle v_0 .. v_{F-1}.
// N is joined to the even rim vertices, S to the odd ones. Faces are listed
// counterclockwise: face i < n is (N, v_2i, v_2i+1, v_2i+2), face n + i is
// (S, v_2i+1, v_2i, v_2i-1), with n = F / 2.

#ifndef PDWTILE_PDWGRAPH_HPP_
#define PDWTILE_PDWGRAPH_HPP_

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace pdw {

inline constexpr int kNorth = 0;
inline constexpr int kSouth = 1;
inline constexpr int RimVertex(int i, int F) { return 2 + ((i % F) + F) % F; }

class Skeleton {
 public:
  // Throws DomainError unless F is even and at least 6.
  explicit Skeleton(int F);

  int num_faces() const { return F_; }
  int n() const { return F_ / 2; }
  int num_vertices() const { return F_ + 2; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const std::vector<std::array<int, 4>>& faces() const { return faces_; }
  const std::array<int, 4>& face(int f) const { return faces_[f]; }
  // Edges as (u, v) with u < v, in a fixed order.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  // Index of edge {u, v}, or -1.
  int EdgeIndex(int u, int v) const;
  // The two faces on either side of an edge.
  const std::pair<int, int>& EdgeFaces(int e) const { return edge_faces_[e]; }
  // Neighbors of v in counterclockwise cyclic order.
  const std::vector<int>& Rotation(int v) const { return rotation_[v]; }
  int Degree(int v) const { return static_cast<int>(rotation_[v].size()); }
  bool Adjacent(int u, int v) const { return EdgeIndex(u, v) >= 0; }
  // Faces containing v.
  const std::vector<int>& VertexFaces(int v) const { return vertex_faces_[v]; }
  // Face with the given vertex set, or -1.
  int FaceWithVertices(std::array<int, 4> vs) const;
  // Position of v in face f, or -1.
  int CornerIndex(int f, int v) const;

  std::string VertexName(int v) const;
  // Inverse of VertexName; -1 if unknown.
  int VertexId(const std::string& name) const;

 private:
  int F_;
  std::vector<std::array<int, 4>> faces_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::pair<int, int>> edge_faces_;
  std::vector<std::vector<int>> rotation_;
  std::vector<std::vector<int>> vertex_faces_;
  std::vector<int> edge_index_;  // dense (F+2)^2 lookup
};

struct Automorphism {
  std::vector<int> perm;  // vertex v -> perm[v]
  // +1 if every cyclic order is preserved, -1 if every one is reversed,
  // 0 otherwise (does not occur for 3-connected planar maps).
  int orientation = 0;

  int operator()(int v) const { return perm[v]; }
  // Face image, through vertex sets.
  int MapFace(const Skeleton& sk, int f) const;
  int MapEdge(const Skeleton& sk, int e) const;
};

// Full graph automorphism group, in lexicographic order of permutations.
std::vector<Automorphism> Automorphisms(const Skeleton& sk);

Automorphism Compose(const Automorphism& outer, const Automorphism& inner);
Automorphism Inverse(const Automorphism& a);

// Perfect matching of the dual graph, as sorted edge indices: each edge
// pairs the two faces it separates.
using FaceMatching = std::vector<int>;

// All perfect face matchings, in backtracking order (lowest unmatched face,
// its edges in index order).
std::vector<FaceMatching> PerfectFaceMatchings(const Skeleton& sk);

FaceMatching MapMatching(const Skeleton& sk, const Automorphism& a, const FaceMatching& m);

// Edge lengths per edge index and corner angles per (face, corner index).
// NaN marks a missing entry.
struct Labeling {
  std::vector<double> edge_length;
  std::vector<std::array<double, 4>> corner_angle;
};

// True iff the automorphism carries every edge length and corner angle onto
// an equal one (tolerance `tol`). Corners are identified by (face, vertex),
// so orientation-reversing maps compare against the mirrored corner order.
// Throws DomainError on an incomplete labeling.
bool IsLabelPreserving(const Skeleton& sk, const Automorphism& a, const Labeling& lab,
                       double tol = 1e-9);

}  // namespace pdw

#endif  // PDWTILE_PDWGRAPH_HPP_
