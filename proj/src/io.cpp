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

#include "pdwtile/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "pdwtile/errors.hpp"

namespace pdw {

using sph::kPi;
using sph::UnitVector;

namespace {

std::string Num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

template <size_t K>
std::string NumArray(const std::array<double, K>& xs) {
  std::string s = "[";
  for (size_t i = 0; i < K; ++i) s += (i ? ", " : "") + Num(xs[i]);
  return s + "]";
}

}  // namespace

std::string TilingToJson(const Tiling& t) {
  const Skeleton& sk = t.skeleton;
  const Coords c = ToCoords(t);
  std::ostringstream os;
  os << "{\n  \"n\": " << t.n() << ",\n  \"phi\": " << Num(c.phi) << ",\n  \"a\": " << Num(c.a)
     << ",\n  \"vertices\": [\n";
  for (int v = 0; v < sk.num_vertices(); ++v) {
    const auto& p = t.positions[v];
    os << "    {\"id\": \"" << sk.VertexName(v) << "\", \"xyz\": "
       << NumArray(std::array<double, 3>{p.x(), p.y(), p.z()}) << "}"
       << (v + 1 < sk.num_vertices() ? "," : "") << "\n";
  }
  os << "  ],\n  \"faces\": [\n";
  for (int f = 0; f < sk.num_faces(); ++f) {
    const auto& fv = sk.face(f);
    os << "    {\"corners\": [";
    for (int k = 0; k < 4; ++k) os << (k ? ", " : "") << '"' << sk.VertexName(fv[k]) << '"';
    os << "], \"angles\": " << NumArray(t.labels[f].angles)
       << ", \"edges\": " << NumArray(t.labels[f].edges) << "}"
       << (f + 1 < sk.num_faces() ? "," : "") << "\n";
  }
  os << "  ]\n}\n";
  return os.str();
}

Tiling TilingFromJson(std::string_view text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("tiling JSON: ") + e.what());
  }
  try {
    const int n = j.at("n").get<int>();
    if (n < 3) throw ParseError("tiling JSON: n must be at least 3");
    Tiling t(n);
    const Skeleton& sk = t.skeleton;
    const auto& verts = j.at("vertices");
    const auto& faces = j.at("faces");
    if (static_cast<int>(verts.size()) != sk.num_vertices())
      throw ParseError("tiling JSON: expected " + std::to_string(sk.num_vertices()) + " vertices");
    if (static_cast<int>(faces.size()) != sk.num_faces())
      throw ParseError("tiling JSON: expected " + std::to_string(sk.num_faces()) + " faces");

    t.positions.resize(sk.num_vertices());
    std::vector<bool> seen(sk.num_vertices(), false);
    for (const auto& v : verts) {
      const int id = sk.VertexId(v.at("id").get<std::string>());
      if (id < 0 || seen[id]) throw ParseError("tiling JSON: bad or repeated vertex id");
      seen[id] = true;
      const auto xyz = v.at("xyz").get<std::vector<double>>();
      if (xyz.size() != 3) throw ParseError("tiling JSON: xyz needs 3 components");
      const sph::Vec3 p{xyz[0], xyz[1], xyz[2]};
      if (std::abs(sph::Norm(p) - 1) > 1e-9) throw ParseError("tiling JSON: vertex not on the unit sphere");
      t.positions[id] = UnitVector(p);
    }

    // Faces may come in any order and any starting corner, but must be the
    // skeleton's faces traversed counterclockwise.
    t.labels.resize(sk.num_faces());
    std::vector<bool> filled(sk.num_faces(), false);
    bool first = true;
    for (const auto& fj : faces) {
      const auto names = fj.at("corners").get<std::vector<std::string>>();
      const auto angles = fj.at("angles").get<std::vector<double>>();
      const auto edges = fj.at("edges").get<std::vector<double>>();
      if (names.size() != 4 || angles.size() != 4 || edges.size() != 4)
        throw ParseError("tiling JSON: faces need 4 corners, angles and edges");
      std::array<int, 4> ids;
      for (int k = 0; k < 4; ++k) {
        ids[k] = sk.VertexId(names[k]);
        if (ids[k] < 0) throw ParseError("tiling JSON: unknown corner " + names[k]);
      }
      const int f = sk.FaceWithVertices(ids);
      if (f < 0 || filled[f]) throw ParseError("tiling JSON: corners do not form a skeleton face");
      const int s = sk.CornerIndex(f, ids[0]);
      for (int k = 0; k < 4; ++k)
        if (sk.face(f)[(s + k) % 4] != ids[k])
          throw ParseError("tiling JSON: face corners not in counterclockwise order");
      FaceLabel l;
      for (int k = 0; k < 4; ++k) {
        l.angles[(s + k) % 4] = angles[k];
        l.edges[(s + k) % 4] = edges[k];
      }
      t.labels[f] = l;
      filled[f] = true;
      if (first) { t.reference = l; first = false; }
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("tiling JSON: ") + e.what());
  }
}

namespace {

UnitVector Slerp(const UnitVector& u, const UnitVector& v, double t) {
  const double th = sph::Distance(u, v);
  const double s = std::sin(th);
  return UnitVector(u.vec() * (std::sin((1 - t) * th) / s) + v.vec() * (std::sin(t * th) / s));
}

}  // namespace

std::string TilingToObj(const Tiling& t, int chords) {
  if (chords < 1) throw DomainError("OBJ export needs at least one chord per edge");
  const Skeleton& sk = t.skeleton;
  std::ostringstream os;
  os << "# pseudo-double wheel tiling, n = " << t.n() << "\n";
  auto emit = [&](const UnitVector& p) {
    os << "v " << Num(p.x()) << " " << Num(p.y()) << " " << Num(p.z()) << "\n";
  };
  for (const auto& p : t.positions) emit(p);

  // OBJ indices (1-based) along each edge from its smaller to larger id.
  std::vector<std::vector<int>> chain(sk.num_edges());
  int next = sk.num_vertices() + 1;
  for (int e = 0; e < sk.num_edges(); ++e) {
    const auto [u, v] = sk.edges()[e];
    chain[e].push_back(u + 1);
    for (int k = 1; k < chords; ++k) {
      emit(Slerp(t.positions[u], t.positions[v], static_cast<double>(k) / chords));
      chain[e].push_back(next++);
    }
    chain[e].push_back(v + 1);
  }
  for (const auto& c : chain) {
    os << "l";
    for (int i : c) os << " " << i;
    os << "\n";
  }
  for (int f = 0; f < sk.num_faces(); ++f) {
    const auto& fv = sk.face(f);
    os << "f";
    for (int k = 0; k < 4; ++k) {
      const int u = fv[k], v = fv[(k + 1) % 4];
      auto c = chain[sk.EdgeIndex(u, v)];
      if (u > v) std::reverse(c.begin(), c.end());
      for (size_t i = 0; i + 1 < c.size(); ++i) os << " " << c[i];
    }
    os << "\n";
  }
  return os.str();
}

std::vector<UnitVector> ObjVertices(std::string_view text, int count) {
  std::istringstream is{std::string(text)};
  std::vector<UnitVector> out;
  std::string line;
  while (static_cast<int>(out.size()) < count && std::getline(is, line)) {
    if (line.rfind("v ", 0) != 0) continue;
    std::istringstream ls(line.substr(2));
    double x, y, z;
    if (!(ls >> x >> y >> z)) throw ParseError("OBJ: malformed vertex record");
    out.emplace_back(x, y, z);
  }
  if (static_cast<int>(out.size()) < count) throw ParseError("OBJ: too few vertex records");
  return out;
}

std::string PhaseCsv(int n, int res) {
  if (res < 2) throw DomainError("phase grid resolution must be at least 2");
  if (n < 3) throw DomainError("n must be at least 3");
  auto singular = [](double x) {
    return std::abs(x - kPi / 2) < 1e-6 || std::abs(x - kPi) < 1e-6;
  };
  std::string out = "alpha,gamma,region,multiplicity,a_minus,a_plus,discriminant\n";
  const double h = sph::kTwoPi / res;
  for (int i = 0; i < res; ++i) {
    const double al = (i + 0.5) * h;
    if (singular(al)) continue;
    for (int j = 0; j < res; ++j) {
      const double ga = (j + 0.5) * h;
      if (singular(ga)) continue;
      const Classification c = Classify({n, al, ga});
      std::string am, ap;
      for (const auto& r : c.roots) {
        if (r.branch != Branch::kPlus) am = Num(r.a);
        if (r.branch != Branch::kMinus) ap = Num(r.a);
      }
      out += Num(al) + "," + Num(ga) + "," + std::string(RegionName(c.region.tag)) + "," +
             std::to_string(c.region.multiplicity) + "," + am + "," + ap + "," +
             Num(c.discriminant) + "\n";
    }
  }
  return out;
}

std::string MatchingsJson(int faces) {
  const Skeleton sk(faces);
  const auto ms = PerfectFaceMatchings(sk);
  std::ostringstream os;
  os << "{\"faces\": " << faces << ", \"count\": " << ms.size() << ", \"matchings\": [";
  for (size_t i = 0; i < ms.size(); ++i) {
    os << (i ? ", " : "") << "[";
    for (size_t k = 0; k < ms[i].size(); ++k) {
      const auto [u, v] = sk.edges()[ms[i][k]];
      os << (k ? ", " : "") << "[\"" << sk.VertexName(u) << "\", \"" << sk.VertexName(v) << "\"]";
    }
    os << "]";
  }
  os << "]}\n";
  return os.str();
}

}  // namespace pdw
