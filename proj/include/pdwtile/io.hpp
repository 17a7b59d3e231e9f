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

// Serialization: tiling JSON, OBJ export, phase-diagram CSV.

#ifndef PDWTILE_IO_HPP_
#define PDWTILE_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "pdwtile/tiling.hpp"

namespace pdw {

// {"n", "phi", "a", "vertices": [{"id", "xyz"}], "faces": [{"corners",
// "angles", "edges"}]}, floats with 17 significant digits.
std::string TilingToJson(const Tiling& t);

// Throws ParseError on malformed input or faces that do not match the
// pseudo-double wheel with the given n. Face 0 becomes the reference tile.
Tiling TilingFromJson(std::string_view text);

// The F + 2 tiling vertices come first, in id order, followed by the chord
// points of each edge; one `l` polyline per edge, one `f` per face.
std::string TilingToObj(const Tiling& t, int chords = 32);

// First `count` `v` records of an OBJ document.
std::vector<sph::UnitVector> ObjVertices(std::string_view text, int count);

// alpha,gamma,region,multiplicity,a_minus,a_plus,discriminant over the cell
// centers of a res x res grid on (0, 2pi)^2, skipping points within 1e-6 of
// pi/2 or pi. Throws DomainError for res < 2.
std::string PhaseCsv(int n, int res);

// Matchings as JSON: {"faces": F, "count": k, "matchings": [[[u, v], ...]]}.
std::string MatchingsJson(int faces);

}  // namespace pdw

#endif  // PDWTILE_IO_HPP_
