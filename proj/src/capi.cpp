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

#include "pdwtile/pdwtile.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "pdwtile/errors.hpp"
#include "pdwtile/io.hpp"
#include "pdwtile/quadcore.hpp"
#include "pdwtile/tiling.hpp"

struct pdw_quad {
  pdw::Quadrangle q;
};

struct pdw_tiling {
  pdw::Tiling t;
};

struct pdw_tiling_list {
  std::vector<pdw_tiling> items;
  std::vector<int> reflected;
};

namespace {

thread_local std::string g_last_error;

pdw_status Fail(pdw_status s, const char* msg) {
  g_last_error = msg;
  return s;
}

template <typename Fn>
pdw_status Guard(Fn&& fn) {
  g_last_error.clear();
  try {
    return fn();
  } catch (const pdw::NoSuchTriangle& e) {
    return Fail(PDW_ERR_NO_TRIANGLE, e.what());
  } catch (const pdw::SingularAngle& e) {
    return Fail(PDW_ERR_SINGULAR, e.what());
  } catch (const pdw::NotATile& e) {
    return Fail(PDW_ERR_NOT_A_TILE, e.what());
  } catch (const pdw::DomainError& e) {
    return Fail(PDW_ERR_DOMAIN, e.what());
  } catch (const pdw::DegenerateError& e) {
    return Fail(PDW_ERR_DEGENERATE, e.what());
  } catch (const pdw::SearchFailure& e) {
    return Fail(PDW_ERR_SEARCH, e.what());
  } catch (const pdw::ParseError& e) {
    return Fail(PDW_ERR_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return Fail(PDW_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(PDW_ERR_INTERNAL, e.what());
  } catch (...) {
    return Fail(PDW_ERR_INTERNAL, "unknown error");
  }
}

pdw_status NullArg() { return Fail(PDW_ERR_DOMAIN, "null argument"); }

char* CopyString(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

int BranchCode(pdw::Branch b) {
  switch (b) {
    case pdw::Branch::kMinus: return PDW_BRANCH_MINUS;
    case pdw::Branch::kPlus: return PDW_BRANCH_PLUS;
    case pdw::Branch::kDouble: return PDW_BRANCH_DOUBLE;
  }
  return -1;
}

}  // namespace

extern "C" {

const char* pdw_last_error(void) { return g_last_error.c_str(); }

const char* pdw_status_name(pdw_status s) {
  switch (s) {
    case PDW_OK: return "ok";
    case PDW_ERR_DOMAIN: return "domain error";
    case PDW_ERR_NO_TRIANGLE: return "no such triangle";
    case PDW_ERR_SINGULAR: return "singular angle";
    case PDW_ERR_NOT_A_TILE: return "not a tile";
    case PDW_ERR_DEGENERATE: return "degenerate configuration";
    case PDW_ERR_VERIFY: return "verification failure";
    case PDW_ERR_SEARCH: return "search failure";
    case PDW_ERR_IO: return "i/o error";
    case PDW_ERR_PARSE: return "parse error";
    case PDW_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* pdw_version(void) { return "1.0.0"; }

const char* pdw_region_name(int region) {
  if (region < 0 || region > 8) return "?";
  return pdw::RegionName(static_cast<pdw::Region>(region)).data();
}

pdw_status pdw_classify(int n, double alpha, double gamma, pdw_classification* out) {
  if (!out) return NullArg();
  return Guard([&] {
    const auto c = pdw::Classify({n, alpha, gamma});
    *out = {};
    out->region = static_cast<int>(c.region.tag);
    out->multiplicity = c.region.multiplicity;
    out->root_count = static_cast<int>(c.roots.size());
    for (size_t i = 0; i < c.roots.size() && i < 2; ++i) {
      out->a[i] = c.roots[i].a;
      out->branch[i] = BranchCode(c.roots[i].branch);
    }
    out->discriminant = c.discriminant;
    out->c1 = c.coeffs.c1;
    out->c0 = c.coeffs.c0;
    return PDW_OK;
  });
}

pdw_status pdw_oracle_edge_lengths(int n, double alpha, double gamma, double* out, int cap,
                                   int* count) {
  if (!count || (cap > 0 && !out)) return NullArg();
  return Guard([&] {
    const pdw::TileParams p{n, alpha, gamma};
    pdw::Validate(p);
    const auto as = pdw::OracleEdgeLengths(p);
    *count = static_cast<int>(as.size());
    for (int i = 0; i < cap && i < *count; ++i) out[i] = as[i];
    return PDW_OK;
  });
}

pdw_status pdw_quad_build(int n, double alpha, double gamma, double a, pdw_quad** out) {
  if (!out) return NullArg();
  *out = nullptr;
  return Guard([&] {
    *out = new pdw_quad{pdw::BuildQuadrangle({n, alpha, gamma}, a)};
    return PDW_OK;
  });
}

pdw_status pdw_quad_info_get(const pdw_quad* q, pdw_quad_info* out) {
  if (!q || !out) return NullArg();
  return Guard([&] {
    const auto& t = q->q;
    *out = {};
    out->n = t.params.n;
    out->alpha = t.alpha();
    out->beta = t.beta();
    out->gamma = t.gamma();
    out->delta = t.delta();
    out->a = t.a;
    out->b = t.b;
    out->c = t.c;
    out->phi = t.phi;
    out->phi_prime = t.phi_prime;
    out->branch = BranchCode(t.branch);
    const auto vs = t.Vertices();
    const auto ang = t.CornerAngles();
    out->area = pdw::sph::PolygonArea(vs, ang);
    for (int k = 0; k < 4; ++k) {
      out->vertices[k][0] = vs[k].x();
      out->vertices[k][1] = vs[k].y();
      out->vertices[k][2] = vs[k].z();
    }
    return PDW_OK;
  });
}

void pdw_quad_free(pdw_quad* q) { delete q; }

pdw_status pdw_tiling_assemble(const pdw_quad* q, pdw_tiling** out) {
  if (!q || !out) return NullArg();
  *out = nullptr;
  return Guard([&] {
    *out = new pdw_tiling{pdw::Assemble(q->q)};
    return PDW_OK;
  });
}

pdw_status pdw_tiling_from_coords(int n, double phi, double a, pdw_tiling** out) {
  if (!out) return NullArg();
  *out = nullptr;
  return Guard([&] {
    *out = new pdw_tiling{pdw::FromCoords(n, {phi, a})};
    return PDW_OK;
  });
}

pdw_status pdw_tiling_from_json(const char* json, pdw_tiling** out) {
  if (!json || !out) return NullArg();
  *out = nullptr;
  return Guard([&] {
    *out = new pdw_tiling{pdw::TilingFromJson(json)};
    return PDW_OK;
  });
}

pdw_status pdw_tiling_to_json(const pdw_tiling* t, char** out) {
  if (!t || !out) return NullArg();
  *out = nullptr;
  return Guard([&] {
    *out = CopyString(pdw::TilingToJson(t->t));
    return PDW_OK;
  });
}

pdw_status pdw_tiling_to_obj(const pdw_tiling* t, int chords, char** out) {
  if (!t || !out) return NullArg();
  *out = nullptr;
  return Guard([&] {
    *out = CopyString(pdw::TilingToObj(t->t, chords));
    return PDW_OK;
  });
}

int pdw_tiling_n(const pdw_tiling* t) { return t ? t->t.n() : 0; }

void pdw_tiling_free(pdw_tiling* t) { delete t; }

void pdw_string_free(char* s) { std::free(s); }

pdw_status pdw_tiling_verify(const pdw_tiling* t, pdw_verify_report* out) {
  return pdw_tiling_verify_tol(t, 1e-9, out);
}

pdw_status pdw_tiling_verify_tol(const pdw_tiling* t, double tol, pdw_verify_report* out) {
  if (!t || !out) return NullArg();
  if (!(tol > 0)) return Fail(PDW_ERR_DOMAIN, "tolerance must be positive");
  return Guard([&] {
    const auto rep = pdw::Verify(t->t, tol);
    *out = {};
    auto get = [&](const char* name, int* flag, double* res) {
      const auto* c = rep.Find(name);
      *flag = c->passed;
      *res = c->residual;
    };
    get("edge_agreement", &out->edge_agreement, &out->edge_residual);
    get("realized_angles", &out->realized_angles, &out->realized_residual);
    get("angle_sums", &out->angle_sums, &out->angle_sum_residual);
    get("area", &out->area, &out->area_residual);
    get("congruence", &out->congruence, &out->congruence_residual);
    get("no_straight_angle", &out->no_straight_angle, &out->min_straight_distance);
    out->area_sum = rep.area_sum;
    out->ok = rep.ok();
    return PDW_OK;
  });
}

pdw_status pdw_tiling_coords(const pdw_tiling* t, double* phi, double* a, int* region) {
  if (!t || !phi || !a) return NullArg();
  return Guard([&] {
    const auto c = pdw::ToCoords(t->t);
    *phi = c.phi;
    *a = c.a;
    if (region) *region = pdw::RegionOfCoords(t->t.n(), c);
    return PDW_OK;
  });
}

pdw_status pdw_tiling_isohedral(const pdw_tiling* t, pdw_isohedral_report* out) {
  if (!t || !out) return NullArg();
  return Guard([&] {
    const auto r = pdw::IsIsohedral(t->t);
    *out = {r.isohedral, r.all_automorphisms_preserve, r.automorphism_count,
            r.label_preserving_count, r.witness_from, r.witness_to};
    return PDW_OK;
  });
}

pdw_status pdw_tiling_axes(const pdw_tiling* t, pdw_axis* out, int cap, int* count,
                           int* dihedral) {
  return pdw_tiling_axes_tol(t, 1e-7, out, cap, count, dihedral);
}

pdw_status pdw_tiling_axes_tol(const pdw_tiling* t, double tol, pdw_axis* out, int cap,
                               int* count, int* dihedral) {
  if (!t || !count || (cap > 0 && !out)) return NullArg();
  if (!(tol > 0)) return Fail(PDW_ERR_DOMAIN, "tolerance must be positive");
  return Guard([&] {
    const auto axes = pdw::DetectAxes(t->t, tol);
    *count = static_cast<int>(axes.size());
    for (int i = 0; i < cap && i < *count; ++i) {
      const auto& ax = axes[i];
      out[i] = {{ax.dir.x(), ax.dir.y(), ax.dir.z()},
                ax.order,
                ax.through == "vertex" ? 0 : (ax.through == "edge" ? 1 : 2)};
    }
    if (dihedral) *dihedral = pdw::HasDihedralAxes(axes, t->t.n(), tol);
    return PDW_OK;
  });
}

pdw_status pdw_search(const pdw_quad* q, int allow_reflection, pdw_tiling_list** out) {
  if (!q || !out) return NullArg();
  *out = nullptr;
  return Guard([&] {
    auto layouts = pdw::ExhaustiveLayouts(q->q, allow_reflection != 0);
    auto list = std::make_unique<pdw_tiling_list>();
    for (auto& l : layouts) {
      list->items.push_back(pdw_tiling{std::move(l.tiling)});
      list->reflected.push_back(l.reflected_count);
    }
    *out = list.release();
    return PDW_OK;
  });
}

size_t pdw_tiling_list_size(const pdw_tiling_list* l) { return l ? l->items.size() : 0; }

const pdw_tiling* pdw_tiling_list_at(const pdw_tiling_list* l, size_t i) {
  if (!l || i >= l->items.size()) return nullptr;
  return &l->items[i];
}

int pdw_tiling_list_reflected(const pdw_tiling_list* l, size_t i) {
  if (!l || i >= l->reflected.size()) return -1;
  return l->reflected[i];
}

void pdw_tiling_list_free(pdw_tiling_list* l) { delete l; }

pdw_status pdw_special_pair(pdw_tiling** isohedral, pdw_tiling** non_isohedral) {
  if (!isohedral || !non_isohedral) return NullArg();
  *isohedral = *non_isohedral = nullptr;
  return Guard([&] {
    auto [iso, non] = pdw::SpecialPair();
    auto a = std::make_unique<pdw_tiling>(pdw_tiling{std::move(iso)});
    auto b = std::make_unique<pdw_tiling>(pdw_tiling{std::move(non)});
    *isohedral = a.release();
    *non_isohedral = b.release();
    return PDW_OK;
  });
}

pdw_status pdw_matchings_json(int faces, char** out) {
  if (!out) return NullArg();
  *out = nullptr;
  return Guard([&] {
    *out = CopyString(pdw::MatchingsJson(faces));
    return PDW_OK;
  });
}

pdw_status pdw_phase_csv(int n, int res, char** out) {
  if (!out) return NullArg();
  *out = nullptr;
  return Guard([&] {
    *out = CopyString(pdw::PhaseCsv(n, res));
    return PDW_OK;
  });
}

}  // extern "C"
