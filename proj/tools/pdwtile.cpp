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

// pdwtile: command-line front end over the libpdwtile C interface.
//
// Exit codes: 0 success, 2 usage or domain error, 3 verification failure.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "expr.hpp"
#include "pdwtile/pdwtile.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitVerify = 3;

// Status carried out of a subcommand as an exception so that handlers can
// stay linear.
struct Exit {
  int code;
  std::string message;
};

int ExitCodeFor(pdw_status s) {
  switch (s) {
    case PDW_OK: return kExitOk;
    case PDW_ERR_VERIFY:
    case PDW_ERR_SEARCH: return kExitVerify;
    case PDW_ERR_INTERNAL: return 1;
    default: return kExitUsage;
  }
}

void Check(pdw_status s) {
  if (s != PDW_OK) throw Exit{ExitCodeFor(s), std::string(pdw_status_name(s)) + ": " + pdw_last_error()};
}

struct QuadDeleter { void operator()(pdw_quad* q) const { pdw_quad_free(q); } };
struct TilingDeleter { void operator()(pdw_tiling* t) const { pdw_tiling_free(t); } };
struct ListDeleter { void operator()(pdw_tiling_list* l) const { pdw_tiling_list_free(l); } };
using QuadPtr = std::unique_ptr<pdw_quad, QuadDeleter>;
using TilingPtr = std::unique_ptr<pdw_tiling, TilingDeleter>;
using ListPtr = std::unique_ptr<pdw_tiling_list, ListDeleter>;

std::string TakeString(char* s) {
  std::string out(s ? s : "");
  pdw_string_free(s);
  return out;
}

std::string Fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct Options {
  bool deg = false;
  int n = 0;
  std::string alpha, gamma, a, phi;
  int res = 200;
  int faces = 6;
  int chords = 32;
  bool reflect = false;
  std::string out, in, format = "json", out_dir;
  double verify_tol = 1e-9;
  double axis_tol = 1e-7;
};

double Angle(const Options& o, const std::string& text, const char* name) {
  if (text.empty()) throw Exit{kExitUsage, std::string("missing --") + name};
  double v;
  try {
    v = pdwcli::EvalExpr(text);
  } catch (const std::invalid_argument& e) {
    throw Exit{kExitUsage, e.what()};
  }
  return o.deg ? v * std::numbers::pi / 180 : v;
}

void Emit(const Options& o, const std::string& text) {
  if (o.out.empty() || o.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f || !(f << text)) throw Exit{kExitUsage, "cannot write " + o.out};
}

void WriteFile(const std::string& path, const std::string& text) {
  std::error_code ec;
  const auto dir = std::filesystem::path(path).parent_path();
  if (!dir.empty()) std::filesystem::create_directories(dir, ec);
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw Exit{kExitUsage, "cannot write " + path};
}

std::string ReadFile(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Exit{kExitUsage, "cannot read " + path};
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string BranchName(int b) {
  return b == PDW_BRANCH_MINUS ? "minus" : (b == PDW_BRANCH_PLUS ? "plus" : "double");
}

pdw_verify_report VerifyOrReport(const Options& o, const pdw_tiling* t, std::ostream& log) {
  pdw_verify_report r;
  Check(pdw_tiling_verify_tol(t, o.verify_tol, &r));
  log << "verify: " << (r.ok ? "pass" : "FAIL") << "\n"
      << "  edge_agreement " << (r.edge_agreement ? "pass" : "FAIL") << " " << Fmt(r.edge_residual) << "\n"
      << "  realized_angles " << (r.realized_angles ? "pass" : "FAIL") << " " << Fmt(r.realized_residual) << "\n"
      << "  angle_sums " << (r.angle_sums ? "pass" : "FAIL") << " " << Fmt(r.angle_sum_residual) << "\n"
      << "  area " << (r.area ? "pass" : "FAIL") << " " << Fmt(r.area_residual) << " (sum " << Fmt(r.area_sum) << ")\n"
      << "  congruence " << (r.congruence ? "pass" : "FAIL") << " " << Fmt(r.congruence_residual) << "\n"
      << "  no_straight_angle " << (r.no_straight_angle ? "pass" : "FAIL") << " " << Fmt(r.min_straight_distance) << "\n";
  return r;
}

void Describe(const Options& o, const pdw_tiling* t, std::ostream& os) {
  double phi, a;
  int region;
  Check(pdw_tiling_coords(t, &phi, &a, &region));
  pdw_isohedral_report iso;
  Check(pdw_tiling_isohedral(t, &iso));
  std::vector<pdw_axis> axes(128);
  int count = 0, dihedral = 0;
  Check(pdw_tiling_axes_tol(t, o.axis_tol, axes.data(), static_cast<int>(axes.size()), &count,
                            &dihedral));
  os << "coords: phi " << Fmt(phi) << " a " << Fmt(a) << " region "
     << (region ? "A" + std::to_string(region) : std::string("outside")) << "\n"
     << "isohedral: " << (iso.isohedral ? "yes" : "no") << " (label-preserving automorphisms "
     << iso.label_preserving_count << "/" << iso.automorphism_count << ")\n";
  if (!iso.isohedral)
    os << "  witness: no symmetry maps face " << iso.witness_from << " to face " << iso.witness_to << "\n";
  os << "axes:";
  for (int i = 0; i < count && i < static_cast<int>(axes.size()); ++i) os << " " << axes[i].order;
  os << "\ndihedral axis system: " << (dihedral ? "yes" : "no") << "\n";
}

int RunClassify(const Options& o) {
  pdw_classification c;
  Check(pdw_classify(o.n, Angle(o, o.alpha, "alpha"), Angle(o, o.gamma, "gamma"), &c));
  std::cout << "region: " << pdw_region_name(c.region) << "\n"
            << "multiplicity: " << c.multiplicity << "\n"
            << "coefficients: c1 " << Fmt(c.c1) << " c0 " << Fmt(c.c0) << "\n"
            << "discriminant: " << Fmt(c.discriminant) << "\n";
  for (int i = 0; i < c.root_count && i < 2; ++i)
    std::cout << "root: a " << Fmt(c.a[i]) << " branch " << BranchName(c.branch[i]) << "\n";
  return kExitOk;
}

std::vector<double> EdgeLengthsFor(const Options& o, int n, double alpha, double gamma) {
  if (!o.a.empty()) return {Angle(o, o.a, "a")};
  pdw_classification c;
  Check(pdw_classify(n, alpha, gamma, &c));
  if (c.root_count == 0)
    throw Exit{kExitUsage, std::string("no tile: (alpha, gamma) lies in region ") + pdw_region_name(c.region)};
  return std::vector<double>(c.a, c.a + std::min(c.root_count, 2));
}

int RunTile(const Options& o) {
  const double al = Angle(o, o.alpha, "alpha"), ga = Angle(o, o.gamma, "gamma");
  for (double a : EdgeLengthsFor(o, o.n, al, ga)) {
    pdw_quad* raw = nullptr;
    Check(pdw_quad_build(o.n, al, ga, a, &raw));
    QuadPtr q(raw);
    pdw_quad_info in;
    Check(pdw_quad_info_get(q.get(), &in));
    std::cout << "tile: n " << in.n << " branch " << BranchName(in.branch) << "\n"
              << "  angles: alpha " << Fmt(in.alpha) << " beta " << Fmt(in.beta) << " gamma "
              << Fmt(in.gamma) << " delta " << Fmt(in.delta) << "\n"
              << "  edges: a " << Fmt(in.a) << " b " << Fmt(in.b) << " c " << Fmt(in.c) << "\n"
              << "  phi " << Fmt(in.phi) << " phi' " << Fmt(in.phi_prime) << " area " << Fmt(in.area) << "\n";
    static const char* kNames[] = {"N", "v0", "v1", "v2"};
    for (int k = 0; k < 4; ++k)
      std::cout << "  " << kNames[k] << " " << Fmt(in.vertices[k][0]) << " " << Fmt(in.vertices[k][1])
                << " " << Fmt(in.vertices[k][2]) << "\n";
  }
  return kExitOk;
}

std::string Serialize(const Options& o, const pdw_tiling* t) {
  char* s = nullptr;
  if (o.format == "json") Check(pdw_tiling_to_json(t, &s));
  else if (o.format == "obj") Check(pdw_tiling_to_obj(t, o.chords, &s));
  else throw Exit{kExitUsage, "unsupported tiling format " + o.format + " (json or obj)"};
  return TakeString(s);
}

int RunTiling(const Options& o) {
  TilingPtr t;
  if (!o.phi.empty()) {
    pdw_tiling* raw = nullptr;
    Check(pdw_tiling_from_coords(o.n, Angle(o, o.phi, "phi"), Angle(o, o.a, "a"), &raw));
    t.reset(raw);
  } else {
    const double al = Angle(o, o.alpha, "alpha"), ga = Angle(o, o.gamma, "gamma");
    pdw_quad* rq = nullptr;
    Check(pdw_quad_build(o.n, al, ga, EdgeLengthsFor(o, o.n, al, ga).front(), &rq));
    QuadPtr q(rq);
    pdw_tiling* raw = nullptr;
    Check(pdw_tiling_assemble(q.get(), &raw));
    t.reset(raw);
  }
  const auto rep = VerifyOrReport(o, t.get(), std::cerr);
  Emit(o, Serialize(o, t.get()));
  return rep.ok ? kExitOk : kExitVerify;
}

int RunVerify(const Options& o) {
  if (o.in.empty()) throw Exit{kExitUsage, "missing --in"};
  const std::string text = ReadFile(o.in);
  pdw_tiling* raw = nullptr;
  Check(pdw_tiling_from_json(text.c_str(), &raw));
  TilingPtr t(raw);
  const auto rep = VerifyOrReport(o, t.get(), std::cout);
  if (rep.ok) Describe(o, t.get(), std::cout);
  return rep.ok ? kExitOk : kExitVerify;
}

int RunPhase(const Options& o) {
  char* s = nullptr;
  Check(pdw_phase_csv(o.n, o.res, &s));
  Emit(o, TakeString(s));
  return kExitOk;
}

int RunMatchings(const Options& o) {
  char* s = nullptr;
  Check(pdw_matchings_json(o.faces, &s));
  Emit(o, TakeString(s));
  return kExitOk;
}

int RunSearch(const Options& o) {
  const double al = Angle(o, o.alpha, "alpha"), ga = Angle(o, o.gamma, "gamma");
  pdw_quad* rq = nullptr;
  Check(pdw_quad_build(o.n, al, ga, EdgeLengthsFor(o, o.n, al, ga).front(), &rq));
  QuadPtr q(rq);
  pdw_tiling_list* rl = nullptr;
  Check(pdw_search(q.get(), o.reflect, &rl));
  ListPtr list(rl);
  const size_t k = pdw_tiling_list_size(list.get());
  std::cout << "layouts: " << k << "\n";
  for (size_t i = 0; i < k; ++i) {
    const pdw_tiling* t = pdw_tiling_list_at(list.get(), i);
    std::cout << "[" << i << "] reflected tiles " << pdw_tiling_list_reflected(list.get(), i) << "\n";
    Describe(o, t, std::cout);
    if (!o.out_dir.empty()) {
      char* s = nullptr;
      Check(pdw_tiling_to_json(t, &s));
      WriteFile(o.out_dir + "/layout_" + std::to_string(i) + ".json", TakeString(s));
    }
  }
  return kExitOk;
}

int RunSpecial(const Options& o) {
  pdw_tiling *ri = nullptr, *rn = nullptr;
  Check(pdw_special_pair(&ri, &rn));
  TilingPtr iso(ri), non(rn);
  int code = kExitOk;
  for (auto [name, t] : {std::pair{"isohedral", iso.get()}, std::pair{"non_isohedral", non.get()}}) {
    std::cout << "== " << name << "\n";
    if (!VerifyOrReport(o, t, std::cout).ok) code = kExitVerify;
    Describe(o, t, std::cout);
    if (!o.out_dir.empty()) WriteFile(o.out_dir + "/" + name + "." + o.format, Serialize(o, t));
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spherical tilings by congruent quadrangles over pseudo-double wheels"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--deg", o.deg, "Read angle arguments in degrees");

  auto add_tile_opts = [&](CLI::App* c, bool need_angles) {
    c->add_option("--n", o.n, "Half the face count (beta = 2pi/n)")->required()->check(CLI::Range(3, 1000));
    auto* al = c->add_option("--alpha", o.alpha, "Angle alpha (expression)");
    auto* ga = c->add_option("--gamma", o.gamma, "Angle gamma (expression)");
    if (need_angles) { al->required(); ga->required(); }
  };
  auto add_deg = [&](CLI::App* c) { c->add_flag("--deg", o.deg, "Read angle arguments in degrees"); };
  auto add_tols = [&](CLI::App* c) {
    c->add_option("--tol", o.verify_tol, "Verification residual tolerance")
        ->check(CLI::PositiveNumber)->capture_default_str();
    c->add_option("--axis-tol", o.axis_tol, "Symmetry axis tolerance")
        ->check(CLI::PositiveNumber)->capture_default_str();
  };

  auto* classify = app.add_subcommand("classify", "Region, multiplicity and edge lengths of (alpha, gamma)");
  add_tile_opts(classify, true);
  add_deg(classify);

  auto* tile = app.add_subcommand("tile", "Build and print the quadrangle");
  add_tile_opts(tile, true);
  tile->add_option("--a", o.a, "Edge length a (default: every admissible root)");
  add_deg(tile);

  auto* tiling = app.add_subcommand("tiling", "Assemble, verify and export a tiling");
  add_tols(tiling);
  add_tile_opts(tiling, false);
  tiling->add_option("--a", o.a, "Edge length a");
  tiling->add_option("--phi", o.phi, "Coordinate phi (with --a; replaces --alpha/--gamma)");
  tiling->add_option("--format", o.format, "json or obj")->check(CLI::IsMember({"json", "obj"}));
  tiling->add_option("--chords", o.chords, "Chords per edge in OBJ output")->check(CLI::Range(1, 100000));
  tiling->add_option("--out,-o", o.out, "Output file (default stdout)");
  add_deg(tiling);

  auto* verify = app.add_subcommand("verify", "Verify a tiling JSON file");
  add_tols(verify);
  verify->add_option("--in,-i", o.in, "Tiling JSON")->required();

  auto* phase = app.add_subcommand("phase", "Phase-diagram CSV over (alpha, gamma)");
  phase->add_option("--n", o.n, "Half the face count")->required()->check(CLI::Range(3, 1000));
  phase->add_option("--res", o.res, "Grid resolution per axis")->check(CLI::Range(2, 100000));
  phase->add_option("--out,-o", o.out, "Output file (default stdout)");

  auto* matchings = app.add_subcommand("matchings", "Perfect face-matchings of a pseudo-double wheel");
  matchings->add_option("--faces", o.faces, "Face count F (even, >= 6)")->required();
  matchings->add_option("--out,-o", o.out, "Output file (default stdout)");

  auto* search = app.add_subcommand("search", "Exhaustive layouts of a tile over the 2n-face wheel");
  add_tols(search);
  add_tile_opts(search, true);
  search->add_option("--a", o.a, "Edge length a (default: first admissible root)");
  search->add_flag("--reflect", o.reflect, "Allow mirrored copies");
  search->add_option("--out-dir", o.out_dir, "Write each layout as JSON into this directory");
  add_deg(search);

  auto* special = app.add_subcommand("special", "The isohedral / non-isohedral pair of the double-root tile");
  add_tols(special);
  special->add_option("--out-dir", o.out_dir, "Write both tilings into this directory");
  special->add_option("--format", o.format, "json or obj")->check(CLI::IsMember({"json", "obj"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*classify) return RunClassify(o);
    if (*tile) return RunTile(o);
    if (*tiling) return RunTiling(o);
    if (*verify) return RunVerify(o);
    if (*phase) return RunPhase(o);
    if (*matchings) return RunMatchings(o);
    if (*search) return RunSearch(o);
    if (*special) return RunSpecial(o);
  } catch (const Exit& e) {
    std::cerr << "pdwtile: " << e.message << "\n";
    return e.code;
  }
  return kExitUsage;
}
