/* Copyright 2026 The pdwtile Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to libpdwtile.
 *
 * Every fallible call returns a pdw_status; on failure the message is
 * available from pdw_last_error() (thread-local, valid until the next call
 * on the same thread). Objects are opaque and owned by the caller once
 * returned; release them with the matching *_free. Strings returned through
 * char** are released with pdw_string_free. Angles are in radians.
 */

#ifndef PDWTILE_PDWTILE_H_
#define PDWTILE_PDWTILE_H_

#include <stddef.h>

#if defined(_WIN32)
#define PDW_API __declspec(dllexport)
#else
#define PDW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pdw_status {
  PDW_OK = 0,
  PDW_ERR_DOMAIN = 1,
  PDW_ERR_NO_TRIANGLE = 2,
  PDW_ERR_SINGULAR = 3,
  PDW_ERR_NOT_A_TILE = 4,
  PDW_ERR_DEGENERATE = 5,
  PDW_ERR_VERIFY = 6,
  PDW_ERR_SEARCH = 7,
  PDW_ERR_IO = 8,
  PDW_ERR_PARSE = 9,
  PDW_ERR_INTERNAL = 10
} pdw_status;

typedef enum pdw_branch { PDW_BRANCH_MINUS = 0, PDW_BRANCH_PLUS = 1, PDW_BRANCH_DOUBLE = 2 } pdw_branch;

typedef struct pdw_quad pdw_quad;
typedef struct pdw_tiling pdw_tiling;
typedef struct pdw_tiling_list pdw_tiling_list;

PDW_API const char* pdw_last_error(void);
PDW_API const char* pdw_status_name(pdw_status s);
PDW_API const char* pdw_version(void);

/* Region 0 is outside, 1..8 are B1..B8. */
typedef struct pdw_classification {
  int region;
  int multiplicity;
  int root_count;
  double a[2];
  int branch[2];
  double discriminant;
  double c1;
  double c0;
} pdw_classification;

PDW_API const char* pdw_region_name(int region);
PDW_API pdw_status pdw_classify(int n, double alpha, double gamma, pdw_classification* out);
/* Writes up to cap values; *count receives the total found. */
PDW_API pdw_status pdw_oracle_edge_lengths(int n, double alpha, double gamma, double* out,
                                           int cap, int* count);

typedef struct pdw_quad_info {
  int n;
  double alpha, beta, gamma, delta;
  double a, b, c;
  double phi, phi_prime;
  int branch;
  double area;
  double vertices[4][3]; /* N, v0, v1, v2 counterclockwise */
} pdw_quad_info;

PDW_API pdw_status pdw_quad_build(int n, double alpha, double gamma, double a, pdw_quad** out);
PDW_API pdw_status pdw_quad_info_get(const pdw_quad* q, pdw_quad_info* out);
PDW_API void pdw_quad_free(pdw_quad* q);

PDW_API pdw_status pdw_tiling_assemble(const pdw_quad* q, pdw_tiling** out);
PDW_API pdw_status pdw_tiling_from_coords(int n, double phi, double a, pdw_tiling** out);
PDW_API pdw_status pdw_tiling_from_json(const char* json, pdw_tiling** out);
PDW_API pdw_status pdw_tiling_to_json(const pdw_tiling* t, char** out);
PDW_API pdw_status pdw_tiling_to_obj(const pdw_tiling* t, int chords, char** out);
PDW_API int pdw_tiling_n(const pdw_tiling* t);
PDW_API void pdw_tiling_free(pdw_tiling* t);
PDW_API void pdw_string_free(char* s);

typedef struct pdw_verify_report {
  int ok;
  int edge_agreement, realized_angles, angle_sums, area, congruence, no_straight_angle;
  double edge_residual, realized_residual, angle_sum_residual, area_residual;
  double congruence_residual, min_straight_distance;
  double area_sum;
} pdw_verify_report;

PDW_API pdw_status pdw_tiling_verify(const pdw_tiling* t, pdw_verify_report* out);
/* As pdw_tiling_verify with an explicit residual tolerance (default 1e-9). */
PDW_API pdw_status pdw_tiling_verify_tol(const pdw_tiling* t, double tol, pdw_verify_report* out);
/* region receives 1..4 for A1..A4, 0 outside. */
PDW_API pdw_status pdw_tiling_coords(const pdw_tiling* t, double* phi, double* a, int* region);

typedef struct pdw_isohedral_report {
  int isohedral;
  int all_automorphisms_preserve;
  int automorphism_count;
  int label_preserving_count;
  int witness_from, witness_to;
} pdw_isohedral_report;

PDW_API pdw_status pdw_tiling_isohedral(const pdw_tiling* t, pdw_isohedral_report* out);

typedef struct pdw_axis {
  double dir[3];
  int order;
  int through; /* 0 vertex, 1 edge midpoint, 2 face center */
} pdw_axis;

/* Writes up to cap axes; *count receives the total. *dihedral is set to 1
 * if an n-fold axis has n perpendicular 2-fold axes. */
PDW_API pdw_status pdw_tiling_axes(const pdw_tiling* t, pdw_axis* out, int cap, int* count,
                                   int* dihedral);
/* As pdw_tiling_axes with an explicit symmetry tolerance (default 1e-7). */
PDW_API pdw_status pdw_tiling_axes_tol(const pdw_tiling* t, double tol, pdw_axis* out, int cap,
                                       int* count, int* dihedral);

PDW_API pdw_status pdw_search(const pdw_quad* q, int allow_reflection, pdw_tiling_list** out);
PDW_API size_t pdw_tiling_list_size(const pdw_tiling_list* l);
/* Borrowed; valid while the list lives. */
PDW_API const pdw_tiling* pdw_tiling_list_at(const pdw_tiling_list* l, size_t i);
PDW_API int pdw_tiling_list_reflected(const pdw_tiling_list* l, size_t i);
PDW_API void pdw_tiling_list_free(pdw_tiling_list* l);

PDW_API pdw_status pdw_special_pair(pdw_tiling** isohedral, pdw_tiling** non_isohedral);
PDW_API pdw_status pdw_matchings_json(int faces, char** out);
PDW_API pdw_status pdw_phase_csv(int n, int res, char** out);

#ifdef __cplusplus
}
#endif

#endif /* PDWTILE_PDWTILE_H_ */
