/* C interface to the packlab core: exact incidence, energy, packing, and
 * construction computations over F_p behind opaque handles.
 *
 * Every function returns a pk_status (PK_OK = 0 on success). On failure the
 * output parameters are left untouched and pk_last_error() returns a
 * thread-local description of what went wrong.
 *
 * Strings returned through char** are heap-allocated; release them with
 * pk_string_free. Handles are released with their matching _destroy call.
 */
#ifndef PACKLAB_H
#define PACKLAB_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pk_status {
  PK_OK = 0,
  PK_NOT_PRIME = 1,
  PK_EVEN_MODULUS = 2,
  PK_ZERO_INVERSE = 3,
  PK_CAP_EXCEEDED = 4,
  PK_ZERO_VECTOR = 5,
  PK_DEPENDENT_BASIS = 6,
  PK_MIXED_MODULUS = 7,
  PK_CONVENTION_MISMATCH = 8,
  PK_HYPOTHESIS_VIOLATED = 9,
  PK_EMPTY_SET = 10,
  PK_NOT_A_DIVISOR = 11,
  PK_INFEASIBLE_FIBER = 12,
  PK_NOT_ORIGIN_LINE = 13,
  PK_DIMENSION_MISMATCH = 14,
  PK_MISSING_PARAM = 15,
  PK_PRECONDITION_VIOLATED = 16,
  PK_PARSE_ERROR = 17,
  PK_IO_ERROR = 18,
  PK_INVALID_ARGUMENT = 19,
  PK_INTERNAL = 20
} pk_status;

typedef struct pk_field pk_field;
typedef struct pk_points pk_points;     /* planar (dim 2) or spatial (dim 3) */
typedef struct pk_matrices pk_matrices; /* sl2, h1-matrix, or h1-symmetric */

/* Thread-local message for the most recent failure in this thread. */
const char* pk_last_error(void);
void pk_string_free(char* s);

/* ---- field ---- */
pk_status pk_field_create(int64_t p, pk_field** out);
void pk_field_destroy(pk_field* f);
int64_t pk_field_p(const pk_field* f);

/* ---- point sets ---- */
/* coords: n consecutive (x1, x2) pairs, each reduced mod p. Duplicates are
 * collapsed. */
pk_status pk_points2_create(const pk_field* f, const int64_t* coords, int64_t n,
                            pk_points** out);
/* coords: n consecutive (x1, x2, x3) triples, each reduced mod p. */
pk_status pk_points3_create(const pk_field* f, const int64_t* coords, int64_t n,
                            pk_points** out);
/* Reads a point file; returns its field and the deduplicated set. */
pk_status pk_points_load(const char* path, pk_field** field_out, pk_points** out);
pk_status pk_points_save(const pk_field* f, const pk_points* pts, const char* path);
void pk_points_destroy(pk_points* pts);
int64_t pk_points_size(const pk_points* pts);
int pk_points_dim(const pk_points* pts);
/* Planar sets: k1 = max points on one origin line, k2 = occupied directions
 * (eps reported 0). Spatial sets: eps such that the largest (x2, x3)-fiber
 * is p^(1-eps) (k1 = that fiber size, k2 = 0). */
pk_status pk_points_stats(const pk_field* f, const pk_points* pts, int64_t* k1,
                          int64_t* k2, double* eps);
/* size distinct random points; dim 2 draws from F_p^2 minus the origin,
 * dim 3 from F_p^2 x (F_p minus 0) when nonzero_third, else all of F_p^3. */
pk_status pk_points_random(const pk_field* f, int dim, int64_t size,
                           int nonzero_third, uint64_t seed, pk_points** out);

/* ---- matrix sets ---- */
/* entries: n consecutive (a, b, c, d) rows, reduced mod p, each with det 1. */
pk_status pk_matrices_create_sl2(const pk_field* f, const int64_t* entries,
                                 int64_t n, pk_matrices** out);
/* entries: n consecutive (x, y, t) rows, reduced mod p; convention
 * "h1-matrix" or "h1-symmetric". */
pk_status pk_matrices_create_h1(const pk_field* f, const int64_t* entries,
                                int64_t n, const char* convention,
                                pk_matrices** out);
pk_status pk_matrices_load(const char* path, pk_field** field_out,
                           pk_matrices** out);
pk_status pk_matrices_save(const pk_field* f, const pk_matrices* m,
                           const char* path);
void pk_matrices_destroy(pk_matrices* m);
int64_t pk_matrices_size(const pk_matrices* m);
/* "sl2", "h1-matrix", or "h1-symmetric". Static storage; do not free. */
const char* pk_matrices_kind(const pk_matrices* m);
/* Full enumeration: |SL2| = p(p^2-1), |H1| = p^3; refuses p > cap. */
pk_status pk_matrices_enumerate(const pk_field* f, const char* kind, int64_t cap,
                                pk_matrices** out);
pk_status pk_matrices_random(const pk_field* f, const char* kind, int64_t size,
                             uint64_t seed, pk_matrices** out);

/* ---- exact counts ---- */
/* Incidences between A x B and S: pairs with theta b = a. Dimensions must
 * match the matrix kind (2 with sl2, 3 with the h1 kinds). */
pk_status pk_count_incidences(const pk_field* f, const pk_points* a,
                              const pk_points* b, const pk_matrices* s,
                              int64_t* out);
/* Pairs ((x,y),(u,v)) in (A x B)^2 with equal skew values. */
pk_status pk_energy1(const pk_field* f, const pk_points* a, const pk_points* b,
                     int64_t* out);
/* Quadruples (g1, g2, g3, g4) in S^4 with g1 g2 = g3 g4. */
pk_status pk_energy2(const pk_field* f, const pk_matrices* s, int64_t* out);
/* max(0, log_p(|S|^3 / energy2)). */
pk_status pk_empirical_epsilon(const pk_field* f, const pk_matrices* s,
                               double* out);
/* Spatial quadruple counts over 3-dimensional sets: which = 0 counts the
 * bilinear-collision quadruples, which = 1 the constrained variant that is
 * always at most p|A||B|. */
pk_status pk_count_quadruples(const pk_field* f, const pk_points* a,
                              const pk_points* b, int which, int64_t* out);
/* Image {g e : g in S, e in E}; dimensions as in pk_count_incidences. */
pk_status pk_image_set(const pk_field* f, const pk_matrices* s,
                       const pk_points* e, pk_points** out);
/* Point of E meeting the most directions with another point of E. */
pk_status pk_rich_point(const pk_field* f, const pk_points* e, int64_t* x1,
                        int64_t* x2, int64_t* directions);
/* Incidence count reconstructed through the discrete transform (p <= 13). */
pk_status pk_fourier_incidence(const pk_field* f, const pk_points* a,
                               const pk_points* b, const pk_matrices* s,
                               double* out);

/* ---- reports (JSON strings) ---- */
/* Evaluates the named inequality. a/b/s may be NULL when the theorem does
 * not need them; eps/gamma are optional overrides (NULL = default). */
pk_status pk_evaluate_bound(const pk_field* f, const char* theorem_id,
                            const pk_points* a, const pk_points* b,
                            const pk_matrices* s, const double* eps,
                            const double* gamma, char** json_out);
/* Weighted point-line instance drawn from seed with the given support
 * sizes, for the weighted incidence bounds ("sdz", "sdz-multi"). */
pk_status pk_evaluate_bound_weighted(const pk_field* f, const char* theorem_id,
                                     int64_t n_points, int64_t n_lines,
                                     uint64_t seed, char** json_out);
/* Packing comparison |S(E)| (or its spatial counterpart) vs. the predicted
 * lower bound for the named statement. */
pk_status pk_pack_compare(const pk_field* f, const char* theorem_id,
                          const pk_points* e, const pk_matrices* s,
                          const double* eps, const double* gamma,
                          char** json_out);
/* Generates a named configuration. params_json: flat object of integer
 * parameters, e.g. {"dA":3,"dB":12}; NULL means no parameters. Any of
 * e_out / s_out / aux_out may be NULL; aux_out receives the auxiliary
 * target set when the construction defines one. manifest_json_out receives
 * the expected-vs-actual statistics. */
pk_status pk_construct(const pk_field* f, const char* id,
                       const char* params_json, pk_points** e_out,
                       pk_matrices** s_out, pk_points** aux_out,
                       char** manifest_json_out);
/* Runs the seeded invariant battery; *all_passed is 1 iff every check
 * passed; json_out receives the per-check results. */
pk_status pk_verify(const pk_field* f, uint64_t seed, int64_t cap,
                    char** json_out, int* all_passed);
/* Runs a sweep specification (JSON, see the documentation) and returns the
 * CSV. min_ratio receives the smallest packing actual/predicted ratio when
 * has_packing_rows is set to 1. */
pk_status pk_sweep(const char* spec_json, int threads, char** csv_out,
                   double* min_ratio, int* has_packing_rows);
/* Largest |S ∩ gH|/|S| over the checked proper-subgroup coset families,
 * against the threshold p^(-gamma/2). */
pk_status pk_coset_report(const pk_field* f, const pk_matrices* s, double gamma,
                          char** json_out);

/* Known identifier lists as JSON arrays. kind: "bounds-sl2", "bounds-h1",
 * "packing", "constructions". */
pk_status pk_list_ids(const char* kind, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* PACKLAB_H */
