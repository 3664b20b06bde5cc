#include "packlab.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "packlab/constructions.hpp"
#include "packlab/error.hpp"
#include "packlab/fourier.hpp"
#include "packlab/fp.hpp"
#include "packlab/groups.hpp"
#include "packlab/incidence_h1.hpp"
#include "packlab/incidence_sl2.hpp"
#include "packlab/io.hpp"
#include "packlab/packing.hpp"
#include "packlab/rng.hpp"
#include "packlab/sweep.hpp"
#include "packlab/verify.hpp"

using namespace packlab;

struct pk_field {
  FieldCtx f;
};

// Either the planar or the spatial payload is populated, matching dim.
struct pk_points {
  int dim = 2;
  PointSet2 s2;
  PointSet3 s3;
};

struct pk_matrices {
  MatrixSet set;
};

namespace {

thread_local std::string g_last_error;

void set_error(std::string msg) { g_last_error = std::move(msg); }

pk_status arg_error(const char* msg) {
  set_error(std::string("invalid_argument: ") + msg);
  return PK_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
pk_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    return PK_OK;
  } catch (const Error& e) {
    set_error(std::string(errc_name(e.code())) + ": " + e.what());
    return static_cast<pk_status>(static_cast<int>(e.code()));
  } catch (const nlohmann::json::exception& e) {
    set_error(std::string("parse_error: ") + e.what());
    return PK_PARSE_ERROR;
  } catch (const std::exception& e) {
    set_error(std::string("internal: ") + e.what());
    return PK_INTERNAL;
  }
}

const PointSet2& as_planar(const pk_points* pts) {
  if (pts->dim != 2)
    fail(Errc::dimension_mismatch, "expected a 2-dimensional point set");
  return pts->s2;
}

const PointSet3& as_spatial(const pk_points* pts) {
  if (pts->dim != 3)
    fail(Errc::dimension_mismatch, "expected a 3-dimensional point set");
  return pts->s3;
}

void check_field(const pk_field* f, i64 set_p, const char* what) {
  if (f->f.p != set_p)
    fail(Errc::mixed_modulus, std::string(what) + " built over p=" +
                                  std::to_string(set_p) +
                                  ", field has p=" + std::to_string(f->f.p));
}

void check_points(const pk_field* f, const pk_points* pts) {
  check_field(f, pts->dim == 2 ? pts->s2.p() : pts->s3.p(), "point set");
}

void check_matrices(const pk_field* f, const pk_matrices* m) {
  check_field(f, m->set.p(), "matrix set");
}

pk_points* wrap(PointSet2 s) {
  pk_points* out = new pk_points;
  out->dim = 2;
  out->s2 = std::move(s);
  return out;
}

pk_points* wrap(PointSet3 s) {
  pk_points* out = new pk_points;
  out->dim = 3;
  out->s3 = std::move(s);
  return out;
}

H1Convention parse_convention(const char* kind) {
  std::string k = kind ? kind : "";
  if (k == "h1-matrix") return H1Convention::matrix;
  if (k == "h1-symmetric") return H1Convention::symmetric;
  fail(Errc::invalid_argument, "unknown group kind '" + k + "'");
}

bool is_h1_bound(const std::string& id) {
  for (const std::string& known : bound_theorem_ids_h1())
    if (known == id) return true;
  return false;
}

std::optional<double> opt_of(const double* v) {
  return v ? std::optional<double>(*v) : std::nullopt;
}

}  // namespace

extern "C" {

const char* pk_last_error(void) { return g_last_error.c_str(); }

void pk_string_free(char* s) { std::free(s); }

pk_status pk_field_create(int64_t p, pk_field** out) {
  if (!out) return arg_error("null output pointer");
  return guarded([&] {
    pk_field* f = new pk_field{FieldCtx::make(p)};
    *out = f;
  });
}

void pk_field_destroy(pk_field* f) { delete f; }

int64_t pk_field_p(const pk_field* f) { return f ? f->f.p : 0; }

pk_status pk_points2_create(const pk_field* f, const int64_t* coords,
                            int64_t n, pk_points** out) {
  if (!f || !out || (!coords && n > 0)) return arg_error("null pointer");
  if (n < 0) return arg_error("negative point count");
  return guarded([&] {
    std::vector<Vec2> pts;
    pts.reserve(static_cast<size_t>(n));
    for (int64_t i = 0; i < n; ++i)
      pts.push_back(
          Vec2{f->f.reduce(coords[2 * i]), f->f.reduce(coords[2 * i + 1])});
    *out = wrap(PointSet2::make(f->f, std::move(pts)));
  });
}

pk_status pk_points3_create(const pk_field* f, const int64_t* coords,
                            int64_t n, pk_points** out) {
  if (!f || !out || (!coords && n > 0)) return arg_error("null pointer");
  if (n < 0) return arg_error("negative point count");
  return guarded([&] {
    std::vector<Vec3> pts;
    pts.reserve(static_cast<size_t>(n));
    for (int64_t i = 0; i < n; ++i)
      pts.push_back(Vec3{f->f.reduce(coords[3 * i]),
                         f->f.reduce(coords[3 * i + 1]),
                         f->f.reduce(coords[3 * i + 2])});
    *out = wrap(PointSet3::make(f->f, std::move(pts)));
  });
}

pk_status pk_points_load(const char* path, pk_field** field_out,
                         pk_points** out) {
  if (!path || !field_out || !out) return arg_error("null pointer");
  return guarded([&] {
    LoadedPoints loaded = read_points_file(path);
    pk_points* pts = loaded.dim == 2
                         ? wrap(PointSet2::make(loaded.field, loaded.pts2))
                         : wrap(PointSet3::make(loaded.field, loaded.pts3));
    *field_out = new pk_field{std::move(loaded.field)};
    *out = pts;
  });
}

pk_status pk_points_save(const pk_field* f, const pk_points* pts,
                         const char* path) {
  if (!f || !pts || !path) return arg_error("null pointer");
  return guarded([&] {
    check_points(f, pts);
    if (pts->dim == 2)
      write_points_file(path, f->f, pts->s2.points());
    else
      write_points_file(path, f->f, pts->s3.points());
  });
}

void pk_points_destroy(pk_points* pts) { delete pts; }

int64_t pk_points_size(const pk_points* pts) {
  if (!pts) return 0;
  return pts->dim == 2 ? pts->s2.size() : pts->s3.size();
}

int pk_points_dim(const pk_points* pts) { return pts ? pts->dim : 0; }

pk_status pk_points_stats(const pk_field* f, const pk_points* pts, int64_t* k1,
                          int64_t* k2, double* eps) {
  if (!f || !pts) return arg_error("null pointer");
  return guarded([&] {
    check_points(f, pts);
    if (pts->dim == 2) {
      const DirectionStats& st = pts->s2.direction_stats();
      if (k1) *k1 = st.k1;
      if (k2) *k2 = st.k2;
      if (eps) *eps = 0.0;
    } else {
      const FiberStats& st = pts->s3.fiber_stats();
      if (k1) *k1 = st.max_fiber;
      if (k2) *k2 = 0;
      if (eps) *eps = st.empirical_eps;
    }
  });
}

pk_status pk_points_random(const pk_field* f, int dim, int64_t size,
                           int nonzero_third, uint64_t seed, pk_points** out) {
  if (!f || !out) return arg_error("null pointer");
  if (dim != 2 && dim != 3) return arg_error("dim must be 2 or 3");
  return guarded([&] {
    Rng rng(seed);
    *out = dim == 2 ? wrap(random_point_set2(f->f, size, rng))
                    : wrap(random_point_set3(f->f, size, rng,
                                             nonzero_third != 0));
  });
}

pk_status pk_matrices_create_sl2(const pk_field* f, const int64_t* entries,
                                 int64_t n, pk_matrices** out) {
  if (!f || !out || (!entries && n > 0)) return arg_error("null pointer");
  if (n < 0) return arg_error("negative element count");
  return guarded([&] {
    std::vector<SL2Elem> elems;
    elems.reserve(static_cast<size_t>(n));
    for (int64_t i = 0; i < n; ++i)
      elems.push_back(SL2Elem{
          f->f.reduce(entries[4 * i]), f->f.reduce(entries[4 * i + 1]),
          f->f.reduce(entries[4 * i + 2]), f->f.reduce(entries[4 * i + 3])});
    *out = new pk_matrices{MatrixSet::make_sl2(f->f, std::move(elems))};
  });
}

pk_status pk_matrices_create_h1(const pk_field* f, const int64_t* entries,
                                int64_t n, const char* convention,
                                pk_matrices** out) {
  if (!f || !out || !convention || (!entries && n > 0))
    return arg_error("null pointer");
  if (n < 0) return arg_error("negative element count");
  return guarded([&] {
    H1Convention conv = parse_convention(convention);
    std::vector<H1Elem> elems;
    elems.reserve(static_cast<size_t>(n));
    for (int64_t i = 0; i < n; ++i)
      elems.push_back(H1Elem{f->f.reduce(entries[3 * i]),
                             f->f.reduce(entries[3 * i + 1]),
                             f->f.reduce(entries[3 * i + 2])});
    *out = new pk_matrices{MatrixSet::make_h1(f->f, std::move(elems), conv)};
  });
}

pk_status pk_matrices_load(const char* path, pk_field** field_out,
                           pk_matrices** out) {
  if (!path || !field_out || !out) return arg_error("null pointer");
  return guarded([&] {
    LoadedMatrices loaded = read_matrices_file(path);
    pk_matrices* m = new pk_matrices{std::move(loaded.set)};
    *field_out = new pk_field{std::move(loaded.field)};
    *out = m;
  });
}

pk_status pk_matrices_save(const pk_field* f, const pk_matrices* m,
                           const char* path) {
  if (!f || !m || !path) return arg_error("null pointer");
  return guarded([&] {
    check_matrices(f, m);
    write_matrices_file(path, m->set);
  });
}

void pk_matrices_destroy(pk_matrices* m) { delete m; }

int64_t pk_matrices_size(const pk_matrices* m) { return m ? m->set.size() : 0; }

const char* pk_matrices_kind(const pk_matrices* m) {
  if (!m) return "";
  return group_kind_name(m->set.kind());
}

pk_status pk_matrices_enumerate(const pk_field* f, const char* kind,
                                int64_t cap, pk_matrices** out) {
  if (!f || !kind || !out) return arg_error("null pointer");
  return guarded([&] {
    std::string k = kind;
    MatrixSet set = k == "sl2"
                        ? enumerate_sl2(f->f, cap)
                        : enumerate_h1(f->f, cap, parse_convention(kind));
    *out = new pk_matrices{std::move(set)};
  });
}

pk_status pk_matrices_random(const pk_field* f, const char* kind, int64_t size,
                             uint64_t seed, pk_matrices** out) {
  if (!f || !kind || !out) return arg_error("null pointer");
  return guarded([&] {
    Rng rng(seed);
    std::string k = kind;
    MatrixSet set = k == "sl2"
                        ? random_sl2_set(f->f, size, rng)
                        : random_h1_set(f->f, size, rng, parse_convention(kind));
    *out = new pk_matrices{std::move(set)};
  });
}

pk_status pk_count_incidences(const pk_field* f, const pk_points* a,
                              const pk_points* b, const pk_matrices* s,
                              int64_t* out) {
  if (!f || !a || !b || !s || !out) return arg_error("null pointer");
  return guarded([&] {
    check_points(f, a);
    check_points(f, b);
    check_matrices(f, s);
    *out = s->set.kind() == GroupKind::sl2
               ? count_incidences(f->f, as_planar(a), as_planar(b), s->set)
               : count_incidences_h1(f->f, as_spatial(a), as_spatial(b),
                                     s->set);
  });
}

pk_status pk_energy1(const pk_field* f, const pk_points* a, const pk_points* b,
                     int64_t* out) {
  if (!f || !a || !b || !out) return arg_error("null pointer");
  return guarded([&] {
    check_points(f, a);
    check_points(f, b);
    *out = energy1(f->f, as_planar(a), as_planar(b));
  });
}

pk_status pk_energy2(const pk_field* f, const pk_matrices* s, int64_t* out) {
  if (!f || !s || !out) return arg_error("null pointer");
  return guarded([&] {
    check_matrices(f, s);
    *out = energy2(f->f, s->set);
  });
}

pk_status pk_empirical_epsilon(const pk_field* f, const pk_matrices* s,
                               double* out) {
  if (!f || !s || !out) return arg_error("null pointer");
  return guarded([&] {
    check_matrices(f, s);
    *out = empirical_epsilon(f->f, s->set);
  });
}

pk_status pk_count_quadruples(const pk_field* f, const pk_points* a,
                              const pk_points* b, int which, int64_t* out) {
  if (!f || !a || !b || !out) return arg_error("null pointer");
  if (which != 0 && which != 1) return arg_error("which must be 0 or 1");
  return guarded([&] {
    check_points(f, a);
    check_points(f, b);
    *out = which == 0 ? count_N(f->f, as_spatial(a), as_spatial(b))
                      : count_Nprime(f->f, as_spatial(a), as_spatial(b));
  });
}

pk_status pk_image_set(const pk_field* f, const pk_matrices* s,
                       const pk_points* e, pk_points** out) {
  if (!f || !s || !e || !out) return arg_error("null pointer");
  return guarded([&] {
    check_points(f, e);
    check_matrices(f, s);
    *out = s->set.kind() == GroupKind::sl2
               ? wrap(image_set(f->f, s->set, as_planar(e)))
               : wrap(image_set3(f->f, s->set, as_spatial(e)));
  });
}

pk_status pk_rich_point(const pk_field* f, const pk_points* e, int64_t* x1,
                        int64_t* x2, int64_t* directions) {
  if (!f || !e) return arg_error("null pointer");
  return guarded([&] {
    check_points(f, e);
    RichPointInfo info = find_rich_point(f->f, as_planar(e));
    if (x1) *x1 = info.point.x1;
    if (x2) *x2 = info.point.x2;
    if (directions) *directions = info.rich_directions;
  });
}

pk_status pk_fourier_incidence(const pk_field* f, const pk_points* a,
                               const pk_points* b, const pk_matrices* s,
                               double* out) {
  if (!f || !a || !b || !s || !out) return arg_error("null pointer");
  return guarded([&] {
    check_points(f, a);
    check_points(f, b);
    check_matrices(f, s);
    *out = incidence_via_fourier(f->f, as_planar(a), as_planar(b), s->set);
  });
}

pk_status pk_evaluate_bound(const pk_field* f, const char* theorem_id,
                            const pk_points* a, const pk_points* b,
                            const pk_matrices* s, const double* eps,
                            const double* gamma, char** json_out) {
  if (!f || !theorem_id || !json_out) return arg_error("null pointer");
  return guarded([&] {
    if (a) check_points(f, a);
    if (b) check_points(f, b);
    if (s) check_matrices(f, s);
    std::string id = theorem_id;
    BoundReport report;
    if (is_h1_bound(id)) {
      H1BoundInputs in;
      if (a) in.a = &as_spatial(a);
      if (b) in.b = &as_spatial(b);
      if (s) in.x = &s->set;
      in.eps = opt_of(eps);
      report = evaluate_bound_h1(f->f, id, in);
    } else {
      BoundInputs in;
      if (a) in.a = &as_planar(a);
      if (b) in.b = &as_planar(b);
      if (s) in.s = &s->set;
      in.eps = opt_of(eps);
      in.gamma = opt_of(gamma);
      report = evaluate_bound(f->f, id, in);
    }
    *json_out = dup_string(to_json(report).dump(2));
  });
}

pk_status pk_evaluate_bound_weighted(const pk_field* f, const char* theorem_id,
                                     int64_t n_points, int64_t n_lines,
                                     uint64_t seed, char** json_out) {
  if (!f || !theorem_id || !json_out) return arg_error("null pointer");
  if (n_points < 1 || n_lines < 1)
    return arg_error("support sizes must be positive");
  return guarded([&] {
    Rng rng(seed);
    std::vector<std::pair<Vec2, i64>> praw;
    std::vector<std::pair<Line, i64>> lraw;
    for (int64_t j = 0; j < n_points; ++j)
      praw.push_back({Vec2{rng.residue(f->f), rng.residue(f->f)},
                      1 + static_cast<i64>(rng.below(3))});
    for (int64_t j = 0; j < n_lines; ++j) {
      Line l = rng.below(2)
                   ? line_from_slope(f->f, rng.residue(f->f), rng.residue(f->f))
                   : line_vertical(f->f, rng.residue(f->f));
      lraw.push_back({l, 1 + static_cast<i64>(rng.below(3))});
    }
    WeightedPoints wp = WeightedPoints::make(f->f, std::move(praw));
    WeightedLines wl = WeightedLines::make(f->f, std::move(lraw));
    BoundInputs in;
    in.wp = &wp;
    in.wl = &wl;
    BoundReport report = evaluate_bound(f->f, theorem_id, in);
    *json_out = dup_string(to_json(report).dump(2));
  });
}

pk_status pk_pack_compare(const pk_field* f, const char* theorem_id,
                          const pk_points* e, const pk_matrices* s,
                          const double* eps, const double* gamma,
                          char** json_out) {
  if (!f || !theorem_id || !e || !s || !json_out)
    return arg_error("null pointer");
  return guarded([&] {
    check_points(f, e);
    check_matrices(f, s);
    PackingOptions opt;
    opt.eps = opt_of(eps);
    opt.gamma = opt_of(gamma);
    std::string id = theorem_id;
    PackingReport report =
        id == "thm-1.5"
            ? compare_packing_h1(f->f, as_spatial(e), s->set, opt)
            : compare_packing(f->f, id, as_planar(e), s->set, opt);
    *json_out = dup_string(to_json(report).dump(2));
  });
}

pk_status pk_construct(const pk_field* f, const char* id,
                       const char* params_json, pk_points** e_out,
                       pk_matrices** s_out, pk_points** aux_out,
                       char** manifest_json_out) {
  if (!f || !id) return arg_error("null pointer");
  return guarded([&] {
    std::map<std::string, i64> params;
    if (params_json && *params_json) {
      nlohmann::json spec = nlohmann::json::parse(params_json);
      if (!spec.is_object())
        fail(Errc::parse_error, "params must be a JSON object");
      for (auto it = spec.begin(); it != spec.end(); ++it) {
        if (!it.value().is_number_integer())
          fail(Errc::parse_error, "param '" + it.key() + "' must be an integer");
        params[it.key()] = it.value().get<i64>();
      }
    }
    NamedConfig cfg = make_construction(f->f, id, params);
    if (e_out) {
      if (cfg.e2)
        *e_out = wrap(*cfg.e2);
      else if (cfg.e3)
        *e_out = wrap(*cfg.e3);
      else
        *e_out = nullptr;
    }
    if (s_out) *s_out = cfg.s ? new pk_matrices{*cfg.s} : nullptr;
    if (aux_out) *aux_out = cfg.eprime ? wrap(*cfg.eprime) : nullptr;
    if (manifest_json_out)
      *manifest_json_out = dup_string(to_json(cfg).dump(2));
  });
}

pk_status pk_verify(const pk_field* f, uint64_t seed, int64_t cap,
                    char** json_out, int* all_passed_out) {
  if (!f) return arg_error("null pointer");
  return guarded([&] {
    std::vector<CheckResult> results = run_verify_suite(f->f, seed, cap);
    if (json_out) *json_out = dup_string(to_json(results).dump(2));
    if (all_passed_out) *all_passed_out = all_passed(results) ? 1 : 0;
  });
}

pk_status pk_sweep(const char* spec_json, int threads, char** csv_out,
                   double* min_ratio, int* has_packing_rows) {
  if (!spec_json || !csv_out) return arg_error("null pointer");
  return guarded([&] {
    nlohmann::json spec = nlohmann::json::parse(spec_json);
    SweepResult result = run_sweep(spec, threads);
    *csv_out = dup_string(result.csv);
    if (min_ratio) *min_ratio = result.min_ratio;
    if (has_packing_rows) *has_packing_rows = result.has_packing_rows ? 1 : 0;
  });
}

pk_status pk_coset_report(const pk_field* f, const pk_matrices* s,
                          double gamma, char** json_out) {
  if (!f || !s || !json_out) return arg_error("null pointer");
  return guarded([&] {
    check_matrices(f, s);
    CosetReport r = max_coset_intersection(f->f, s->set, gamma);
    nlohmann::json j{{"max_ratio", r.max_ratio},
                     {"max_count", r.max_count},
                     {"witness", r.witness},
                     {"threshold", r.threshold},
                     {"condition_holds", r.bg_condition_holds},
                     {"exceptional_slack", r.exceptional_slack},
                     {"checked_families", r.checked_families},
                     {"unchecked_families", r.unchecked_families}};
    *json_out = dup_string(j.dump(2));
  });
}

pk_status pk_list_ids(const char* kind, char** json_out) {
  if (!kind || !json_out) return arg_error("null pointer");
  return guarded([&] {
    std::string k = kind;
    std::vector<std::string> ids;
    if (k == "bounds-sl2")
      ids = bound_theorem_ids();
    else if (k == "bounds-h1")
      ids = bound_theorem_ids_h1();
    else if (k == "packing")
      ids = packing_theorem_ids();
    else if (k == "constructions")
      ids = construction_ids();
    else
      fail(Errc::invalid_argument, "unknown id kind '" + k + "'");
    *json_out = dup_string(nlohmann::json(ids).dump(2));
  });
}

}  // extern "C"
