#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstring>
#include <string>

#include "json.hpp"
#include "packlab.h"

using nlohmann::json;

namespace {

// Takes ownership of a C string from the library and frees it.
std::string take(char* s) {
  std::string out = s ? s : "";
  pk_string_free(s);
  return out;
}

struct TempPath {
  std::string path;
  explicit TempPath(const std::string& name) {
    path = std::string("/tmp/packlab_capi_") + name;
  }
  ~TempPath() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("field creation validates the modulus and reports errors") {
  pk_field* f = nullptr;
  CHECK(pk_field_create(7, &f) == PK_OK);
  CHECK(pk_field_p(f) == 7);
  pk_field_destroy(f);

  pk_field* bad = nullptr;
  CHECK(pk_field_create(2, &bad) == PK_EVEN_MODULUS);
  CHECK(bad == nullptr);
  CHECK(pk_field_create(4, &bad) == PK_NOT_PRIME);
  CHECK(pk_field_create(1, &bad) == PK_NOT_PRIME);
  CHECK(std::strlen(pk_last_error()) > 0);
  CHECK(pk_field_create(7, nullptr) == PK_INVALID_ARGUMENT);
}

TEST_CASE("point sets round trip through memory and files") {
  pk_field* f = nullptr;
  REQUIRE(pk_field_create(5, &f) == PK_OK);

  const int64_t coords[] = {0, 1, 1, 2, 1, 2, 4, 4};
  pk_points* pts = nullptr;
  REQUIRE(pk_points2_create(f, coords, 4, &pts) == PK_OK);
  CHECK(pk_points_size(pts) == 3);
  CHECK(pk_points_dim(pts) == 2);

  int64_t k1 = 0, k2 = 0;
  double eps = -1.0;
  CHECK(pk_points_stats(f, pts, &k1, &k2, &eps) == PK_OK);
  CHECK(k1 >= 1);
  CHECK(k2 >= 1);
  CHECK(eps == 0.0);

  TempPath tmp("pts2.txt");
  REQUIRE(pk_points_save(f, pts, tmp.path.c_str()) == PK_OK);
  pk_field* f2 = nullptr;
  pk_points* back = nullptr;
  REQUIRE(pk_points_load(tmp.path.c_str(), &f2, &back) == PK_OK);
  CHECK(pk_field_p(f2) == 5);
  CHECK(pk_points_size(back) == 3);

  pk_points_destroy(back);
  pk_field_destroy(f2);
  pk_points_destroy(pts);

  // Raw coordinates are canonicalized mod p: 9 = 4 and -1 = 4 at p = 5.
  const int64_t wrapped[] = {0, 9, 0, -1, 0, 4};
  pk_points* canon = nullptr;
  REQUIRE(pk_points2_create(f, wrapped, 3, &canon) == PK_OK);
  CHECK(pk_points_size(canon) == 1);
  pk_points_destroy(canon);

  pk_points* spatial = nullptr;
  const int64_t c3[] = {0, 0, 1, 1, 2, 3};
  REQUIRE(pk_points3_create(f, c3, 2, &spatial) == PK_OK);
  CHECK(pk_points_dim(spatial) == 3);
  CHECK(pk_points_stats(f, spatial, &k1, &k2, &eps) == PK_OK);
  CHECK(k2 == 0);
  CHECK(eps > 0.0);
  pk_points_destroy(spatial);

  pk_points* rnd = nullptr;
  REQUIRE(pk_points_random(f, 2, 10, 0, 99, &rnd) == PK_OK);
  CHECK(pk_points_size(rnd) == 10);
  pk_points_destroy(rnd);

  pk_field_destroy(f);
}

TEST_CASE("matrix sets expose kind, size, and file round trips") {
  pk_field* f = nullptr;
  REQUIRE(pk_field_create(5, &f) == PK_OK);

  pk_matrices* all = nullptr;
  REQUIRE(pk_matrices_enumerate(f, "sl2", 31, &all) == PK_OK);
  CHECK(pk_matrices_size(all) == 120);
  CHECK(std::string(pk_matrices_kind(all)) == "sl2");

  TempPath tmp("mats.txt");
  REQUIRE(pk_matrices_save(f, all, tmp.path.c_str()) == PK_OK);
  pk_field* f2 = nullptr;
  pk_matrices* back = nullptr;
  REQUIRE(pk_matrices_load(tmp.path.c_str(), &f2, &back) == PK_OK);
  CHECK(pk_matrices_size(back) == 120);
  pk_matrices_destroy(back);
  pk_field_destroy(f2);
  pk_matrices_destroy(all);

  const int64_t h1rows[] = {1, 2, 3, 0, 0, 4};
  pk_matrices* h1 = nullptr;
  REQUIRE(pk_matrices_create_h1(f, h1rows, 2, "h1-symmetric", &h1) == PK_OK);
  CHECK(std::string(pk_matrices_kind(h1)) == "h1-symmetric");
  pk_matrices_destroy(h1);
  CHECK(pk_matrices_create_h1(f, h1rows, 2, "h1-parabolic", &h1) ==
        PK_INVALID_ARGUMENT);

  const int64_t notdet[] = {1, 1, 1, 1};
  pk_matrices* rej = nullptr;
  CHECK(pk_matrices_create_sl2(f, notdet, 1, &rej) == PK_INVALID_ARGUMENT);

  pk_matrices* rnd = nullptr;
  REQUIRE(pk_matrices_random(f, "h1-matrix", 7, 123, &rnd) == PK_OK);
  CHECK(pk_matrices_size(rnd) == 7);
  pk_matrices_destroy(rnd);

  pk_field_destroy(f);
}

TEST_CASE("exact counts agree across the C boundary") {
  pk_field* f = nullptr;
  REQUIRE(pk_field_create(5, &f) == PK_OK);
  pk_matrices* s = nullptr;
  REQUIRE(pk_matrices_enumerate(f, "sl2", 31, &s) == PK_OK);
  const int64_t line[] = {0, 0, 1, 0, 2, 0, 3, 0, 4, 0};
  pk_points* e = nullptr;
  REQUIRE(pk_points2_create(f, line, 5, &e) == PK_OK);

  int64_t count = -1;
  CHECK(pk_count_incidences(f, e, e, s, &count) == PK_OK);
  CHECK(count > 0);

  int64_t en1 = -1;
  CHECK(pk_energy1(f, e, e, &en1) == PK_OK);
  CHECK(en1 >= 0);

  int64_t en2 = -1;
  CHECK(pk_energy2(f, s, &en2) == PK_OK);
  // The full group satisfies g1 g2 = g3 g4 for |G|^3 quadruples.
  CHECK(en2 == 120LL * 120 * 120);
  double eps = -1.0;
  CHECK(pk_empirical_epsilon(f, s, &eps) == PK_OK);
  CHECK(eps == 0.0);

  pk_points* img = nullptr;
  REQUIRE(pk_image_set(f, s, e, &img) == PK_OK);
  // The full group sends the punctured line onto all nonzero points.
  CHECK(pk_points_size(img) == 25);
  pk_points_destroy(img);

  int64_t x1 = -1, x2 = -1, dirs = -1;
  CHECK(pk_rich_point(f, e, &x1, &x2, &dirs) == PK_OK);
  CHECK(dirs == 1);

  double fr = -1.0;
  CHECK(pk_fourier_incidence(f, e, e, s, &fr) == PK_OK);
  CHECK(fr == doctest::Approx(static_cast<double>(count)).epsilon(1e-6));

  // Dimension mismatch: spatial points with an sl2 set.
  const int64_t c3[] = {1, 1, 1};
  pk_points* sp = nullptr;
  REQUIRE(pk_points3_create(f, c3, 1, &sp) == PK_OK);
  int64_t dummy = 0;
  CHECK(pk_count_incidences(f, sp, sp, s, &dummy) == PK_DIMENSION_MISMATCH);
  int64_t q = 0;
  CHECK(pk_count_quadruples(f, sp, sp, 0, &q) == PK_OK);
  CHECK(q >= 1);
  pk_points_destroy(sp);

  pk_points_destroy(e);
  pk_matrices_destroy(s);
  pk_field_destroy(f);
}

TEST_CASE("bound evaluation returns structured JSON") {
  pk_field* f = nullptr;
  REQUIRE(pk_field_create(5, &f) == PK_OK);
  pk_matrices* s = nullptr;
  REQUIRE(pk_matrices_random(f, "sl2", 20, 11, &s) == PK_OK);
  pk_points* a = nullptr;
  REQUIRE(pk_points_random(f, 2, 8, 0, 5, &a) == PK_OK);
  pk_points* b = nullptr;
  REQUIRE(pk_points_random(f, 2, 8, 0, 6, &b) == PK_OK);

  char* out = nullptr;
  REQUIRE(pk_evaluate_bound(f, "thm-2.1", a, b, s, nullptr, nullptr, &out) ==
          PK_OK);
  json j = json::parse(take(out));
  CHECK(j["theorem"] == "thm-2.1");
  CHECK(j["p"] == 5);
  CHECK(j.contains("exact"));
  CHECK(j.contains("predicted"));

  CHECK(pk_evaluate_bound(f, "thm-2.1", nullptr, nullptr, nullptr, nullptr,
                          nullptr, &out) == PK_MISSING_PARAM);
  CHECK(pk_evaluate_bound(f, "zzz", a, b, s, nullptr, nullptr, &out) ==
        PK_INVALID_ARGUMENT);

  char* wout = nullptr;
  REQUIRE(pk_evaluate_bound_weighted(f, "sdz-multi", 10, 10, 77, &wout) ==
          PK_OK);
  json wj = json::parse(take(wout));
  CHECK(wj["theorem"] == "sdz-multi");
  CHECK(wj["exact"].get<double>() <= wj["predicted"].get<double>());

  pk_points_destroy(b);
  pk_points_destroy(a);
  pk_matrices_destroy(s);
  pk_field_destroy(f);
}

TEST_CASE("packing comparison and coset scan cross the boundary intact") {
  pk_field* f = nullptr;
  REQUIRE(pk_field_create(5, &f) == PK_OK);
  pk_matrices* s = nullptr;
  REQUIRE(pk_matrices_enumerate(f, "sl2", 31, &s) == PK_OK);
  pk_points* e = nullptr;
  REQUIRE(pk_points_random(f, 2, 8, 0, 41, &e) == PK_OK);

  char* out = nullptr;
  REQUIRE(pk_pack_compare(f, "prop-1.1", e, s, nullptr, nullptr, &out) == PK_OK);
  json j = json::parse(take(out));
  CHECK(j["theorem"] == "prop-1.1");
  CHECK(j["actual"].get<int64_t>() > 0);
  CHECK(j["ratio"].get<double>() > 0.0);

  double gamma = 0.5;
  REQUIRE(pk_coset_report(f, s, gamma, &out) == PK_OK);
  json cj = json::parse(take(out));
  CHECK(cj["max_count"] == 20);
  CHECK(cj["max_ratio"].get<double>() == doctest::Approx(1.0 / 6.0));

  pk_points_destroy(e);
  pk_matrices_destroy(s);
  pk_field_destroy(f);
}

TEST_CASE("constructions return sets, manifests, and parameter errors") {
  pk_field* f = nullptr;
  REQUIRE(pk_field_create(5, &f) == PK_OK);

  pk_points* e = nullptr;
  pk_matrices* s = nullptr;
  char* manifest = nullptr;
  REQUIRE(pk_construct(f, "obs1", "{\"dA\":1,\"dB\":4}", &e, &s, nullptr,
                       &manifest) == PK_OK);
  json j = json::parse(take(manifest));
  CHECK(j["id"] == "obs1");
  CHECK(j["actual"]["image"] == 4);
  CHECK(pk_points_size(e) == 1);
  CHECK(pk_matrices_size(s) == 16);
  pk_points_destroy(e);
  pk_matrices_destroy(s);

  CHECK(pk_construct(f, "obs1", "{\"dA\":1}", nullptr, nullptr, nullptr,
                     &manifest) == PK_MISSING_PARAM);
  CHECK(pk_construct(f, "obs1", "not json", nullptr, nullptr, nullptr,
                     &manifest) == PK_PARSE_ERROR);
  CHECK(pk_construct(f, "zzz", nullptr, nullptr, nullptr, nullptr,
                     &manifest) == PK_INVALID_ARGUMENT);

  pk_points* aux = nullptr;
  REQUIRE(pk_construct(f, "obs2", "{\"num_lines\":2}", nullptr, nullptr, &aux,
                       &manifest) == PK_OK);
  pk_string_free(manifest);
  REQUIRE(aux != nullptr);
  CHECK(pk_points_size(aux) == 9);
  pk_points_destroy(aux);

  pk_field_destroy(f);
}

TEST_CASE("the verification battery and sweeps run end to end") {
  pk_field* f = nullptr;
  REQUIRE(pk_field_create(3, &f) == PK_OK);
  char* out = nullptr;
  int ok = 0;
  REQUIRE(pk_verify(f, 2024, 31, &out, &ok) == PK_OK);
  CHECK(ok == 1);
  json j = json::parse(take(out));
  REQUIRE(j.is_array());
  CHECK_FALSE(j.empty());
  pk_field_destroy(f);

  const char* spec =
      "{\"seed\": 9, \"jobs\": [{\"kind\": \"random-sl2\", \"primes\": [5],"
      " \"trials\": 2, \"E_size\": 5, \"S_size\": 6,"
      " \"theorems\": [\"prop-1.1\"]}]}";
  char* csv = nullptr;
  double min_ratio = 0.0;
  int has_packing = 0;
  REQUIRE(pk_sweep(spec, 2, &csv, &min_ratio, &has_packing) == PK_OK);
  std::string text = take(csv);
  CHECK(text.rfind("p,E,S,", 0) == 0);
  CHECK(has_packing == 1);
  CHECK(min_ratio > 0.0);
  CHECK(pk_sweep("[]", 1, &csv, &min_ratio, &has_packing) == PK_PARSE_ERROR);
}

TEST_CASE("identifier lists are valid JSON arrays") {
  for (const char* kind :
       {"bounds-sl2", "bounds-h1", "packing", "constructions"}) {
    char* out = nullptr;
    REQUIRE(pk_list_ids(kind, &out) == PK_OK);
    json j = json::parse(take(out));
    REQUIRE(j.is_array());
    CHECK_FALSE(j.empty());
  }
  char* out = nullptr;
  CHECK(pk_list_ids("sonnets", &out) == PK_INVALID_ARGUMENT);
  CHECK(pk_list_ids(nullptr, &out) == PK_INVALID_ARGUMENT);
}
