#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "packlab/constructions.hpp"
#include "packlab/error.hpp"
#include "packlab/incidence_sl2.hpp"
#include "packlab/packing.hpp"

using namespace packlab;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::ok;
}

}  // namespace

TEST_CASE("multiplicative subgroups enumerate by order") {
  FieldCtx f13 = FieldCtx::make(13);
  CHECK(mult_subgroup(f13, 3) == std::vector<i64>{1, 3, 9});
  CHECK(mult_subgroup(f13, 1) == std::vector<i64>{1});
  CHECK(mult_subgroup(f13, 12).size() == 12);
  FieldCtx f7 = FieldCtx::make(7);
  CHECK(code_of([&] { mult_subgroup(f7, 4); }) == Errc::not_a_divisor);
}

TEST_CASE("vertical-slice configuration squares the image size") {
  FieldCtx f = FieldCtx::make(13);
  NamedConfig cfg = obs1_config(f, 3, 12);
  CHECK(cfg.actual.at("E") == 3);
  CHECK(cfg.actual.at("S") == 48);
  CHECK(cfg.actual.at("image") == 12);
  // 12^2 = 48 * 3: the image size squares to |S||E|.
  CHECK(cfg.actual.at("image") * cfg.actual.at("image") ==
        cfg.actual.at("S") * cfg.actual.at("E"));
  CHECK(code_of([&] { obs1_config(f, 5, 12); }) == Errc::not_a_divisor);
}

TEST_CASE("line-union configuration realizes its target set exactly") {
  FieldCtx f = FieldCtx::make(5);
  NamedConfig cfg = obs2_config(f, 2);
  CHECK(cfg.actual.at("S") == 5 * 2 * 4);
  CHECK(cfg.actual.at("Eprime") == 2 * 4 + 1);
  CHECK(cfg.actual.at("image") == 9);
  CHECK(cfg.actual.at("image_equals_Eprime") == 1);
  CHECK(code_of([&] { obs2_config(f, 7); }) == Errc::invalid_argument);
}

TEST_CASE("origin-line transporters have p(p-1) elements mapping the line") {
  FieldCtx f = FieldCtx::make(5);
  Line l1 = line_through_origin(f, Vec2{1, 0});
  Line l2 = line_through_origin(f, Vec2{0, 1});
  MatrixSet s = line_transporter(f, l1, l2);
  CHECK(s.size() == 20);
  for (const SL2Elem& g : s.sl2())
    CHECK(line_contains(f, l2, sl2_act(f, g, Vec2{1, 0})));
  Line off = make_line(f, 1, 1, 2);
  CHECK(code_of([&] { line_transporter(f, off, l2); }) ==
        Errc::not_origin_line);
}

TEST_CASE("the stabilizer pairing gives p^2(p-1) incidences on its line") {
  for (i64 p : {3, 5, 7}) {
    FieldCtx f = FieldCtx::make(p);
    Line l = line_through_origin(f, Vec2{1, 0});
    MatrixSet s = line_transporter(f, l, l);
    PointSet2 pts = PointSet2::make(f, line_points(f, l));
    CHECK(count_incidences(f, pts, pts, s) == p * p * (p - 1));
  }
}

TEST_CASE("the extremal product family has collision count (p-1)^5") {
  for (i64 p : {3, 5}) {
    FieldCtx f = FieldCtx::make(p);
    MatrixSet s = energy_extremal_family(f);
    CHECK(s.size() == (p - 1) * (p - 1));
    i64 d = p - 1;
    CHECK(energy2(f, s) == d * d * d * d * d);
  }
}

TEST_CASE("scaling-orbit sharpness fills a strip of d lines") {
  FieldCtx f = FieldCtx::make(13);
  NamedConfig cfg = prop11_sharpness(f, 4);
  CHECK(cfg.actual.at("E") == 52);
  CHECK(cfg.actual.at("S") == 52);
  CHECK(cfg.actual.at("image") == 52);
}

TEST_CASE("one point per direction under the full group covers the plane") {
  FieldCtx f = FieldCtx::make(5);
  NamedConfig cfg = prop13_extremal(f);
  CHECK(cfg.actual.at("E") == 6);
  CHECK(cfg.actual.at("S") == 120);
  CHECK(cfg.actual.at("image") == 24);
  CHECK(cfg.actual.at("k1") == 1);
  CHECK(cfg.actual.at("k2") == 6);
}

TEST_CASE("slice configurations in the unitriangular group") {
  FieldCtx f = FieldCtx::make(5);

  NamedConfig full = obs3_config(f, {0, 1});
  CHECK(full.actual.at("X") == 125);
  CHECK(full.actual.at("E") == 50);
  CHECK(full.actual.at("image") == 50);

  NamedConfig sums = obs4_config(f, {0, 1});
  CHECK(sums.actual.at("X") == 50);
  CHECK(sums.actual.at("E") == 20);
  // image = p * sum over z in A of |A + zA| = 5 * (2 + 3).
  CHECK(sums.actual.at("image") == 25);
  CHECK(sums.actual.at("image_at_most_X") == 1);

  NamedConfig cover = obs5_config(f, 0, 1, 3);
  CHECK(cover.actual.at("X") == 25);
  CHECK(cover.actual.at("E") == 45);
  CHECK(cover.actual.at("image") == 45);
}

TEST_CASE("the dispatcher resolves ids and validates parameters") {
  FieldCtx f = FieldCtx::make(13);
  CHECK_FALSE(construction_ids().empty());

  NamedConfig cfg = make_construction(f, "obs1", {{"dA", 3}, {"dB", 12}});
  CHECK(cfg.actual.at("image") == 12);

  CHECK(code_of([&] { make_construction(f, "obs1", {{"dA", 3}}); }) ==
        Errc::missing_param);
  CHECK(code_of([&] { make_construction(f, "zzz", {}); }) ==
        Errc::invalid_argument);

  NamedConfig lt = make_construction(f, "line-transporter",
                                     {{"d1", 0}, {"d2", 13}});
  CHECK(lt.actual.at("S") == 13 * 12);

  NamedConfig en = make_construction(f, "energy-extremal", {});
  CHECK(en.actual.at("S") == 144);
  CHECK(en.actual.at("energy2") == 144 * 144 * 12);
}

TEST_CASE("every configuration arrives self-verified") {
  FieldCtx f = FieldCtx::make(5);
  for (const std::string& id : construction_ids()) {
    std::map<std::string, i64> params;
    if (id == "obs1") params = {{"dA", 2}, {"dB", 4}};
    if (id == "obs2") params = {{"num_lines", 2}};
    if (id == "prop11") params = {{"d", 4}};
    if (id == "line-transporter") params = {{"d1", 0}, {"d2", 1}};
    if (id == "obs3") params = {{"t_size", 2}};
    if (id == "obs4") params = {{"a_size", 2}};
    if (id == "obs5") params = {{"a_start", 0}, {"a_step", 1}, {"a_size", 2}};
    NamedConfig cfg = make_construction(f, id, params);
    for (const auto& [key, want] : cfg.expected) {
      REQUIRE(cfg.actual.count(key) == 1);
      CHECK(cfg.actual.at(key) == want);
    }
  }
}
