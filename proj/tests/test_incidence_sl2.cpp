#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <functional>

#include "packlab/error.hpp"
#include "packlab/incidence_sl2.hpp"
#include "packlab/rng.hpp"

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

TEST_CASE("incidence fast path matches the triple loop") {
  FieldCtx f = FieldCtx::make(7);
  Rng rng(21);
  for (int t = 0; t < 10; ++t) {
    PointSet2 a = random_point_set2(f, 12, rng);
    PointSet2 b = random_point_set2(f, 9, rng);
    MatrixSet s = random_sl2_set(f, 15, rng);
    CHECK(count_incidences(f, a, b, s) == count_incidences_naive(f, a, b, s));
  }
}

TEST_CASE("a full transporter fiber contributes exactly p incidences") {
  FieldCtx f = FieldCtx::make(5);
  PointSet2 a = PointSet2::make(f, {Vec2{0, 1}});
  PointSet2 b = PointSet2::make(f, {Vec2{1, 0}});
  MatrixSet s = transporter_fiber(f, Vec2{1, 0}, Vec2{0, 1});
  CHECK(count_incidences(f, a, b, s) == 5);
}

TEST_CASE("skew collision count has a frozen small value") {
  FieldCtx f = FieldCtx::make(5);
  PointSet2 a = PointSet2::make(f, {Vec2{1, 0}, Vec2{0, 1}});
  // Skew values over A x A: 0, 4, 1, 0, so the collision count is 6.
  CHECK(energy1(f, a, a) == 6);
  CHECK(energy1_naive(f, a, a) == 6);
}

TEST_CASE("skew collision count matches the brute oracle") {
  FieldCtx f = FieldCtx::make(7);
  Rng rng(4);
  for (int t = 0; t < 10; ++t) {
    PointSet2 a = random_point_set2(f, 10, rng);
    PointSet2 b = random_point_set2(f, 8, rng);
    CHECK(energy1(f, a, b) == energy1_naive(f, a, b));
    CHECK(quad_skew_exact(f, b) == energy1(f, b, b));
  }
}

TEST_CASE("repeated-product count has frozen values on tiny sets") {
  FieldCtx f = FieldCtx::make(5);
  MatrixSet id_only = MatrixSet::make_sl2(f, {SL2Elem{1, 0, 0, 1}});
  CHECK(energy2(f, id_only) == 1);
  // {I, g}: products I, g, g, g^2 give collision count 1 + 4 + 1 = 6.
  MatrixSet two =
      MatrixSet::make_sl2(f, {SL2Elem{1, 0, 0, 1}, SL2Elem{1, 1, 0, 1}});
  CHECK(energy2(f, two) == 6);
  CHECK(energy2_naive(f, two) == 6);
  CHECK(empirical_epsilon(f, two) ==
        doctest::Approx(std::log(8.0 / 6.0) / std::log(5.0)));
}

TEST_CASE("repeated-product count matches the brute oracle") {
  FieldCtx f = FieldCtx::make(5);
  Rng rng(12);
  for (int t = 0; t < 8; ++t) {
    MatrixSet s = random_sl2_set(f, 14, rng);
    CHECK(energy2(f, s) == energy2_naive(f, s));
  }
}

TEST_CASE("lines carry p points and report containment") {
  FieldCtx f = FieldCtx::make(7);
  Line l = line_from_slope(f, 3, 2);
  std::vector<Vec2> pts = line_points(f, l);
  CHECK(pts.size() == 7);
  for (Vec2 v : pts) {
    CHECK(line_contains(f, l, v));
    CHECK(v.x2 == f.reduce(3 * v.x1 + 2));
  }
  Line vert = line_vertical(f, 4);
  for (Vec2 v : line_points(f, vert)) CHECK(v.x1 == 4);
  Line orig = line_through_origin(f, Vec2{1, 2});
  CHECK(line_contains(f, orig, Vec2{2, 4}));
  CHECK(line_contains(f, orig, Vec2{0, 0}));
  CHECK(code_of([&] { make_line(f, 0, 0, 3); }) == Errc::invalid_argument);
  CHECK(code_of([&] { line_through_origin(f, Vec2{0, 0}); }) ==
        Errc::zero_vector);
}

TEST_CASE("weighted point-line incidences match the naive accumulation") {
  FieldCtx f = FieldCtx::make(11);
  Rng rng(8);
  for (int t = 0; t < 10; ++t) {
    std::vector<std::pair<Vec2, i64>> praw;
    std::vector<std::pair<Line, i64>> lraw;
    for (int j = 0; j < 20; ++j)
      praw.push_back({Vec2{rng.residue(f), rng.residue(f)},
                      1 + static_cast<i64>(rng.below(3))});
    for (int j = 0; j < 15; ++j) {
      Line l = rng.below(2)
                   ? line_from_slope(f, rng.residue(f), rng.residue(f))
                   : line_vertical(f, rng.residue(f));
      lraw.push_back({l, 1 + static_cast<i64>(rng.below(3))});
    }
    WeightedPoints wp = WeightedPoints::make(f, praw);
    WeightedLines wl = WeightedLines::make(f, lraw);
    CHECK(weighted_pl_incidences(f, wp, wl) ==
          weighted_pl_incidences_naive(f, wp, wl));
  }
  CHECK(code_of([&] {
          WeightedPoints::make(f, {{Vec2{1, 1}, 0}});
        }) == Errc::invalid_argument);
}

TEST_CASE("weighted supports deduplicate by accumulating multiplicity") {
  FieldCtx f = FieldCtx::make(5);
  WeightedPoints wp =
      WeightedPoints::make(f, {{Vec2{1, 1}, 2}, {Vec2{1, 1}, 3}});
  CHECK(wp.items.size() == 1);
  CHECK(wp.items[0].second == 5);
  CHECK(wp.sum_m == 5);
  CHECK(wp.sum_m2 == 25);
}

TEST_CASE("bound reports decompose into main term plus error terms") {
  FieldCtx f = FieldCtx::make(11);
  Rng rng(30);
  PointSet2 a = random_point_set2(f, 18, rng);
  PointSet2 b = random_point_set2(f, 14, rng);
  MatrixSet s = random_sl2_set(f, 40, rng);
  BoundInputs in;
  in.a = &a;
  in.b = &b;
  in.s = &s;
  for (const std::string& id : {"thm-2.1", "thm-2.2", "thm-3.8"}) {
    BoundReport r = evaluate_bound(f, id, in);
    CHECK(r.theorem_id == id);
    CHECK(r.p == 11);
    CHECK(r.exact == count_incidences(f, a, b, s));
    double sum = 0.0;
    for (const TermValue& t : r.terms) sum += t.value;
    CHECK(r.predicted == doctest::Approx(r.main_term + r.log_factor * sum));
    CHECK(r.empirical_constant >= 0.0);
  }
  // Collision-count statements measure energies instead.
  CHECK(evaluate_bound(f, "lem-2.3", in).exact == energy1(f, a, b));
  CHECK(evaluate_bound(f, "lem-2.7", in).exact == quad_skew_exact(f, b));
  CHECK(evaluate_bound(f, "cor-3.6", in).exact == energy2(f, s));
}

TEST_CASE("energy bound needs only the matrix set") {
  FieldCtx f = FieldCtx::make(7);
  Rng rng(6);
  MatrixSet s = random_sl2_set(f, 30, rng);
  BoundInputs in;
  in.s = &s;
  BoundReport r = evaluate_bound(f, "bnp", in);
  CHECK(r.exact == energy2(f, s));
  CHECK(r.sizes.at("S") == 30);
}

TEST_CASE("weighted incidence bound holds on random instances") {
  FieldCtx f = FieldCtx::make(13);
  Rng rng(42);
  std::vector<std::pair<Vec2, i64>> praw;
  std::vector<std::pair<Line, i64>> lraw;
  for (int j = 0; j < 25; ++j)
    praw.push_back({Vec2{rng.residue(f), rng.residue(f)},
                    1 + static_cast<i64>(rng.below(3))});
  for (int j = 0; j < 25; ++j)
    lraw.push_back({line_from_slope(f, rng.residue(f), rng.residue(f)),
                    1 + static_cast<i64>(rng.below(3))});
  WeightedPoints wp = WeightedPoints::make(f, praw);
  WeightedLines wl = WeightedLines::make(f, lraw);
  BoundInputs in;
  in.wp = &wp;
  in.wl = &wl;
  for (const std::string& id : {"sdz", "sdz-multi"}) {
    BoundReport r = evaluate_bound(f, id, in);
    CHECK(r.exact == weighted_pl_incidences(f, wp, wl));
    CHECK(static_cast<double>(r.exact) <= r.predicted + 1e-9);
  }
}

TEST_CASE("unknown ids and missing operands are rejected") {
  FieldCtx f = FieldCtx::make(7);
  BoundInputs in;
  CHECK(code_of([&] { evaluate_bound(f, "thm-9.9", in); }) ==
        Errc::invalid_argument);
  CHECK(code_of([&] { evaluate_bound(f, "thm-2.1", in); }) ==
        Errc::missing_param);
  CHECK(code_of([&] { evaluate_bound(f, "sdz", in); }) == Errc::missing_param);
}
