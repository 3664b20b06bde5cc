#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <functional>

#include "packlab/constructions.hpp"
#include "packlab/error.hpp"
#include "packlab/packing.hpp"
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

TEST_CASE("image sets collect exactly the reachable points") {
  FieldCtx f = FieldCtx::make(5);
  PointSet2 e = PointSet2::make(f, {Vec2{1, 0}, Vec2{0, 1}});
  MatrixSet id_only = MatrixSet::make_sl2(f, {SL2Elem{1, 0, 0, 1}});
  PointSet2 img = image_set(f, id_only, e);
  CHECK(img.size() == 2);
  CHECK(img.contains(Vec2{1, 0}));
  CHECK(img.contains(Vec2{0, 1}));

  MatrixSet two =
      MatrixSet::make_sl2(f, {SL2Elem{1, 0, 0, 1}, SL2Elem{1, 1, 0, 1}});
  PointSet2 img2 = image_set(f, two, PointSet2::make(f, {Vec2{0, 1}}));
  CHECK(img2.size() == 2);
  CHECK(img2.contains(Vec2{1, 1}));

  // The full group acting on one nonzero point covers all nonzero points.
  MatrixSet full = enumerate_sl2(f);
  CHECK(image_set(f, full, PointSet2::make(f, {Vec2{1, 0}})).size() == 24);
}

TEST_CASE("spatial images stay over the same third-coordinate slices") {
  FieldCtx f = FieldCtx::make(5);
  Rng rng(8);
  PointSet3 e = random_point_set3(f, 10, rng, true);
  MatrixSet x = random_h1_set(f, 12, rng);
  PointSet3 img = image_set3(f, x, e);
  std::vector<bool> slice(5, false);
  for (Vec3 v : e.points()) slice[static_cast<size_t>(v.x3)] = true;
  for (Vec3 v : img.points()) CHECK(slice[static_cast<size_t>(v.x3)]);
  CHECK(img.size() >= e.size());

  CHECK(code_of([&] { image_set3(f, enumerate_sl2(f), e); }) ==
        Errc::invalid_argument);
}

TEST_CASE("translation is a bijection and composes to identity") {
  FieldCtx f = FieldCtx::make(7);
  Rng rng(5);
  PointSet2 e = random_point_set2(f, 15, rng);
  PointSet2 moved = translate(f, e, Vec2{3, 4});
  CHECK(moved.size() == e.size());
  PointSet2 back = translate(f, moved, Vec2{f.neg(3), f.neg(4)});
  CHECK(back.points() == e.points());
}

TEST_CASE("rich point search maximizes met directions") {
  FieldCtx f = FieldCtx::make(5);
  PointSet2 small = PointSet2::make(f, {Vec2{0, 0}, Vec2{1, 0}, Vec2{0, 1}});
  RichPointInfo info = find_rich_point(f, small);
  CHECK(info.rich_directions == 2);

  // A full grid meets every direction from every point.
  std::vector<Vec2> grid;
  for (i64 a = 0; a < 5; ++a)
    for (i64 b = 0; b < 5; ++b) grid.push_back(Vec2{a, b});
  CHECK(find_rich_point(f, PointSet2::make(f, grid)).rich_directions == 6);

  CHECK(code_of([&] { find_rich_point(f, PointSet2::make(f, {})); }) ==
        Errc::empty_set);
}

TEST_CASE("lower-bound formulas freeze to hand-computed values") {
  FieldCtx f = FieldCtx::make(5);
  // min(p^2, |S||E|/p^2)
  CHECK(packing_lower_bound(f, "prop-1.1", 10, 100, 1, 1, 0.0) ==
        doctest::Approx(25.0));
  CHECK(packing_lower_bound(f, "prop-1.1", 10, 20, 1, 1, 0.0) ==
        doctest::Approx(8.0));
  // min(p^2, |S||E|/(p k1))
  CHECK(packing_lower_bound(f, "thm-4.2b", 10, 100, 4, 1, 0.0) ==
        doctest::Approx(std::min(25.0, 1000.0 / 20.0)));
  // thm-4.2a is the unconditional grid bound.
  CHECK(packing_lower_bound(f, "thm-4.2a", 99, 99, 1, 1, 0.0) ==
        doctest::Approx(25.0));
  // Four-term minimum.
  double ne = 12, ns = 50, k1 = 3, k2 = 4;
  double t1 = ns * std::sqrt(ne) / std::sqrt(k1 * k2);
  double t2 = std::sqrt(ns * ne) / std::pow(k1, 0.25);
  double t3 = ns * std::sqrt(ne) / k1;
  double t4 = ns * ns / k1;
  CHECK(packing_lower_bound(f, "prop-1.3", ne, ns, k1, k2, 0.0) ==
        doctest::Approx(std::min(std::min(t1, t2), std::min(t3, t4))));
  // The refined variant boosts the first three terms by p^(eps/2).
  double boost = std::pow(5.0, 0.1);
  CHECK(packing_lower_bound(f, "thm-1.4", ne, ns, k1, k2, 0.2) ==
        doctest::Approx(
            std::min(std::min(t1 * boost, t2 * boost),
                     std::min(t3 * boost, t4))));
  CHECK(code_of([&] { packing_lower_bound(f, "nope", 1, 1, 1, 1, 0); }) ==
        Errc::invalid_argument);
}

TEST_CASE("packing comparison reports the exact image size") {
  FieldCtx f = FieldCtx::make(11);
  Rng rng(40);
  PointSet2 e = random_point_set2(f, 20, rng);
  MatrixSet s = random_sl2_set(f, 50, rng);
  PackingReport r = compare_packing(f, "prop-1.1", e, s);
  CHECK(r.actual == image_set(f, s, e).size());
  CHECK(r.set_e == 20);
  CHECK(r.set_s == 50);
  CHECK(r.ratio == doctest::Approx(static_cast<double>(r.actual) / r.predicted));
  CHECK(r.params.count("k1") == 1);
}

TEST_CASE("statements with hidden constants divide by the log factor") {
  FieldCtx f = FieldCtx::make(11);
  Rng rng(41);
  PointSet2 e = random_point_set2(f, 15, rng);
  MatrixSet s = random_sl2_set(f, 40, rng);
  PackingReport r = compare_packing(f, "prop-1.3", e, s);
  REQUIRE(r.params.count("log_divisor") == 1);
  CHECK(r.params.at("log_divisor") == doctest::Approx(std::log2(11.0)));
  REQUIRE(r.params.count("raw_bound") == 1);
  CHECK(r.predicted ==
        doctest::Approx(r.params.at("raw_bound") / std::log2(11.0)));
}

TEST_CASE("structural hypotheses are reported and measured with gamma") {
  FieldCtx f = FieldCtx::make(11);
  Rng rng(42);
  PointSet2 e = random_point_set2(f, 15, rng);
  MatrixSet s = random_sl2_set(f, 40, rng);

  PackingReport plain = compare_packing(f, "thm-1.2", e, s);
  int unchecked = 0;
  for (const Precondition& pre : plain.preconditions)
    if (!pre.checked) ++unchecked;
  CHECK(unchecked >= 3);

  PackingOptions opt;
  opt.gamma = 0.4;
  PackingReport measured = compare_packing(f, "thm-1.2", e, s, opt);
  bool found_symmetric = false;
  for (const Precondition& pre : measured.preconditions)
    if (pre.name.find("symmetric") != std::string::npos) {
      found_symmetric = true;
      CHECK(pre.checked);
    }
  CHECK(found_symmetric);
}

TEST_CASE("the translate scan reports its best center") {
  FieldCtx f = FieldCtx::make(5);
  Rng rng(43);
  // |E| >= 4p = 20 and |S| >= p^2 = 25 keep the size hypotheses satisfied.
  PointSet2 e = random_point_set2(f, 21, rng);
  MatrixSet s = random_sl2_set(f, 30, rng);
  PackingReport r = compare_packing(f, "thm-4.2a", e, s);
  CHECK(r.predicted == doctest::Approx(25.0));
  // The best translate is at least as large as the untranslated image.
  i64 brute_best = 0;
  for (Vec2 x : e.points()) {
    PointSet2 shifted = translate(f, e, Vec2{f.neg(x.x1), f.neg(x.x2)});
    brute_best = std::max(brute_best, image_set(f, s, shifted).size());
  }
  CHECK(r.actual == brute_best);
  for (const Precondition& pre : r.preconditions) CHECK(pre.satisfied);
}

TEST_CASE("spatial packing comparison uses the fiber epsilon") {
  FieldCtx f = FieldCtx::make(7);
  Rng rng(44);
  PointSet3 e = random_point_set3(f, 20, rng, true);
  MatrixSet x = random_h1_set(f, 30, rng);
  PackingReport r = compare_packing_h1(f, e, x);
  CHECK(r.theorem_id == "thm-1.5");
  CHECK(r.actual == image_set3(f, x, e).size());
  CHECK(r.params.count("eps") == 1);

  PointSet3 bad = PointSet3::make(f, {Vec3{1, 1, 0}});
  CHECK(code_of([&] { compare_packing_h1(f, bad, x); }) ==
        Errc::precondition_violated);
}

TEST_CASE("the planar statement list covers the implemented ids") {
  std::vector<std::string> ids = packing_theorem_ids();
  CHECK(ids.size() == 8);
  FieldCtx f = FieldCtx::make(5);
  for (const std::string& id : ids)
    CHECK(packing_lower_bound(f, id, 10, 10, 1, 2, 0.1) > 0.0);
}
