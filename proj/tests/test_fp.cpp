#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <functional>

#include "packlab/error.hpp"
#include "packlab/fp.hpp"

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

TEST_CASE("field context validates the modulus") {
  CHECK(code_of([] { FieldCtx::make(2); }) == Errc::even_modulus);
  CHECK(code_of([] { FieldCtx::make(9); }) == Errc::not_prime);
  CHECK(code_of([] { FieldCtx::make(1); }) == Errc::not_prime);
  CHECK(code_of([] { FieldCtx::make(-7); }) == Errc::not_prime);
  CHECK(code_of([] { FieldCtx::make(i64{1} << 32); }) == Errc::not_prime);
  CHECK(FieldCtx::make(3).p == 3);
  CHECK(FieldCtx::make(2147483647).p == 2147483647);
}

TEST_CASE("residue arithmetic stays in least-nonnegative form") {
  FieldCtx f = FieldCtx::make(5);
  CHECK(f.reduce(-3) == 2);
  CHECK(f.reduce(12) == 2);
  CHECK(f.add(4, 3) == 2);
  CHECK(f.sub(1, 3) == 3);
  CHECK(f.mul(4, 4) == 1);
  CHECK(f.neg(0) == 0);
  CHECK(f.neg(2) == 3);
  CHECK(f.pow(2, 0) == 1);
  CHECK(f.pow(3, 3) == 2);
  CHECK(f.pow(2, 4) == 1);
}

TEST_CASE("inverses agree between the table and Fermat fallback") {
  FieldCtx f = FieldCtx::make(5);
  CHECK(f.inv(1) == 1);
  CHECK(f.inv(2) == 3);
  CHECK(f.inv(3) == 2);
  CHECK(f.inv(4) == 4);
  CHECK(code_of([&] { f.inv(0); }) == Errc::zero_inverse);

  // Above the eager table limit inv() goes through exponentiation.
  FieldCtx big = FieldCtx::make(65537);
  CHECK(big.inv_table.empty());
  for (i64 a : {i64{2}, i64{3}, i64{12345}, i64{65536}})
    CHECK(big.mul(a, big.inv(a)) == 1);

  FieldCtx small = FieldCtx::make(65521);
  CHECK_FALSE(small.inv_table.empty());
  for (i64 a = 1; a < 200; ++a) CHECK(small.mul(a, small.inv(a)) == 1);
}

TEST_CASE("primality test matches small cases") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(31));
  CHECK(is_prime(2147483647));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(21));
  CHECK_FALSE(is_prime(25));
}

TEST_CASE("skew form is bilinear, antisymmetric, and detects collinearity") {
  FieldCtx f = FieldCtx::make(5);
  CHECK(skew(f, Vec2{1, 0}, Vec2{0, 1}) == 4);
  CHECK(skew(f, Vec2{0, 1}, Vec2{1, 0}) == 1);
  CHECK(skew(f, Vec2{2, 3}, Vec2{4, 1}) == f.reduce(3 * 4 - 2 * 1));
  // Antisymmetry and bilinearity on a grid of samples.
  for (i64 a = 0; a < 5; ++a)
    for (i64 b = 0; b < 5; ++b) {
      Vec2 x{a, b}, y{f.reduce(a + 1), f.reduce(2 * b + 3)};
      CHECK(skew(f, x, y) == f.neg(skew(f, y, x)));
      Vec2 xs{f.mul(2, x.x1), f.mul(2, x.x2)};
      CHECK(skew(f, xs, y) == f.mul(2, skew(f, x, y)));
    }
  // Zero exactly on collinear pairs.
  CHECK(skew(f, Vec2{2, 4}, Vec2{1, 2}) == 0);
  CHECK(skew(f, Vec2{2, 4}, Vec2{1, 3}) != 0);
}

TEST_CASE("direction indices enumerate the projective line") {
  FieldCtx f = FieldCtx::make(7);
  for (i64 i = 0; i <= 7; ++i)
    CHECK(direction_index(f, direction_rep(f, i)) == i);
  // Scaling invariance.
  Vec2 v{3, 5};
  Vec2 v2{f.mul(4, v.x1), f.mul(4, v.x2)};
  CHECK(direction_index(f, v) == direction_index(f, v2));
  // The vertical direction gets index p.
  CHECK(direction_index(f, Vec2{0, 2}) == 7);
  CHECK(code_of([&] { direction_index(f, Vec2{0, 0}); }) == Errc::zero_vector);
  CHECK(code_of([&] { direction_rep(f, 8); }) == Errc::invalid_argument);
}

TEST_CASE("planar point sets deduplicate and cache direction stats") {
  FieldCtx f = FieldCtx::make(5);
  PointSet2 e = PointSet2::make(
      f, {Vec2{1, 2}, Vec2{1, 2}, Vec2{3, 4}, Vec2{0, 0}});
  CHECK(e.size() == 3);
  CHECK(e.contains(Vec2{1, 2}));
  CHECK(e.contains(Vec2{0, 0}));
  CHECK_FALSE(e.contains(Vec2{2, 1}));

  // (1,0) and (2,0) share a direction; the origin is excluded from stats.
  PointSet2 d = PointSet2::make(
      f, {Vec2{1, 0}, Vec2{2, 0}, Vec2{0, 1}, Vec2{0, 0}});
  CHECK(d.direction_stats().k1 == 2);
  CHECK(d.direction_stats().k2 == 2);

  CHECK(code_of([&] { PointSet2::make(f, {Vec2{5, 0}}); }) != Errc::ok);
}

TEST_CASE("spatial point sets track fibers over the last two coordinates") {
  FieldCtx f = FieldCtx::make(5);
  PointSet3 e = PointSet3::make(
      f, {Vec3{0, 1, 1}, Vec3{1, 1, 1}, Vec3{2, 1, 1}, Vec3{0, 2, 1}});
  CHECK(e.size() == 4);
  CHECK(e.all_third_nonzero());
  CHECK(e.fiber_stats().max_fiber == 3);
  CHECK(e.fiber_stats().empirical_eps ==
        doctest::Approx(1.0 - std::log(3.0) / std::log(5.0)));

  PointSet3 z = PointSet3::make(f, {Vec3{1, 1, 0}});
  CHECK_FALSE(z.all_third_nonzero());

  PointSet3 empty = PointSet3::make(f, {});
  CHECK(code_of([&] { empty.fiber_stats(); }) == Errc::empty_set);
}
