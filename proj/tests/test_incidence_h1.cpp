#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "packlab/error.hpp"
#include "packlab/incidence_h1.hpp"
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

TEST_CASE("spatial incidence fast path matches the triple loop") {
  FieldCtx f = FieldCtx::make(5);
  Rng rng(31);
  for (H1Convention conv : {H1Convention::matrix, H1Convention::symmetric}) {
    for (int t = 0; t < 6; ++t) {
      PointSet3 a = random_point_set3(f, 12, rng, false);
      PointSet3 b = random_point_set3(f, 10, rng, false);
      MatrixSet x = random_h1_set(f, 15, rng, conv);
      CHECK(count_incidences_h1(f, a, b, x) ==
            count_incidences_h1_naive(f, a, b, x));
    }
  }
}

TEST_CASE("two-point transporter count is 1, p, or 0") {
  FieldCtx f = FieldCtx::make(5);

  SUBCASE("independent pair pins a unique element") {
    // theta = (2,3,1) sends (0,1,1) to (3,4,1) and (0,0,1) to (1,3,1).
    H1TransporterResult r = transporter_count_h1(
        f, Vec3{0, 1, 1}, Vec3{3, 4, 1}, Vec3{0, 0, 1}, Vec3{1, 3, 1});
    CHECK(r.count == 1);
    REQUIRE(r.solutions.size() == 1);
    CHECK(r.solutions[0] == H1Elem{2, 3, 1});
  }

  SUBCASE("coincident pair leaves a free parameter") {
    H1TransporterResult r = transporter_count_h1(
        f, Vec3{0, 1, 1}, Vec3{4, 3, 1}, Vec3{0, 1, 1}, Vec3{4, 3, 1});
    CHECK(r.count == 5);
    REQUIRE(r.solutions.size() == 5);
    for (const H1Elem& g : r.solutions)
      CHECK(h1_act(f, g, Vec3{0, 1, 1}, H1Convention::matrix) ==
            Vec3{4, 3, 1});
  }

  SUBCASE("degenerate but inconsistent targets admit nothing") {
    H1TransporterResult r = transporter_count_h1(
        f, Vec3{0, 1, 1}, Vec3{4, 3, 1}, Vec3{0, 1, 1}, Vec3{3, 3, 1});
    CHECK(r.count == 0);
    CHECK(r.solutions.empty());
  }

  SUBCASE("hypothesis violations are rejected") {
    CHECK(code_of([&] {
            transporter_count_h1(f, Vec3{0, 1, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1},
                                 Vec3{0, 0, 1});
          }) == Errc::hypothesis_violated);
    // Third coordinates must be carried over unchanged.
    CHECK(code_of([&] {
            transporter_count_h1(f, Vec3{0, 1, 1}, Vec3{0, 1, 2}, Vec3{0, 0, 1},
                                 Vec3{0, 0, 1});
          }) == Errc::hypothesis_violated);
  }
}

TEST_CASE("transporter counts agree with full enumeration") {
  FieldCtx f = FieldCtx::make(5);
  MatrixSet all = enumerate_h1(f);
  Rng rng(77);
  int tested = 0;
  while (tested < 40) {
    H1Elem g{rng.residue(f), rng.residue(f), rng.residue(f)};
    Vec3 m{rng.residue(f), rng.residue(f), 1 + static_cast<i64>(rng.below(4))};
    Vec3 m2{rng.residue(f), rng.residue(f), 1 + static_cast<i64>(rng.below(4))};
    Vec3 d1 = h1_act(f, g, m, H1Convention::matrix);
    Vec3 d2 = h1_act(f, g, m2, H1Convention::matrix);
    H1TransporterResult r = transporter_count_h1(f, m, d1, m2, d2);
    i64 brute = 0;
    for (const H1Elem& h : all.h1())
      if (h1_act(f, h, m, H1Convention::matrix) == d1 &&
          h1_act(f, h, m2, H1Convention::matrix) == d2)
        ++brute;
    CHECK(r.count == brute);
    CHECK(static_cast<i64>(r.solutions.size()) == brute);
    ++tested;
  }
}

TEST_CASE("bilinear quadruple counts match the quadruple loops") {
  for (i64 p : {3, 5, 7}) {
    FieldCtx f = FieldCtx::make(p);
    Rng rng(500 + p);
    for (int t = 0; t < 6; ++t) {
      // Oracle equality holds for arbitrary sets; the p|A||B| cap needs
      // every third coordinate nonzero, so it is checked on that domain.
      PointSet3 a = random_point_set3(f, 10, rng, false);
      PointSet3 b = random_point_set3(f, 9, rng, false);
      CHECK(count_N(f, a, b) == count_N_naive(f, a, b));
      CHECK(count_Nprime(f, a, b) == count_Nprime_naive(f, a, b));

      PointSet3 an = random_point_set3(f, 8, rng, true);
      PointSet3 bn = random_point_set3(f, 7, rng, true);
      i64 np = count_Nprime(f, an, bn);
      CHECK(np == count_Nprime_naive(f, an, bn));
      CHECK(np <= p * an.size() * bn.size());
    }
  }
}

TEST_CASE("weighted orthogonality sums match brute force and the bound") {
  FieldCtx f = FieldCtx::make(7);
  Rng rng(91);
  for (int t = 0; t < 5; ++t) {
    std::vector<std::pair<Vec4, i64>> uraw, vraw;
    for (int j = 0; j < 12; ++j) {
      uraw.push_back({Vec4{{rng.residue(f), rng.residue(f), rng.residue(f),
                            rng.residue(f)}},
                      1 + static_cast<i64>(rng.below(3))});
      vraw.push_back({Vec4{{rng.residue(f), rng.residue(f), rng.residue(f),
                            rng.residue(f)}},
                      1 + static_cast<i64>(rng.below(3))});
    }
    WeightedVec4 u = WeightedVec4::make(f, uraw);
    WeightedVec4 v = WeightedVec4::make(f, vraw);
    BoundReport r = weighted_orthogonal_count(f, u, v);
    // Brute force the orthogonal-pair mass.
    i64 brute = 0;
    for (const auto& [uu, mu] : u.items)
      for (const auto& [vv, mv] : v.items) {
        i64 dot = 0;
        for (int k = 0; k < 4; ++k) dot = f.add(dot, f.mul(uu.c[k], vv.c[k]));
        if (dot == 0) brute += mu * mv;
      }
    CHECK(r.exact == brute);
    double dev = std::abs(static_cast<double>(r.exact) - r.main_term);
    double allowance = 0.0;
    for (const TermValue& tv : r.terms) allowance += tv.value;
    CHECK(dev <= allowance + 1e-9);
  }
}

TEST_CASE("spatial bound reports populate the three statements") {
  FieldCtx f = FieldCtx::make(7);
  Rng rng(19);
  PointSet3 a = random_point_set3(f, 14, rng, true);
  PointSet3 b = random_point_set3(f, 12, rng, true);
  MatrixSet x = random_h1_set(f, 20, rng);
  H1BoundInputs in;
  in.a = &a;
  in.b = &b;
  in.x = &x;

  BoundReport inc = evaluate_bound_h1(f, "thm-5.1", in);
  CHECK(inc.exact == count_incidences_h1(f, a, b, x));
  CHECK(inc.sizes.at("X") == 20);

  BoundReport qn = evaluate_bound_h1(f, "prop-5.2", in);
  CHECK(qn.exact == count_N(f, a, b));

  BoundReport qnp = evaluate_bound_h1(f, "prop-5.3", in);
  CHECK(qnp.exact == count_Nprime(f, a, b));
  CHECK(qnp.predicted >= static_cast<double>(qnp.exact));

  CHECK(code_of([&] { evaluate_bound_h1(f, "thm-5.9", in); }) ==
        Errc::invalid_argument);
}

TEST_CASE("the incidence statement rejects zero third coordinates") {
  FieldCtx f = FieldCtx::make(5);
  PointSet3 zero = PointSet3::make(f, {Vec3{1, 1, 0}, Vec3{2, 1, 1}});
  PointSet3 good = PointSet3::make(f, {Vec3{1, 1, 1}});
  Rng rng(3);
  MatrixSet x = random_h1_set(f, 5, rng);
  H1BoundInputs in;
  in.a = &zero;
  in.b = &good;
  in.x = &x;
  CHECK(code_of([&] { evaluate_bound_h1(f, "thm-5.1", in); }) ==
        Errc::precondition_violated);
}
