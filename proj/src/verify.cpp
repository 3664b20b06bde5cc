#include "packlab/verify.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <string>

#include "packlab/constructions.hpp"
#include "packlab/fourier.hpp"
#include "packlab/groups.hpp"
#include "packlab/incidence_h1.hpp"
#include "packlab/incidence_sl2.hpp"
#include "packlab/io.hpp"
#include "packlab/packing.hpp"
#include "packlab/rng.hpp"

namespace packlab {

namespace {

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool cond, const std::string& msg) {
  if (!cond) throw CheckFailure(msg);
}

template <typename Fn>
void run_check(std::vector<CheckResult>& out, const std::string& name, Fn&& fn) {
  CheckResult r;
  r.name = name;
  try {
    r.detail = fn();
    r.passed = true;
  } catch (const Error& e) {
    r.detail = std::string(errc_name(e.code())) + ": " + e.what();
  } catch (const std::exception& e) {
    r.detail = e.what();
  }
  out.push_back(r);
}

Vec2 random_nonzero(const FieldCtx& f, Rng& rng) {
  for (;;) {
    Vec2 v{rng.residue(f), rng.residue(f)};
    if (!is_zero(v)) return v;
  }
}

std::string size_note(i64 a, i64 b) {
  return std::to_string(a) + " vs " + std::to_string(b);
}

}  // namespace

std::vector<CheckResult> run_verify_suite(const FieldCtx& f, u64 seed, i64 cap) {
  std::vector<CheckResult> out;
  const i64 p = f.p;
  Rng rng(seed);

  run_check(out, "field.inverse", [&] {
    for (i64 a = 1; a < p; ++a) expect(f.mul(a, f.inv(a)) == 1, "a*inv(a) != 1 at a=" + std::to_string(a));
    for (int i = 0; i < 20; ++i) {
      i64 a = 1 + static_cast<i64>(rng.below(static_cast<u64>(p - 1)));
      expect(f.pow(a, p - 1) == 1, "a^(p-1) != 1");
      expect(f.pow(a, p - 2) == f.inv(a), "Fermat inverse mismatch");
    }
    return "all " + std::to_string(p - 1) + " inverses verified";
  });

  run_check(out, "field.skew_bilinear", [&] {
    for (int i = 0; i < 200; ++i) {
      Vec2 x{rng.residue(f), rng.residue(f)}, y{rng.residue(f), rng.residue(f)},
          z{rng.residue(f), rng.residue(f)};
      expect(skew(f, x, y) == f.neg(skew(f, y, x)), "antisymmetry fails");
      Vec2 xz{f.add(x.x1, z.x1), f.add(x.x2, z.x2)};
      expect(skew(f, xz, y) == f.add(skew(f, x, y), skew(f, z, y)),
             "additivity fails");
    }
    return "antisymmetry and additivity on 200 random triples";
  });

  run_check(out, "field.direction_index", [&] {
    std::set<i64> seen;
    for (i64 i = 0; i <= p; ++i) {
      Vec2 r = direction_rep(f, i);
      expect(direction_index(f, r) == i, "rep/index round trip fails");
      seen.insert(i);
    }
    for (int i = 0; i < 100; ++i) {
      Vec2 v = random_nonzero(f, rng);
      i64 d = direction_index(f, v);
      i64 t = 2 + static_cast<i64>(rng.below(static_cast<u64>(p - 1) > 1 ? static_cast<u64>(p - 1) - 1 : 1));
      Vec2 w{f.mul(v.x1, t % p == 0 ? 1 : t), f.mul(v.x2, t % p == 0 ? 1 : t)};
      expect(direction_index(f, w) == d, "scaling changes the direction");
    }
    return std::to_string(p + 1) + " canonical directions";
  });

  if (p <= cap) {
    run_check(out, "groups.enumerate_sl2", [&] {
      MatrixSet s = enumerate_sl2(f, cap);
      expect(s.size() == p * (p * p - 1), "order mismatch: " + size_note(s.size(), p * (p * p - 1)));
      for (const SL2Elem& g : s.sl2()) expect(sl2_det(f, g) == 1, "determinant != 1");
      for (int i = 0; i < 100; ++i) {
        const SL2Elem& g = s.sl2()[rng.below(static_cast<u64>(s.size()))];
        expect(s.contains_key(sl2_key(f, sl2_inv(f, g))), "inverse missing");
        const SL2Elem& h = s.sl2()[rng.below(static_cast<u64>(s.size()))];
        expect(s.contains_key(sl2_key(f, sl2_mul(f, g, h))), "product missing");
      }
      return "order " + std::to_string(s.size()) + ", closure sampled";
    });

    run_check(out, "groups.enumerate_h1", [&] {
      MatrixSet x = enumerate_h1(f, cap);
      expect(x.size() == p * p * p, "order mismatch: " + size_note(x.size(), p * p * p));
      return "order " + std::to_string(x.size());
    });
  }

  run_check(out, "groups.sl2_laws", [&] {
    for (int i = 0; i < 100; ++i) {
      Rng sub(rng.next());
      MatrixSet trio = random_sl2_set(f, 3, sub);
      SL2Elem g = trio.sl2()[0], h = trio.sl2()[1], k = trio.sl2()[2];
      expect(sl2_mul(f, sl2_mul(f, g, h), k) == sl2_mul(f, g, sl2_mul(f, h, k)),
             "associativity fails");
      expect(sl2_mul(f, g, sl2_inv(f, g)) == SL2Elem{}, "g*g^-1 != I");
      Vec2 v{rng.residue(f), rng.residue(f)};
      expect(sl2_act(f, g, sl2_act(f, h, v)) == sl2_act(f, sl2_mul(f, g, h), v),
             "action is not a homomorphism");
      Vec2 x = random_nonzero(f, rng), y = random_nonzero(f, rng);
      expect(skew(f, sl2_act(f, g, x), sl2_act(f, g, y)) == skew(f, x, y),
             "skew not invariant");
    }
    return "laws on 100 random samples";
  });

  run_check(out, "groups.h1_laws", [&] {
    for (H1Convention conv : {H1Convention::matrix, H1Convention::symmetric}) {
      for (int i = 0; i < 100; ++i) {
        H1Elem g{rng.residue(f), rng.residue(f), rng.residue(f)};
        H1Elem h{rng.residue(f), rng.residue(f), rng.residue(f)};
        H1Elem k{rng.residue(f), rng.residue(f), rng.residue(f)};
        expect(h1_mul(f, h1_mul(f, g, h, conv), k, conv) ==
                   h1_mul(f, g, h1_mul(f, h, k, conv), conv),
               "associativity fails");
        expect(h1_mul(f, g, h1_inv(f, g, conv), conv) == H1Elem{},
               "g*g^-1 != identity");
        Vec3 v{rng.residue(f), rng.residue(f), rng.residue(f)};
        Vec3 gv = h1_act(f, g, h1_act(f, h, v, conv), conv);
        expect(gv == h1_act(f, h1_mul(f, g, h, conv), v, conv),
               "action is not a homomorphism");
        expect(gv.x3 == v.x3, "third coordinate not preserved");
      }
    }
    for (int i = 0; i < 100; ++i) {
      H1Elem g{rng.residue(f), rng.residue(f), rng.residue(f)};
      H1Elem h{rng.residue(f), rng.residue(f), rng.residue(f)};
      H1Elem lhs = h1_symmetric_to_matrix(f, h1_mul(f, g, h, H1Convention::symmetric));
      H1Elem rhs = h1_mul(f, h1_symmetric_to_matrix(f, g),
                          h1_symmetric_to_matrix(f, h), H1Convention::matrix);
      expect(lhs == rhs, "convention map is not a homomorphism");
      expect(h1_matrix_to_symmetric(f, h1_symmetric_to_matrix(f, g)) == g,
             "convention maps do not invert each other");
    }
    return "laws in both conventions on 100 random samples";
  });

  run_check(out, "groups.transporter_fiber", [&] {
    for (int i = 0; i < 50; ++i) {
      Vec2 m = random_nonzero(f, rng), m2 = random_nonzero(f, rng);
      MatrixSet fiber = transporter_fiber(f, m, m2);
      expect(fiber.size() == p, "fiber size " + size_note(fiber.size(), p));
      for (const SL2Elem& t : fiber.sl2())
        expect(sl2_act(f, t, m) == m2, "fiber element misses the target");
    }
    return "50 random fibers of size p";
  });

  run_check(out, "groups.pair_transporter", [&] {
    int hits = 0;
    for (int i = 0; i < 100; ++i) {
      Vec2 x = random_nonzero(f, rng), y = random_nonzero(f, rng);
      if (skew(f, x, y) == 0) continue;
      Rng sub(rng.next());
      SL2Elem g = random_sl2_set(f, 1, sub).sl2()[0];
      auto t = pair_transporter(f, x, y, sl2_act(f, g, x), sl2_act(f, g, y));
      expect(t.has_value() && *t == g, "recovered transporter differs");
      ++hits;
      Vec2 u = sl2_act(f, g, x);
      Vec2 v2{f.add(sl2_act(f, g, y).x1, x.x1), sl2_act(f, g, y).x2};
      if (skew(f, u, v2) != skew(f, x, y))
        expect(!pair_transporter(f, x, y, u, v2).has_value(),
               "transporter exists despite skew mismatch");
    }
    expect(hits > 0, "no independent pairs sampled");
    return std::to_string(hits) + " transporters recovered";
  });

  if (p <= 13) {
    run_check(out, "fourier.identities", [&] {
      FpFunction fn = FpFunction::zero(f, 2);
      for (auto& c : fn.v)
        c = {static_cast<double>(rng.below(7)) - 3.0,
             static_cast<double>(rng.below(7)) - 3.0};
      FpFunction fhat = dft(fn);
      expect(std::abs(plancherel_lhs(fhat) - plancherel_rhs(fn)) < 1e-10,
             "Plancherel identity fails");
      FpFunction back = idft(fhat);
      for (size_t i = 0; i < fn.v.size(); ++i)
        expect(std::abs(fn.v[i] - back.v[i]) < 1e-10, "inversion round trip fails");
      return "Plancherel and inversion to 1e-10";
    });
  }

  if (p <= 7) {
    run_check(out, "fourier.incidence", [&] {
      for (int i = 0; i < 5; ++i) {
        PointSet2 a = random_point_set2(f, 2 + static_cast<i64>(rng.below(6)), rng);
        PointSet2 b = random_point_set2(f, 2 + static_cast<i64>(rng.below(6)), rng);
        MatrixSet s = random_sl2_set(f, 2 + static_cast<i64>(rng.below(10)), rng);
        double viaf = incidence_via_fourier(f, a, b, s);
        i64 exact = count_incidences(f, a, b, s);
        double tol = 1e-6 * std::max(1.0, static_cast<double>(exact));
        expect(std::abs(viaf - static_cast<double>(exact)) <= tol,
               "transform count drifts from the exact count");
      }
      return "5 reconstructions within 1e-6 relative";
    });
  }

  run_check(out, "incidence.count_oracle", [&] {
    for (int i = 0; i < 5; ++i) {
      PointSet2 a = random_point_set2(f, std::min<i64>(12, p), rng);
      PointSet2 b = random_point_set2(f, std::min<i64>(12, p), rng);
      MatrixSet s = random_sl2_set(f, std::min<i64>(40, p * (p * p - 1)), rng);
      expect(count_incidences(f, a, b, s) == count_incidences_naive(f, a, b, s),
             "fast and naive incidence counts differ");
    }
    return "5 instances against the naive count";
  });

  run_check(out, "incidence.energy_oracles", [&] {
    for (int i = 0; i < 5; ++i) {
      PointSet2 a = random_point_set2(f, std::min<i64>(10, p), rng);
      PointSet2 b = random_point_set2(f, std::min<i64>(10, p), rng);
      expect(energy1(f, a, b) == energy1_naive(f, a, b), "pair-count histogram wrong");
      MatrixSet s = random_sl2_set(f, std::min<i64>(15, p * (p * p - 1)), rng);
      expect(energy2(f, s) == energy2_naive(f, s), "product histogram wrong");
    }
    return "5 instances against quadruple-loop oracles";
  });

  run_check(out, "incidence.lines", [&] {
    for (int i = 0; i < 20; ++i) {
      Line l = rng.below(2) ? line_from_slope(f, rng.residue(f), rng.residue(f))
                            : line_vertical(f, rng.residue(f));
      std::vector<Vec2> pts = line_points(f, l);
      expect(static_cast<i64>(pts.size()) == p, "line has " + std::to_string(pts.size()) + " points");
      for (Vec2 v : pts) expect(line_contains(f, l, v), "listed point misses the line");
    }
    return "20 lines with exactly p points each";
  });

  run_check(out, "incidence.weighted_oracle", [&] {
    for (int i = 0; i < 5; ++i) {
      std::vector<std::pair<Vec2, i64>> praw;
      std::vector<std::pair<Line, i64>> lraw;
      for (int j = 0; j < 8; ++j) {
        praw.push_back({Vec2{rng.residue(f), rng.residue(f)},
                        1 + static_cast<i64>(rng.below(3))});
        Line l = rng.below(2) ? line_from_slope(f, rng.residue(f), rng.residue(f))
                              : line_vertical(f, rng.residue(f));
        lraw.push_back({l, 1 + static_cast<i64>(rng.below(3))});
      }
      WeightedPoints wp = WeightedPoints::make(f, praw);
      WeightedLines wl = WeightedLines::make(f, lraw);
      expect(weighted_pl_incidences(f, wp, wl) ==
                 weighted_pl_incidences_naive(f, wp, wl),
             "weighted incidence mismatch");
    }
    return "5 weighted instances against the naive oracle";
  });

  run_check(out, "h1.count_oracle", [&] {
    for (int i = 0; i < 3; ++i) {
      PointSet3 a = random_point_set3(f, std::min<i64>(10, p * p), rng, false);
      PointSet3 b = random_point_set3(f, std::min<i64>(10, p * p), rng, false);
      MatrixSet x = random_h1_set(f, std::min<i64>(15, p * p * p), rng);
      expect(count_incidences_h1(f, a, b, x) == count_incidences_h1_naive(f, a, b, x),
             "fast and naive spatial incidence counts differ");
    }
    return "3 instances against the naive count";
  });

  if (p <= cap) run_check(out, "h1.transporter_trichotomy", [&] {
    MatrixSet all = enumerate_h1(f, cap);
    int tested = 0;
    while (tested < 30) {
      Vec3 s1{rng.residue(f), rng.residue(f), 1 + static_cast<i64>(rng.below(static_cast<u64>(p - 1)))};
      Vec3 s2{rng.residue(f), rng.residue(f), 1 + static_cast<i64>(rng.below(static_cast<u64>(p - 1)))};
      Vec3 d1{rng.residue(f), rng.residue(f), s1.x3};
      Vec3 d2{rng.residue(f), rng.residue(f), s2.x3};
      if (f.reduce(s1.x2 * d2.x3 + s1.x3 * d2.x2) !=
          f.reduce(d1.x2 * s2.x3 + d1.x3 * s2.x2))
        continue;
      H1TransporterResult r = transporter_count_h1(f, s1, d1, s2, d2);
      i64 brute = 0;
      for (const H1Elem& g : all.h1())
        if (h1_act(f, g, s1) == d1 && h1_act(f, g, s2) == d2) ++brute;
      expect(r.count == brute, "trichotomy count " + size_note(r.count, brute));
      for (const H1Elem& g : r.solutions)
        expect(h1_act(f, g, s1) == d1 && h1_act(f, g, s2) == d2,
               "returned solution does not transport");
      ++tested;
    }
    return "30 hypothesis-satisfying tuples against enumeration";
  });

  run_check(out, "h1.quadruple_oracles", [&] {
    for (int i = 0; i < 3; ++i) {
      // Oracle equality is unconditional; the p|A||B| cap holds on sets
      // whose third coordinates are all nonzero, so it is checked there.
      PointSet3 a = random_point_set3(f, std::min<i64>(8, p * p), rng, false);
      PointSet3 b = random_point_set3(f, std::min<i64>(8, p * p), rng, false);
      expect(count_N(f, a, b) == count_N_naive(f, a, b), "count_N mismatch");
      expect(count_Nprime(f, a, b) == count_Nprime_naive(f, a, b),
             "count_Nprime mismatch");

      PointSet3 an = random_point_set3(f, std::min<i64>(8, p * p), rng, true);
      PointSet3 bn = random_point_set3(f, std::min<i64>(8, p * p), rng, true);
      i64 np = count_Nprime(f, an, bn);
      expect(np == count_Nprime_naive(f, an, bn), "count_Nprime mismatch");
      expect(np <= p * an.size() * bn.size(), "count_Nprime exceeds p|A||B|");
    }
    return "3 instances against quadruple-loop oracles";
  });

  run_check(out, "packing.image_oracle", [&] {
    for (int i = 0; i < 3; ++i) {
      PointSet2 e = random_point_set2(f, std::min<i64>(10, p), rng);
      MatrixSet s = random_sl2_set(f, std::min<i64>(20, p * (p * p - 1)), rng);
      PointSet2 img = image_set(f, s, e);
      std::set<u64> brute;
      for (const SL2Elem& g : s.sl2())
        for (Vec2 v : e.points()) brute.insert(point_key(f, sl2_act(f, g, v)));
      expect(img.size() == static_cast<i64>(brute.size()), "image size mismatch");
      for (Vec2 v : img.points()) expect(brute.count(point_key(f, v)), "phantom image point");
    }
    return "3 images against set-building oracle";
  });

  if (p <= 13 && p <= cap) {
    run_check(out, "packing.orbit_transitivity", [&] {
      MatrixSet s = enumerate_sl2(f, cap);
      PointSet2 e = PointSet2::make(f, {random_nonzero(f, rng)});
      expect(image_set(f, s, e).size() == p * p - 1,
             "full-group orbit of a nonzero point is not everything nonzero");
      return "orbit of a point under the full group = p^2 - 1 points";
    });
  }

  run_check(out, "packing.rich_point_grid", [&] {
    std::vector<Vec2> grid;
    for (i64 x = 0; x < p; ++x)
      for (i64 y = 0; y < p; ++y) grid.push_back(Vec2{x, y});
    RichPointInfo info = find_rich_point(f, PointSet2::make(f, grid));
    expect(info.rich_directions == p + 1, "full grid should meet all directions");
    return "full grid meets all " + std::to_string(p + 1) + " directions";
  });

  run_check(out, "constructions.self_checks", [&] {
    std::ostringstream ran;
    make_construction(f, "line-transporter", {{"d1", 0}, {"d2", 1}});
    ran << "line-transporter";
    make_construction(f, "obs2", {{"num_lines", 2}});
    ran << ", obs2";
    make_construction(f, "prop11", {{"d", p - 1}});
    ran << ", prop11";
    if (p <= 13 && p <= cap) {
      make_construction(f, "energy-extremal", {});
      ran << ", energy-extremal";
      make_construction(f, "prop13", {});
      ran << ", prop13";
      make_construction(f, "obs1", {{"dA", 1}, {"dB", p - 1}});
      ran << ", obs1";
      make_construction(f, "obs3", {{"t_size", 2}});
      ran << ", obs3";
      make_construction(f, "obs4", {{"a_size", 2}});
      ran << ", obs4";
      make_construction(f, "obs5", {{"a_size", std::min<i64>(3, p)}});
      ran << ", obs5";
    }
    return "self-verified: " + ran.str();
  });

  run_check(out, "io.roundtrip", [&] {
    PointSet2 e2 = random_point_set2(f, std::min<i64>(10, p), rng);
    std::stringstream s2;
    write_points(s2, f, e2.points());
    LoadedPoints l2 = read_points(s2);
    expect(l2.field.p == p && l2.dim == 2, "2d header round trip fails");
    expect(PointSet2::make(l2.field, l2.pts2).points() == e2.points(),
           "2d points round trip fails");

    PointSet3 e3 = random_point_set3(f, std::min<i64>(10, p * p), rng, false);
    std::stringstream s3;
    write_points(s3, f, e3.points());
    LoadedPoints l3 = read_points(s3);
    expect(l3.dim == 3 && PointSet3::make(l3.field, l3.pts3).points() == e3.points(),
           "3d points round trip fails");

    MatrixSet ms = random_sl2_set(f, std::min<i64>(10, p * (p * p - 1)), rng);
    std::stringstream sm;
    write_matrices(sm, ms);
    LoadedMatrices lm = read_matrices(sm);
    expect(lm.set.kind() == GroupKind::sl2 && lm.set.sl2() == ms.sl2(),
           "matrix round trip fails");

    MatrixSet hs = random_h1_set(f, std::min<i64>(10, p * p * p), rng,
                                 H1Convention::symmetric);
    std::stringstream sh;
    write_matrices(sh, hs);
    LoadedMatrices lh = read_matrices(sh);
    expect(lh.set.kind() == GroupKind::h1_symmetric && lh.set.h1() == hs.h1(),
           "h1 matrix round trip fails");
    return "points (2d, 3d) and matrices (sl2, h1) round-tripped";
  });

  run_check(out, "rng.determinism", [&] {
    Rng r1(seed ^ 0xabcdef), r2(seed ^ 0xabcdef);
    PointSet2 a1 = random_point_set2(f, std::min<i64>(10, p), r1);
    PointSet2 a2 = random_point_set2(f, std::min<i64>(10, p), r2);
    expect(a1.points() == a2.points(), "same seed gives different sets");
    MatrixSet s1 = random_sl2_set(f, 5, r1);
    MatrixSet s2 = random_sl2_set(f, 5, r2);
    expect(s1.sl2() == s2.sl2(), "same seed gives different matrix sets");
    return "seeded draws reproduce";
  });

  return out;
}

}  // namespace packlab
