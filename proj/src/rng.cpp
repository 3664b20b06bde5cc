#include "packlab/rng.hpp"

#include <unordered_set>

namespace packlab {

PointSet2 random_point_set2(const FieldCtx& f, i64 size, Rng& rng) {
  i64 universe = f.p * f.p - 1;
  if (size < 0 || size > universe)
    fail(Errc::invalid_argument, "requested size exceeds |F_p^2 \\ {0}|");
  std::unordered_set<u64> seen;
  std::vector<Vec2> pts;
  while (static_cast<i64>(pts.size()) < size) {
    Vec2 v{rng.residue(f), rng.residue(f)};
    if (is_zero(v)) continue;
    if (seen.insert(point_key(f, v)).second) pts.push_back(v);
  }
  return PointSet2::make(f, std::move(pts));
}

PointSet3 random_point_set3(const FieldCtx& f, i64 size, Rng& rng,
                            bool nonzero_third) {
  i64 universe = nonzero_third ? f.p * f.p * (f.p - 1) : f.p * f.p * f.p;
  if (size < 0 || size > universe)
    fail(Errc::invalid_argument, "requested size exceeds the universe");
  std::unordered_set<u64> seen;
  std::vector<Vec3> pts;
  while (static_cast<i64>(pts.size()) < size) {
    i64 z = nonzero_third ? 1 + static_cast<i64>(rng.below(static_cast<u64>(f.p - 1)))
                          : rng.residue(f);
    Vec3 v{rng.residue(f), rng.residue(f), z};
    if (seen.insert(point_key(f, v)).second) pts.push_back(v);
  }
  return PointSet3::make(f, std::move(pts));
}

MatrixSet random_sl2_set(const FieldCtx& f, i64 size, Rng& rng) {
  i64 order = f.p * (f.p * f.p - 1);
  if (size < 0 || size > order)
    fail(Errc::invalid_argument, "requested size exceeds |SL2(F_p)|");
  std::unordered_set<u64> seen;
  std::vector<SL2Elem> elems;
  while (static_cast<i64>(elems.size()) < size) {
    Vec2 col{rng.residue(f), rng.residue(f)};
    if (is_zero(col)) continue;
    // Matrices with first column col: second column (b, d) on the line
    // col.x1 * d - col.x2 * b = 1, parametrized by one free residue.
    i64 b, d;
    i64 t = rng.residue(f);
    if (col.x1 != 0) {
      b = t;
      d = f.mul(f.reduce(1 + b * col.x2), f.inv(col.x1));
    } else {
      b = f.neg(f.inv(col.x2));
      d = t;
    }
    SL2Elem g{col.x1, b, col.x2, d};
    if (seen.insert(sl2_key(f, g)).second) elems.push_back(g);
  }
  return MatrixSet::make_sl2(f, std::move(elems));
}

MatrixSet random_h1_set(const FieldCtx& f, i64 size, Rng& rng, H1Convention conv) {
  i64 order = f.p * f.p * f.p;
  if (size < 0 || size > order)
    fail(Errc::invalid_argument, "requested size exceeds |H1(F_p)|");
  std::unordered_set<u64> seen;
  std::vector<H1Elem> elems;
  while (static_cast<i64>(elems.size()) < size) {
    H1Elem g{rng.residue(f), rng.residue(f), rng.residue(f)};
    if (seen.insert(h1_key(f, g)).second) elems.push_back(g);
  }
  return MatrixSet::make_h1(f, std::move(elems), conv);
}

}  // namespace packlab
