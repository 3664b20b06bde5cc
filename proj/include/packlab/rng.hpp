#pragma once

#include "packlab/groups.hpp"

namespace packlab {

// splitmix64; hand-rolled so that seeded corpora reproduce bit-for-bit
// across standard libraries (std distributions are implementation-defined).
struct Rng {
  u64 state;
  explicit Rng(u64 seed) : state(seed) {}
  u64 next() {
    u64 z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform in [0, n) by rejection.
  u64 below(u64 n) {
    u64 lim = ~u64{0} - ~u64{0} % n;
    u64 v;
    do { v = next(); } while (v >= lim);
    return v % n;
  }
  i64 residue(const FieldCtx& f) { return static_cast<i64>(below(static_cast<u64>(f.p))); }
};

// size distinct points drawn uniformly from F_p^2 \ {0}.
PointSet2 random_point_set2(const FieldCtx& f, i64 size, Rng& rng);
// size distinct points from F_p^2 x (F_p \ {0}) when nonzero_third, else
// from all of F_p^3.
PointSet3 random_point_set3(const FieldCtx& f, i64 size, Rng& rng,
                            bool nonzero_third = true);
// size distinct SL2 elements, uniform via fiber sampling: uniform nonzero
// first column, then a uniform element of its p-element completion fiber.
MatrixSet random_sl2_set(const FieldCtx& f, i64 size, Rng& rng);
MatrixSet random_h1_set(const FieldCtx& f, i64 size, Rng& rng,
                        H1Convention conv = H1Convention::matrix);

}  // namespace packlab
