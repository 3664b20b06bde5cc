#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "packlab/error.hpp"

namespace packlab {

using i64 = std::int64_t;
using u64 = std::uint64_t;

// Arithmetic context for F_p, p an odd prime below 2^31.  Residues are kept
// in least-nonnegative form [0, p); every operation reduces eagerly.
struct FieldCtx {
  i64 p = 0;
  // Eager inverse table for small p; empty above the threshold, in which
  // case inv() falls back to Fermat exponentiation.
  std::vector<i64> inv_table;

  static constexpr i64 kEagerInvLimit = 1 << 16;

  static FieldCtx make(i64 p);

  i64 reduce(i64 a) const {
    a %= p;
    return a < 0 ? a + p : a;
  }
  i64 add(i64 a, i64 b) const { return (a + b) % p; }
  i64 sub(i64 a, i64 b) const { return ((a - b) % p + p) % p; }
  i64 mul(i64 a, i64 b) const { return (a * b) % p; }
  i64 neg(i64 a) const { return a == 0 ? 0 : p - a; }
  i64 pow(i64 a, i64 e) const;
  // Multiplicative inverse; a = 0 raises zero_inverse.
  i64 inv(i64 a) const;
};

// Deterministic trial-division primality; sufficient for 64-bit inputs at
// the enumeration scales supported here.
bool is_prime(i64 n);

struct Vec2 {
  i64 x1 = 0, x2 = 0;
  bool operator==(const Vec2&) const = default;
};

struct Vec3 {
  i64 x1 = 0, x2 = 0, x3 = 0;
  bool operator==(const Vec3&) const = default;
};

inline bool is_zero(Vec2 v) { return v.x1 == 0 && v.x2 == 0; }

// skew(x, y) = x . y^perp with y^perp = (-y2, y1), i.e. x2*y1 - x1*y2 mod p.
// Bilinear, antisymmetric, SL2-invariant; zero iff x, y are collinear
// through the origin (for nonzero x, y).
inline i64 skew(const FieldCtx& f, Vec2 x, Vec2 y) {
  return f.reduce(x.x2 * y.x1 - x.x1 * y.x2);
}

inline u64 point_key(const FieldCtx& f, Vec2 v) {
  return static_cast<u64>(v.x1) * static_cast<u64>(f.p) +
         static_cast<u64>(v.x2);
}
inline u64 point_key(const FieldCtx& f, Vec3 v) {
  u64 p = static_cast<u64>(f.p);
  return (static_cast<u64>(v.x1) * p + static_cast<u64>(v.x2)) * p +
         static_cast<u64>(v.x3);
}

// Canonical index of the direction of a nonzero vector: slope s in [0, p)
// for (1, s)-directions, p for the vertical direction (0, 1).
// Raises zero_vector on v = 0.
i64 direction_index(const FieldCtx& f, Vec2 v);
// Canonical representative of direction index i: (1, i) for i < p, (0, 1)
// for i = p.
Vec2 direction_rep(const FieldCtx& f, i64 index);

struct DirectionStats {
  i64 k1 = 0;  // max points of E \ {0} on one origin line
  i64 k2 = 0;  // number of occupied directions
  std::vector<i64> per_direction;  // size p + 1
};

struct FiberStats {
  i64 max_fiber = 0;  // max |{x : (x, y, z) in E}| over (y, z)
  double empirical_eps = 0.0;  // 1 - log_p(max_fiber)
};

// Immutable deduplicated subset of F_p^2 with a presence bitmap and cached
// direction statistics (origin excluded from the stats).
class PointSet2 {
 public:
  static PointSet2 make(const FieldCtx& f, std::vector<Vec2> pts);

  i64 p() const { return p_; }
  const std::vector<Vec2>& points() const { return pts_; }
  i64 size() const { return static_cast<i64>(pts_.size()); }
  bool contains(Vec2 v) const {
    u64 k = static_cast<u64>(v.x1) * static_cast<u64>(p_) +
            static_cast<u64>(v.x2);
    return (bitmap_[k >> 6] >> (k & 63)) & 1;
  }
  const DirectionStats& direction_stats() const { return dstats_; }

 private:
  i64 p_ = 0;
  std::vector<Vec2> pts_;
  std::vector<u64> bitmap_;
  DirectionStats dstats_;
};

// Immutable deduplicated subset of F_p^3 with a presence bitmap and cached
// fiber statistics over the projection onto the last two coordinates.
class PointSet3 {
 public:
  static PointSet3 make(const FieldCtx& f, std::vector<Vec3> pts);

  i64 p() const { return p_; }
  const std::vector<Vec3>& points() const { return pts_; }
  i64 size() const { return static_cast<i64>(pts_.size()); }
  bool contains(Vec3 v) const {
    u64 p = static_cast<u64>(p_);
    u64 k = (static_cast<u64>(v.x1) * p + static_cast<u64>(v.x2)) * p +
            static_cast<u64>(v.x3);
    return (bitmap_[k >> 6] >> (k & 63)) & 1;
  }
  // Fiber stats of a nonempty set; raises empty_set otherwise.
  const FiberStats& fiber_stats() const;
  bool all_third_nonzero() const { return all_third_nonzero_; }

 private:
  i64 p_ = 0;
  std::vector<Vec3> pts_;
  std::vector<u64> bitmap_;
  FiberStats fstats_;
  bool all_third_nonzero_ = true;
};

DirectionStats direction_stats(const FieldCtx& f, const std::vector<Vec2>& pts);
FiberStats fiber_stats(const FieldCtx& f, const std::vector<Vec3>& pts);

}  // namespace packlab
