#include "packlab/fp.hpp"

#include <algorithm>
#include <cmath>

namespace packlab {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ok: return "Ok";
    case Errc::not_prime: return "NotPrime";
    case Errc::even_modulus: return "EvenModulus";
    case Errc::zero_inverse: return "ZeroInverse";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::zero_vector: return "ZeroVector";
    case Errc::dependent_basis: return "DependentBasis";
    case Errc::mixed_modulus: return "MixedModulus";
    case Errc::convention_mismatch: return "ConventionMismatch";
    case Errc::hypothesis_violated: return "HypothesisViolated";
    case Errc::empty_set: return "EmptySet";
    case Errc::not_a_divisor: return "NotADivisor";
    case Errc::infeasible_fiber: return "InfeasibleFiber";
    case Errc::not_origin_line: return "NotOriginLine";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::missing_param: return "MissingParam";
    case Errc::precondition_violated: return "PreconditionViolated";
    case Errc::parse_error: return "ParseError";
    case Errc::io_error: return "IoError";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::internal: return "Internal";
  }
  return "Unknown";
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (i64 d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

FieldCtx FieldCtx::make(i64 p) {
  if (p == 2) fail(Errc::even_modulus, "modulus 2 is not supported (odd primes only)");
  if (!is_prime(p)) fail(Errc::not_prime, "modulus " + std::to_string(p) + " is not prime");
  if (p >= (i64{1} << 31)) fail(Errc::cap_exceeded, "modulus exceeds 2^31");
  FieldCtx f;
  f.p = p;
  if (p < kEagerInvLimit) {
    f.inv_table.assign(static_cast<size_t>(p), 0);
    // inv[a] via the standard recurrence inv[a] = -(p/a) * inv[p % a].
    if (p > 1) f.inv_table[1] = 1;
    for (i64 a = 2; a < p; ++a) {
      f.inv_table[static_cast<size_t>(a)] =
          f.mul(p - p / a, f.inv_table[static_cast<size_t>(p % a)]);
    }
  }
  return f;
}

i64 FieldCtx::pow(i64 a, i64 e) const {
  a = reduce(a);
  i64 r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

i64 FieldCtx::inv(i64 a) const {
  a = reduce(a);
  if (a == 0) fail(Errc::zero_inverse, "inverse of 0 mod " + std::to_string(p));
  if (!inv_table.empty()) return inv_table[static_cast<size_t>(a)];
  return pow(a, p - 2);
}

i64 direction_index(const FieldCtx& f, Vec2 v) {
  if (is_zero(v)) fail(Errc::zero_vector, "direction of the zero vector");
  if (v.x1 != 0) return f.mul(v.x2, f.inv(v.x1));
  return f.p;
}

Vec2 direction_rep(const FieldCtx& f, i64 index) {
  if (index < 0 || index > f.p)
    fail(Errc::invalid_argument, "direction index out of range");
  if (index == f.p) return Vec2{0, 1};
  return Vec2{1, index};
}

DirectionStats direction_stats(const FieldCtx& f, const std::vector<Vec2>& pts) {
  DirectionStats s;
  s.per_direction.assign(static_cast<size_t>(f.p) + 1, 0);
  for (Vec2 v : pts) {
    if (is_zero(v)) continue;
    ++s.per_direction[static_cast<size_t>(direction_index(f, v))];
  }
  for (i64 c : s.per_direction) {
    s.k1 = std::max(s.k1, c);
    if (c > 0) ++s.k2;
  }
  return s;
}

FiberStats fiber_stats(const FieldCtx& f, const std::vector<Vec3>& pts) {
  if (pts.empty()) fail(Errc::empty_set, "fiber_stats of an empty set");
  std::vector<i64> count(static_cast<size_t>(f.p) * static_cast<size_t>(f.p), 0);
  FiberStats s;
  for (Vec3 v : pts) {
    i64 c = ++count[static_cast<size_t>(v.x2) * static_cast<size_t>(f.p) +
                    static_cast<size_t>(v.x3)];
    s.max_fiber = std::max(s.max_fiber, c);
  }
  s.empirical_eps =
      1.0 - std::log(static_cast<double>(s.max_fiber)) / std::log(static_cast<double>(f.p));
  return s;
}

namespace {

std::vector<u64> build_bitmap(u64 bits) { return std::vector<u64>((bits + 63) / 64, 0); }

void check_residue(const FieldCtx& f, i64 r) {
  if (r < 0 || r >= f.p)
    fail(Errc::invalid_argument,
         "residue " + std::to_string(r) + " out of range mod " + std::to_string(f.p));
}

}  // namespace

PointSet2 PointSet2::make(const FieldCtx& f, std::vector<Vec2> pts) {
  PointSet2 s;
  s.p_ = f.p;
  for (Vec2 v : pts) {
    check_residue(f, v.x1);
    check_residue(f, v.x2);
  }
  std::sort(pts.begin(), pts.end(), [&](Vec2 a, Vec2 b) {
    return point_key(f, a) < point_key(f, b);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  s.pts_ = std::move(pts);
  s.bitmap_ = build_bitmap(static_cast<u64>(f.p) * static_cast<u64>(f.p));
  for (Vec2 v : s.pts_) {
    u64 k = point_key(f, v);
    s.bitmap_[k >> 6] |= u64{1} << (k & 63);
  }
  s.dstats_ = packlab::direction_stats(f, s.pts_);
  return s;
}

PointSet3 PointSet3::make(const FieldCtx& f, std::vector<Vec3> pts) {
  PointSet3 s;
  s.p_ = f.p;
  for (Vec3 v : pts) {
    check_residue(f, v.x1);
    check_residue(f, v.x2);
    check_residue(f, v.x3);
  }
  std::sort(pts.begin(), pts.end(), [&](Vec3 a, Vec3 b) {
    return point_key(f, a) < point_key(f, b);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  s.pts_ = std::move(pts);
  u64 p = static_cast<u64>(f.p);
  s.bitmap_ = build_bitmap(p * p * p);
  for (Vec3 v : s.pts_) {
    u64 k = point_key(f, v);
    s.bitmap_[k >> 6] |= u64{1} << (k & 63);
    if (v.x3 == 0) s.all_third_nonzero_ = false;
  }
  if (!s.pts_.empty()) s.fstats_ = packlab::fiber_stats(f, s.pts_);
  return s;
}

const FiberStats& PointSet3::fiber_stats() const {
  if (pts_.empty()) fail(Errc::empty_set, "fiber_stats of an empty set");
  return fstats_;
}

}  // namespace packlab
