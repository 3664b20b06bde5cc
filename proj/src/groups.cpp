#include "packlab/groups.hpp"

#include <algorithm>
#include <cmath>

namespace packlab {

const char* group_kind_name(GroupKind k) {
  switch (k) {
    case GroupKind::sl2: return "sl2";
    case GroupKind::h1_matrix: return "h1-matrix";
    case GroupKind::h1_symmetric: return "h1-symmetric";
  }
  return "?";
}

SL2Elem sl2_mul(const FieldCtx& f, SL2Elem g, SL2Elem h) {
  return SL2Elem{f.reduce(g.a * h.a + g.b * h.c), f.reduce(g.a * h.b + g.b * h.d),
                 f.reduce(g.c * h.a + g.d * h.c), f.reduce(g.c * h.b + g.d * h.d)};
}

SL2Elem sl2_inv(const FieldCtx& f, SL2Elem g) {
  // det = 1, so the adjugate is the inverse.
  return SL2Elem{g.d, f.neg(g.b), f.neg(g.c), g.a};
}

Vec2 sl2_act(const FieldCtx& f, SL2Elem g, Vec2 v) {
  return Vec2{f.reduce(g.a * v.x1 + g.b * v.x2), f.reduce(g.c * v.x1 + g.d * v.x2)};
}

i64 sl2_det(const FieldCtx& f, SL2Elem g) { return f.reduce(g.a * g.d - g.b * g.c); }

SL2Elem sl2_transpose(SL2Elem g) { return SL2Elem{g.a, g.c, g.b, g.d}; }

H1Elem h1_mul(const FieldCtx& f, H1Elem g, H1Elem h, H1Convention conv) {
  i64 x = f.add(g.x, h.x), y = f.add(g.y, h.y);
  if (conv == H1Convention::matrix) {
    return H1Elem{x, y, f.reduce(g.t + h.t + g.x * h.y)};
  }
  i64 half = f.inv(2);
  return H1Elem{x, y, f.reduce(g.t + h.t + half * f.reduce(g.x * h.y - g.y * h.x))};
}

H1Elem h1_inv(const FieldCtx& f, H1Elem g, H1Convention conv) {
  if (conv == H1Convention::matrix) {
    return H1Elem{f.neg(g.x), f.neg(g.y), f.reduce(-g.t + g.x * g.y)};
  }
  return H1Elem{f.neg(g.x), f.neg(g.y), f.neg(g.t)};
}

H1Elem h1_symmetric_to_matrix(const FieldCtx& f, H1Elem g) {
  return H1Elem{g.x, g.y, f.reduce(g.t + f.inv(2) * f.mul(g.x, g.y))};
}

H1Elem h1_matrix_to_symmetric(const FieldCtx& f, H1Elem g) {
  return H1Elem{g.x, g.y, f.sub(g.t, f.mul(f.inv(2), f.mul(g.x, g.y)))};
}

Vec3 h1_act(const FieldCtx& f, H1Elem g, Vec3 v, H1Convention conv) {
  if (conv == H1Convention::symmetric) g = h1_symmetric_to_matrix(f, g);
  return Vec3{f.reduce(v.x1 + g.x * v.x2 + g.t * v.x3),
              f.reduce(v.x2 + g.y * v.x3), v.x3};
}

H1Convention MatrixSet::h1_convention() const {
  if (kind_ == GroupKind::sl2)
    fail(Errc::convention_mismatch, "SL2 set has no H1 convention");
  return kind_ == GroupKind::h1_matrix ? H1Convention::matrix
                                       : H1Convention::symmetric;
}

i64 MatrixSet::size() const { return static_cast<i64>(keys_.size()); }

const std::vector<SL2Elem>& MatrixSet::sl2() const {
  if (kind_ != GroupKind::sl2)
    fail(Errc::convention_mismatch, "not an SL2 set");
  return sl2_;
}

const std::vector<H1Elem>& MatrixSet::h1() const {
  if (kind_ == GroupKind::sl2)
    fail(Errc::convention_mismatch, "not an H1 set");
  return h1_;
}

bool MatrixSet::contains_key(u64 k) const {
  return std::binary_search(keys_.begin(), keys_.end(), k);
}

namespace {

void check_sl2_elem(const FieldCtx& f, SL2Elem g) {
  auto in_range = [&](i64 r) { return r >= 0 && r < f.p; };
  if (!in_range(g.a) || !in_range(g.b) || !in_range(g.c) || !in_range(g.d))
    fail(Errc::invalid_argument, "matrix entry out of range");
  if (sl2_det(f, g) != 1)
    fail(Errc::invalid_argument, "matrix determinant is not 1");
}

void check_h1_elem(const FieldCtx& f, H1Elem g) {
  auto in_range = [&](i64 r) { return r >= 0 && r < f.p; };
  if (!in_range(g.x) || !in_range(g.y) || !in_range(g.t))
    fail(Errc::invalid_argument, "element coordinate out of range");
}

}  // namespace

MatrixSet MatrixSet::make_sl2(const FieldCtx& f, std::vector<SL2Elem> elems) {
  MatrixSet s;
  s.p_ = f.p;
  s.kind_ = GroupKind::sl2;
  for (SL2Elem g : elems) check_sl2_elem(f, g);
  std::sort(elems.begin(), elems.end(), [&](SL2Elem a, SL2Elem b) {
    return sl2_key(f, a) < sl2_key(f, b);
  });
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  s.sl2_ = std::move(elems);
  s.keys_.reserve(s.sl2_.size());
  for (SL2Elem g : s.sl2_) s.keys_.push_back(sl2_key(f, g));
  return s;
}

MatrixSet MatrixSet::make_h1(const FieldCtx& f, std::vector<H1Elem> elems,
                             H1Convention conv) {
  MatrixSet s;
  s.p_ = f.p;
  s.kind_ = conv == H1Convention::matrix ? GroupKind::h1_matrix
                                         : GroupKind::h1_symmetric;
  for (H1Elem g : elems) check_h1_elem(f, g);
  std::sort(elems.begin(), elems.end(), [&](H1Elem a, H1Elem b) {
    return h1_key(f, a) < h1_key(f, b);
  });
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  s.h1_ = std::move(elems);
  s.keys_.reserve(s.h1_.size());
  for (H1Elem g : s.h1_) s.keys_.push_back(h1_key(f, g));
  return s;
}

bool verify_symmetric(const FieldCtx& f, MatrixSet& s) {
  bool ok = true;
  if (s.kind_ == GroupKind::sl2) {
    for (SL2Elem g : s.sl2_) {
      if (!s.contains_key(sl2_key(f, sl2_inv(f, g)))) { ok = false; break; }
    }
  } else {
    H1Convention conv = s.h1_convention();
    for (H1Elem g : s.h1_) {
      if (!s.contains_key(h1_key(f, h1_inv(f, g, conv)))) { ok = false; break; }
    }
  }
  s.symmetric_ = ok;
  return ok;
}

MatrixSet enumerate_sl2(const FieldCtx& f, i64 cap) {
  if (f.p > cap)
    fail(Errc::cap_exceeded, "SL2 enumeration capped at p <= " + std::to_string(cap));
  std::vector<SL2Elem> out;
  out.reserve(static_cast<size_t>(f.p * (f.p * f.p - 1)));
  // a != 0: d = (1 + bc) / a; a = 0: bc = -1, d free.
  for (i64 a = 1; a < f.p; ++a) {
    i64 ia = f.inv(a);
    for (i64 b = 0; b < f.p; ++b)
      for (i64 c = 0; c < f.p; ++c)
        out.push_back(SL2Elem{a, b, c, f.mul(f.reduce(1 + b * c), ia)});
  }
  for (i64 b = 1; b < f.p; ++b) {
    i64 c = f.neg(f.inv(b));
    for (i64 d = 0; d < f.p; ++d) out.push_back(SL2Elem{0, b, c, d});
  }
  return MatrixSet::make_sl2(f, std::move(out));
}

MatrixSet enumerate_h1(const FieldCtx& f, i64 cap, H1Convention conv) {
  if (f.p > cap)
    fail(Errc::cap_exceeded, "H1 enumeration capped at p <= " + std::to_string(cap));
  std::vector<H1Elem> out;
  out.reserve(static_cast<size_t>(f.p * f.p * f.p));
  for (i64 x = 0; x < f.p; ++x)
    for (i64 y = 0; y < f.p; ++y)
      for (i64 t = 0; t < f.p; ++t) out.push_back(H1Elem{x, y, t});
  return MatrixSet::make_h1(f, std::move(out), conv);
}

namespace {

// Completes nonzero m to an SL2 matrix with first column m.
SL2Elem basis_completion(const FieldCtx& f, Vec2 m) {
  if (is_zero(m)) fail(Errc::zero_vector, "cannot complete the zero vector");
  // Second column (s, t) needs m.x1 * t - m.x2 * s = 1.
  if (m.x1 != 0) return SL2Elem{m.x1, 0, m.x2, f.inv(m.x1)};
  return SL2Elem{0, f.neg(f.inv(m.x2)), m.x2, 0};
}

}  // namespace

MatrixSet transporter_fiber(const FieldCtx& f, Vec2 m, Vec2 m2) {
  if (is_zero(m) || is_zero(m2))
    fail(Errc::zero_vector, "transporter fiber needs nonzero vectors");
  SL2Elem tm = basis_completion(f, m), tm2 = basis_completion(f, m2);
  SL2Elem t0 = sl2_mul(f, tm2, sl2_inv(f, tm));
  // Stab(m) = { I + lambda * m * (m^perp)^T }, m^perp = (-m2, m1).
  Vec2 mp{f.neg(m.x2), m.x1};
  std::vector<SL2Elem> out;
  out.reserve(static_cast<size_t>(f.p));
  for (i64 lam = 0; lam < f.p; ++lam) {
    SL2Elem stab{f.reduce(1 + lam * f.mul(m.x1, mp.x1)),
                 f.reduce(lam * f.mul(m.x1, mp.x2)),
                 f.reduce(lam * f.mul(m.x2, mp.x1)),
                 f.reduce(1 + lam * f.mul(m.x2, mp.x2))};
    out.push_back(sl2_mul(f, t0, stab));
  }
  return MatrixSet::make_sl2(f, std::move(out));
}

std::optional<SL2Elem> pair_transporter(const FieldCtx& f, Vec2 x, Vec2 y,
                                        Vec2 u, Vec2 v) {
  i64 sxy = skew(f, x, y);
  if (sxy == 0)
    fail(Errc::dependent_basis, "source pair is linearly dependent");
  if (skew(f, u, v) != sxy) return std::nullopt;
  // T = [u v] * [x y]^{-1}; det [x y] = x1*y2 - x2*y1 = -skew(x, y).
  i64 det = f.neg(sxy), idet = f.inv(det);
  // [x y]^{-1} = idet * [[y2, -y1], [-x2, x1]]
  i64 i11 = f.mul(idet, y.x2), i12 = f.mul(idet, f.neg(y.x1));
  i64 i21 = f.mul(idet, f.neg(x.x2)), i22 = f.mul(idet, x.x1);
  SL2Elem t{f.reduce(u.x1 * i11 + v.x1 * i21), f.reduce(u.x1 * i12 + v.x1 * i22),
            f.reduce(u.x2 * i11 + v.x2 * i21), f.reduce(u.x2 * i12 + v.x2 * i22)};
  return t;
}

CosetReport max_coset_intersection(const FieldCtx& f, const MatrixSet& s,
                                   double gamma) {
  if (s.kind() != GroupKind::sl2)
    fail(Errc::invalid_argument, "coset scan is defined for SL2 sets");
  if (s.size() == 0) fail(Errc::empty_set, "coset scan of an empty set");
  CosetReport rep;
  rep.checked_families = {"borel (all p+1 direction stabilizers)",
                          "split-torus normalizers (all p(p+1)/2 direction pairs)"};
  rep.unchecked_families = {"nonsplit-torus normalizers (order 2(p+1))",
                            "exceptional subgroups (order <= 120, covered by slack)"};
  i64 n = s.size();
  i64 ndir = f.p + 1;

  // Image directions g(d) for every g in S and direction d; the coset of a
  // Borel subgroup B_d is determined by the image direction, and the coset
  // of a split-torus normalizer N_{d1,d2} by the unordered image pair.
  std::vector<i64> img(static_cast<size_t>(n) * static_cast<size_t>(ndir));
  for (i64 i = 0; i < n; ++i) {
    SL2Elem g = s.sl2()[static_cast<size_t>(i)];
    for (i64 d = 0; d < ndir; ++d) {
      img[static_cast<size_t>(i) * ndir + d] =
          direction_index(f, sl2_act(f, g, direction_rep(f, d)));
    }
  }

  auto note_max = [&](i64 count, const std::string& witness) {
    if (count > rep.max_count) {
      rep.max_count = count;
      rep.witness = witness;
    }
  };

  std::vector<i64> hist(static_cast<size_t>(ndir), 0);
  for (i64 d = 0; d < ndir; ++d) {
    std::fill(hist.begin(), hist.end(), 0);
    i64 best = 0, best_img = 0;
    for (i64 i = 0; i < n; ++i) {
      i64 e = img[static_cast<size_t>(i) * ndir + d];
      if (++hist[static_cast<size_t>(e)] > best) { best = hist[static_cast<size_t>(e)]; best_img = e; }
    }
    note_max(best, "borel: stabilizer of direction " + std::to_string(d) +
                       ", coset mapping it to direction " + std::to_string(best_img));
  }

  std::vector<i64> pair_hist(static_cast<size_t>(ndir) * static_cast<size_t>(ndir), 0);
  for (i64 d1 = 0; d1 < ndir; ++d1) {
    for (i64 d2 = d1 + 1; d2 < ndir; ++d2) {
      std::fill(pair_hist.begin(), pair_hist.end(), 0);
      i64 best = 0;
      for (i64 i = 0; i < n; ++i) {
        i64 e1 = img[static_cast<size_t>(i) * ndir + d1];
        i64 e2 = img[static_cast<size_t>(i) * ndir + d2];
        if (e1 > e2) std::swap(e1, e2);
        i64 c = ++pair_hist[static_cast<size_t>(e1) * ndir + e2];
        if (c > best) best = c;
      }
      note_max(best, "split-torus normalizer: direction pair {" + std::to_string(d1) +
                         "," + std::to_string(d2) + "}");
    }
  }

  rep.max_ratio = static_cast<double>(rep.max_count) / static_cast<double>(n);
  rep.threshold = std::pow(static_cast<double>(f.p), -gamma / 2.0);
  rep.bg_condition_holds = rep.max_ratio < rep.threshold;
  rep.exceptional_slack = 120.0 / static_cast<double>(n);
  return rep;
}

}  // namespace packlab
