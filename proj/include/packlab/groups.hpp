#pragma once

#include <optional>
#include <string>
#include <vector>

#include "packlab/fp.hpp"

namespace packlab {

// Row-major 2x2 matrix [[a, b], [c, d]] with det = 1.
struct SL2Elem {
  i64 a = 1, b = 0, c = 0, d = 1;
  bool operator==(const SL2Elem&) const = default;
};

// Upper unitriangular coordinates [a, b, c] <-> ((1,a,c),(0,1,b),(0,0,1)).
// Two multiplication conventions exist for these coordinates; see
// H1Convention.  Elements do not carry their convention; sets do.
struct H1Elem {
  i64 x = 0, y = 0, t = 0;
  bool operator==(const H1Elem&) const = default;
};

// matrix:    (x,y,t)*(x',y',t') = (x+x', y+y', t+t'+x*y'), the literal
//            unitriangular matrix product.
// symmetric: central part t+t'+(x*y'-y*x')/2; isomorphic to the matrix
//            convention via (x,y,t) -> (x, y, t + x*y/2).
enum class H1Convention { matrix, symmetric };

SL2Elem sl2_mul(const FieldCtx& f, SL2Elem g, SL2Elem h);
SL2Elem sl2_inv(const FieldCtx& f, SL2Elem g);
Vec2 sl2_act(const FieldCtx& f, SL2Elem g, Vec2 v);
i64 sl2_det(const FieldCtx& f, SL2Elem g);
// Transpose, used by the Fourier expansion of incidence counts.
SL2Elem sl2_transpose(SL2Elem g);

H1Elem h1_mul(const FieldCtx& f, H1Elem g, H1Elem h, H1Convention conv);
H1Elem h1_inv(const FieldCtx& f, H1Elem g, H1Convention conv);
// Action of the unitriangular matrix on a column vector:
// (X, Y, Z) -> (X + a*Y + c*Z, Y + b*Z, Z).  Elements in the symmetric
// convention are converted to matrix coordinates first, so the action is a
// group action for either convention.
Vec3 h1_act(const FieldCtx& f, H1Elem g, Vec3 v,
            H1Convention conv = H1Convention::matrix);
H1Elem h1_symmetric_to_matrix(const FieldCtx& f, H1Elem g);
H1Elem h1_matrix_to_symmetric(const FieldCtx& f, H1Elem g);

inline u64 sl2_key(const FieldCtx& f, SL2Elem g) {
  u64 p = static_cast<u64>(f.p);
  return ((static_cast<u64>(g.a) * p + static_cast<u64>(g.b)) * p +
          static_cast<u64>(g.c)) * p + static_cast<u64>(g.d);
}
inline u64 h1_key(const FieldCtx& f, H1Elem g) {
  u64 p = static_cast<u64>(f.p);
  return (static_cast<u64>(g.x) * p + static_cast<u64>(g.y)) * p +
         static_cast<u64>(g.t);
}

enum class GroupKind { sl2, h1_matrix, h1_symmetric };

const char* group_kind_name(GroupKind k);

// Immutable deduplicated set of group elements, stored in ascending order
// of the canonical 64-bit element key.  Either the SL2 or the H1 payload is
// populated, never both.
class MatrixSet {
 public:
  static MatrixSet make_sl2(const FieldCtx& f, std::vector<SL2Elem> elems);
  static MatrixSet make_h1(const FieldCtx& f, std::vector<H1Elem> elems,
                           H1Convention conv);

  i64 p() const { return p_; }
  GroupKind kind() const { return kind_; }
  H1Convention h1_convention() const;
  i64 size() const;
  const std::vector<SL2Elem>& sl2() const;
  const std::vector<H1Elem>& h1() const;
  bool contains_key(u64 k) const;
  // True when the set was verified closed under inversion.
  bool symmetric() const { return symmetric_; }

 private:
  i64 p_ = 0;
  GroupKind kind_ = GroupKind::sl2;
  std::vector<SL2Elem> sl2_;
  std::vector<H1Elem> h1_;
  std::vector<u64> keys_;
  bool symmetric_ = false;
  friend bool verify_symmetric(const FieldCtx&, MatrixSet&);
};

// Checks closure under inversion and records the result on the set.
bool verify_symmetric(const FieldCtx& f, MatrixSet& s);

// All p(p^2-1) elements of SL2(F_p); raises cap_exceeded for p > cap.
MatrixSet enumerate_sl2(const FieldCtx& f, i64 cap = 31);
// All p^3 elements of H1(F_p) in the given convention.
MatrixSet enumerate_h1(const FieldCtx& f, i64 cap = 31,
                       H1Convention conv = H1Convention::matrix);

// The p-element fiber {T in SL2 : T m = m2}; m, m2 nonzero.
MatrixSet transporter_fiber(const FieldCtx& f, Vec2 m, Vec2 m2);

// The unique T with T x = u, T y = v when x, y are independent and
// skew(x, y) = skew(u, v); nullopt when the skew values differ.
// Raises dependent_basis when skew(x, y) = 0.
std::optional<SL2Elem> pair_transporter(const FieldCtx& f, Vec2 x, Vec2 y,
                                        Vec2 u, Vec2 v);

// Stabilizer-style subgroup scan: largest |S ∩ gH| / |S| over the checked
// subgroup families (Borel subgroups and split-torus normalizers).
// Exceptional subgroups have order at most 120, giving the additive slack.
struct CosetReport {
  double max_ratio = 0.0;
  i64 max_count = 0;
  std::string witness;  // family and coset achieving max_ratio
  double threshold = 0.0;  // p^{-gamma/2}
  bool bg_condition_holds = false;
  double exceptional_slack = 0.0;  // 120 / |S|
  std::vector<std::string> checked_families;
  std::vector<std::string> unchecked_families;
};

CosetReport max_coset_intersection(const FieldCtx& f, const MatrixSet& s,
                                   double gamma);

}  // namespace packlab
