#pragma once

#include "packlab/report.hpp"
#include "packlab/groups.hpp"

namespace packlab {

// A point pair (x, y) in A x B is incident to theta in X iff theta y = x,
// with theta acting as the unitriangular 3x3 matrix.

i64 count_incidences_h1(const FieldCtx& f, const PointSet3& a,
                        const PointSet3& b, const MatrixSet& x);
i64 count_incidences_h1_naive(const FieldCtx& f, const PointSet3& a,
                              const PointSet3& b, const MatrixSet& x);

// Number of theta = [a, b, c] with theta src1 = dst1 and theta src2 = dst2.
// Hypotheses (hypothesis_violated otherwise): src1 = (x,y,z) with z != 0,
// src2 = (u,v,w) with w != 0, matching third coordinates z = z', w = w',
// and y w' + z v' = y' w + z' v.
// The count is 0, 1, or p; vz - wy != 0 forces a unique solution, and in
// the degenerate case solutions exist iff z(u'-u) + w(x-x') = 0, with the
// 'a' coordinate free.
struct H1TransporterResult {
  i64 count = 0;
  std::vector<H1Elem> solutions;  // matrix-convention coordinates
};
H1TransporterResult transporter_count_h1(const FieldCtx& f, Vec3 src1,
                                         Vec3 dst1, Vec3 src2, Vec3 dst2);

// Quadruples ((x,y,z) in A, (x',y',z') in B, (u,v,w) in A, (u',v',w') in B)
// with y w' + z v' = y' w + v z', z = z', w = w'.  Counted by partitioning
// on the shared third coordinates and histogramming the bilinear form.
i64 count_N(const FieldCtx& f, const PointSet3& a, const PointSet3& b);
i64 count_N_naive(const FieldCtx& f, const PointSet3& a, const PointSet3& b);

// Quadruples ((x,y,z) in B, (x',y',z') in A, (u,v,w) in B, (u',v',w') in A)
// satisfying additionally vz - wy = 0 and zu' + xw' - z'u - x'w = 0.
i64 count_Nprime(const FieldCtx& f, const PointSet3& a, const PointSet3& b);
i64 count_Nprime_naive(const FieldCtx& f, const PointSet3& a,
                       const PointSet3& b);

struct Vec4 {
  i64 c[4] = {0, 0, 0, 0};
  bool operator==(const Vec4&) const = default;
};

struct WeightedVec4 {
  i64 p = 0;
  std::vector<std::pair<Vec4, i64>> items;
  i64 sum_m = 0, sum_m2 = 0;
  static WeightedVec4 make(const FieldCtx& f, std::vector<std::pair<Vec4, i64>> raw);
};

// M = sum over u in U, v in V with u.v = 0 of F(u) G(v), against the
// orthogonality bound |M - (sum F)(sum G)/p| <= p^2 sqrt(sum F^2 sum G^2).
BoundReport weighted_orthogonal_count(const FieldCtx& f, const WeightedVec4& u,
                                      const WeightedVec4& v);

struct H1BoundInputs {
  const PointSet3* a = nullptr;
  const PointSet3* b = nullptr;
  const MatrixSet* x = nullptr;
  std::optional<double> eps;  // overrides the fiber-derived epsilon
};

// Theorem ids: thm-5.1 (two-sided incidence bound; rejects zero third
// coordinates), prop-5.2 (count_N), prop-5.3 (count_Nprime <= p|A||B|).
BoundReport evaluate_bound_h1(const FieldCtx& f, const std::string& theorem_id,
                              const H1BoundInputs& in);

std::vector<std::string> bound_theorem_ids_h1();

}  // namespace packlab
