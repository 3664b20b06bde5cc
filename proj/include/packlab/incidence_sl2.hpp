#pragma once

#include "packlab/groups.hpp"
#include "packlab/report.hpp"

namespace packlab {

// A point pair (x, y) in A x B is incident to theta in S iff theta y = x.

// Bitmap fast path: sum over theta in S, y in B of [theta y in A].
i64 count_incidences(const FieldCtx& f, const PointSet2& a, const PointSet2& b,
                     const MatrixSet& s);
// Independent triple-loop oracle.
i64 count_incidences_naive(const FieldCtx& f, const PointSet2& a,
                           const PointSet2& b, const MatrixSet& s);

// #{(x1,x2,y1,y2) in A^2 x B^2 : skew(x1,x2) = skew(y1,y2)}, via per-value
// histograms of the skew form.
i64 energy1(const FieldCtx& f, const PointSet2& a, const PointSet2& b);
i64 energy1_naive(const FieldCtx& f, const PointSet2& a, const PointSet2& b);

// Quadruple count #{(x1,x2,y1,y2) in B^4 : skew(x1,x2) = skew(y1,y2)}.
i64 quad_skew_exact(const FieldCtx& f, const PointSet2& b);

// Multiplicative energy #{(a,b,c,d) in S^4 : ab = cd}, via a histogram of
// product multiplicities.  SL2 sets only.
i64 energy2(const FieldCtx& f, const MatrixSet& s);
i64 energy2_naive(const FieldCtx& f, const MatrixSet& s);

// Largest eps with energy2(S) <= |S|^3 / p^eps, clamped at 0.
double empirical_epsilon(const FieldCtx& f, const MatrixSet& s);

// Line a*x1 + b*x2 = c, normalized so the first nonzero of (a, b) is 1.
// Origin lines are exactly the c = 0 subfamily.
struct Line {
  i64 a = 0, b = 0, c = 0;
  bool operator==(const Line&) const = default;
};

Line make_line(const FieldCtx& f, i64 a, i64 b, i64 c);
// x2 = slope * x1 + offset.
Line line_from_slope(const FieldCtx& f, i64 slope, i64 offset);
// x1 = offset.
Line line_vertical(const FieldCtx& f, i64 offset);
// Origin line in direction dir (nonzero).
Line line_through_origin(const FieldCtx& f, Vec2 dir);
bool line_contains(const FieldCtx& f, Line l, Vec2 v);
// The p points of a line, in ascending point-key order.
std::vector<Vec2> line_points(const FieldCtx& f, Line l);
u64 line_key(const FieldCtx& f, Line l);

// Multi-sets with positive integer multiplicities.
struct WeightedPoints {
  i64 p = 0;
  std::vector<std::pair<Vec2, i64>> items;  // deduplicated support
  i64 sum_m = 0, sum_m2 = 0;
  static WeightedPoints make(const FieldCtx& f, std::vector<std::pair<Vec2, i64>> raw);
};
struct WeightedLines {
  i64 p = 0;
  std::vector<std::pair<Line, i64>> items;
  i64 sum_m = 0, sum_m2 = 0;
  static WeightedLines make(const FieldCtx& f, std::vector<std::pair<Line, i64>> raw);
};

// I(P, L) = sum over incident (point, line) pairs of m(point) * m(line).
i64 weighted_pl_incidences(const FieldCtx& f, const WeightedPoints& pts,
                           const WeightedLines& lines);
i64 weighted_pl_incidences_naive(const FieldCtx& f, const WeightedPoints& pts,
                                 const WeightedLines& lines);

// Inputs for evaluate_bound; only the operands a theorem needs must be set.
// k/k1/k2 default to direction statistics when absent; eps defaults to 0;
// gamma has no default (its preconditions report unchecked when absent).
struct BoundInputs {
  const PointSet2* a = nullptr;
  const PointSet2* b = nullptr;
  const MatrixSet* s = nullptr;
  const WeightedPoints* wp = nullptr;
  const WeightedLines* wl = nullptr;
  std::optional<double> eps;
  std::optional<double> gamma;
  std::optional<i64> k, k1, k2;
};

// Theorem ids: thm-2.1, thm-2.1k, thm-2.2, thm-2.2k, thm-2.3(1), thm-2.3(2),
// thm-3.7(1), thm-3.7(2), thm-3.8, thm-3.9, lem-2.3, lem-2.3k, lem-2.7,
// lem-2.8, bnp, cor-3.6, sdz, sdz-multi.
BoundReport evaluate_bound(const FieldCtx& f, const std::string& theorem_id,
                           const BoundInputs& in);

std::vector<std::string> bound_theorem_ids();

}  // namespace packlab
