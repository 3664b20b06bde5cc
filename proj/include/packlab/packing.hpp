#pragma once

#include <optional>
#include <string>
#include <vector>

#include "packlab/fp.hpp"
#include "packlab/groups.hpp"
#include "packlab/report.hpp"

namespace packlab {

// Image of a planar set under a set of matrices: {g x : g in S, x in E}.
PointSet2 image_set(const FieldCtx& f, const MatrixSet& s, const PointSet2& e);

// Image of a spatial set under a set of Heisenberg elements. The action
// preserves the third coordinate, so the image lives over the same slices.
PointSet3 image_set3(const FieldCtx& f, const MatrixSet& x, const PointSet3& e);

// Pointwise translation {y + v : y in E}.
PointSet2 translate(const FieldCtx& f, const PointSet2& e, Vec2 v);

struct RichPointInfo {
  Vec2 point{0, 0};
  // Number of directions d such that the line through `point` in direction d
  // contains another point of the set.
  i64 rich_directions = 0;
};

// Point of E maximizing the number of directions with a neighbor in E.
RichPointInfo find_rich_point(const FieldCtx& f, const PointSet2& e);

struct PackingOptions {
  std::optional<double> eps;
  std::optional<double> gamma;
  std::optional<i64> k1;
  std::optional<i64> k2;
  std::optional<u64> seed;  // recorded in the report, not used for computation
};

// Raw lower-bound formula value for a theorem id, before any log division.
// k1/k2 must already be clamped to >= 1.
double packing_lower_bound(const FieldCtx& f, const std::string& id,
                           double size_e, double size_s, double k1, double k2,
                           double eps);

// Computes the exact image size and compares it against the predicted lower
// bound. Statements that hide logarithmic factors divide the prediction by
// log2(p); the divisor is recorded in params.
PackingReport compare_packing(const FieldCtx& f, const std::string& id,
                              const PointSet2& e, const MatrixSet& s,
                              const PackingOptions& opt = {});

// Spatial variant. Requires every point of E to have nonzero third
// coordinate; the fiber condition is measured over the (x2, x3) projection.
PackingReport compare_packing_h1(const FieldCtx& f, const PointSet3& e,
                                 const MatrixSet& x,
                                 const PackingOptions& opt = {});

std::vector<std::string> packing_theorem_ids();

}  // namespace packlab
