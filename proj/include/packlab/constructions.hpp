#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "packlab/fp.hpp"
#include "packlab/groups.hpp"
#include "packlab/incidence_sl2.hpp"

namespace packlab {

// A generated example configuration: the sets plus the statistics the
// construction is supposed to realize.  Generation recomputes every expected
// statistic from the generated sets and refuses to return on a mismatch, so
// a NamedConfig in hand is already self-verified.
struct NamedConfig {
  std::string id;
  i64 p = 0;
  std::optional<PointSet2> e2;
  std::optional<PointSet3> e3;
  std::optional<PointSet2> eprime;  // auxiliary target set, when one exists
  std::optional<MatrixSet> s;
  std::map<std::string, i64> expected;
  std::map<std::string, i64> actual;
  std::vector<std::string> notes;
};

// The unique multiplicative subgroup of F_p^* of order d; requires d | p-1.
std::vector<i64> mult_subgroup(const FieldCtx& f, i64 d);

// E = {0} x A and S = a size-|B| slice of the transporter fiber onto (0, x')
// for one representative x' per coset of A in B.  Realizes
// |image| = |B| = sqrt(|S||E|).  Requires dA | dB | p-1 and dB <= p.
NamedConfig obs1_config(const FieldCtx& f, i64 dA, i64 dB);

// E = the horizontal origin line; S = all matrices sending (1,0) into the
// union E' of num_lines full origin lines.  The image is exactly E'.
NamedConfig obs2_config(const FieldCtx& f, i64 num_lines);

// All matrices mapping origin line l1 onto origin line l2; size p(p-1).
MatrixSet line_transporter(const FieldCtx& f, Line l1, Line l2);

// The (p-1)^2 matrices [[a, -x], [1/x, 0]] with a, x nonzero.  The repeated
// product count of this family is exactly (p-1)^5.
MatrixSet energy_extremal_family(const FieldCtx& f);

// S = all matrices sending (0,1) to (-x, 0) for x in the order-d subgroup A;
// E = {(y, t) : y in A}.  The image is exactly F_p x A, so all three sizes
// equal d*p.
NamedConfig prop11_sharpness(const FieldCtx& f, i64 d);

// One canonical nonzero point per direction, acted on by the full group:
// k1 = 1, k2 = p+1, image = all p^2 - 1 nonzero points.
NamedConfig prop13_extremal(const FieldCtx& f);

// E = F_p^2 x T, X = the full Heisenberg group; the image is F_p^2 x T.
NamedConfig obs3_config(const FieldCtx& f, const std::vector<i64>& t);

// X = {[a,b,c] : b in A}, E = {(x,y,z) : y, z in A}; the image size is
// exactly p * sum_{z in A} |A + zA|, at most p^2 |A| = |X|.
NamedConfig obs4_config(const FieldCtx& f, const std::vector<i64>& a);

// X = {[a,1,c]}, E = F_p x A x A for the progression A = {start + i*step};
// the image size equals |E| exactly.
NamedConfig obs5_config(const FieldCtx& f, i64 start, i64 step, i64 count);

std::vector<std::string> construction_ids();

// CLI-facing dispatcher over integer parameters.  Set-valued parameters are
// realized as initial segments: t_size -> T = {0..t_size-1}, a_size with
// optional a_start/a_step for progressions.  Line parameters are direction
// indices d1, d2.
NamedConfig make_construction(const FieldCtx& f, const std::string& id,
                              const std::map<std::string, i64>& params);

}  // namespace packlab
