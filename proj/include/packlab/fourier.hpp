#pragma once

#include <complex>
#include <vector>

#include "packlab/groups.hpp"

namespace packlab {

// Dense complex-valued function on F_p^n, n in {1, 2, 3, 4}, stored in
// row-major order (last coordinate fastest).  Verification oracle only:
// direct O(p^{2n}) transforms, no FFT.
struct FpFunction {
  i64 p = 0;
  int n = 0;
  std::vector<std::complex<double>> v;

  static FpFunction zero(const FieldCtx& f, int n);
  size_t index(const std::vector<i64>& x) const;
};

// fhat(m) = p^{-n} sum_x chi(-m.x) f(x), chi(t) = exp(2 pi i t / p).
FpFunction dft(const FpFunction& f);
// f(x) = sum_m chi(m.x) fhat(m).
FpFunction idft(const FpFunction& fhat);
// sum_m |fhat(m)|^2, for Plancherel checks against p^{-n} sum_x |f(x)|^2.
double plancherel_lhs(const FpFunction& fhat);
double plancherel_rhs(const FpFunction& f);

// Evaluates |P||S|/p^2 + p^2 sum_{m != 0} sum_theta Ahat(-m) Bhat(theta^T m)
// for P = A x B, the Fourier expansion of the incidence count.  The product
// structure Phat(m1, m2) = Ahat(m1) Bhat(m2) keeps the cost at two 2-dim
// transforms plus (p^2 - 1)|S| summands.  Capped at p <= 13.
double incidence_via_fourier(const FieldCtx& f, const PointSet2& a,
                             const PointSet2& b, const MatrixSet& s);

}  // namespace packlab
