#include "packlab/fourier.hpp"

#include <cmath>
#include <numbers>

namespace packlab {

namespace {

size_t pow_size(i64 p, int n) {
  size_t s = 1;
  for (int i = 0; i < n; ++i) s *= static_cast<size_t>(p);
  return s;
}

// chi(t) = exp(2 pi i t / p) for t in [0, p), precomputed.
std::vector<std::complex<double>> character_table(i64 p) {
  std::vector<std::complex<double>> chi(static_cast<size_t>(p));
  for (i64 t = 0; t < p; ++t) {
    double ang = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(p);
    chi[static_cast<size_t>(t)] = {std::cos(ang), std::sin(ang)};
  }
  return chi;
}

void decode(i64 p, int n, size_t idx, i64* x) {
  for (int i = n - 1; i >= 0; --i) {
    x[i] = static_cast<i64>(idx % static_cast<size_t>(p));
    idx /= static_cast<size_t>(p);
  }
}

i64 dot(i64 p, int n, const i64* a, const i64* b) {
  i64 s = 0;
  for (int i = 0; i < n; ++i) s = (s + a[i] * b[i]) % p;
  return s;
}

}  // namespace

FpFunction FpFunction::zero(const FieldCtx& f, int n) {
  if (n < 1 || n > 4) fail(Errc::dimension_mismatch, "FpFunction supports n in {1,..,4}");
  FpFunction fn;
  fn.p = f.p;
  fn.n = n;
  fn.v.assign(pow_size(f.p, n), {0.0, 0.0});
  return fn;
}

size_t FpFunction::index(const std::vector<i64>& x) const {
  if (static_cast<int>(x.size()) != n)
    fail(Errc::dimension_mismatch, "coordinate count mismatch");
  size_t idx = 0;
  for (i64 c : x) {
    if (c < 0 || c >= p) fail(Errc::invalid_argument, "coordinate out of range");
    idx = idx * static_cast<size_t>(p) + static_cast<size_t>(c);
  }
  return idx;
}

FpFunction dft(const FpFunction& f) {
  FpFunction out = f;
  auto chi = character_table(f.p);
  size_t total = f.v.size();
  double scale = 1.0 / static_cast<double>(total);
  i64 m[4], x[4];
  for (size_t im = 0; im < total; ++im) {
    decode(f.p, f.n, im, m);
    std::complex<double> acc{0.0, 0.0};
    for (size_t ix = 0; ix < total; ++ix) {
      decode(f.p, f.n, ix, x);
      i64 d = dot(f.p, f.n, m, x);
      // chi(-m.x) = conj(chi(m.x))
      acc += std::conj(chi[static_cast<size_t>(d)]) * f.v[ix];
    }
    out.v[im] = acc * scale;
  }
  return out;
}

FpFunction idft(const FpFunction& fhat) {
  FpFunction out = fhat;
  auto chi = character_table(fhat.p);
  size_t total = fhat.v.size();
  i64 m[4], x[4];
  for (size_t ix = 0; ix < total; ++ix) {
    decode(fhat.p, fhat.n, ix, x);
    std::complex<double> acc{0.0, 0.0};
    for (size_t im = 0; im < total; ++im) {
      decode(fhat.p, fhat.n, im, m);
      acc += chi[static_cast<size_t>(dot(fhat.p, fhat.n, m, x))] * fhat.v[im];
    }
    out.v[ix] = acc;
  }
  return out;
}

double plancherel_lhs(const FpFunction& fhat) {
  double s = 0.0;
  for (auto z : fhat.v) s += std::norm(z);
  return s;
}

double plancherel_rhs(const FpFunction& f) {
  double s = 0.0;
  for (auto z : f.v) s += std::norm(z);
  return s / static_cast<double>(f.v.size());
}

double incidence_via_fourier(const FieldCtx& f, const PointSet2& a,
                             const PointSet2& b, const MatrixSet& s) {
  if (f.p > 13)
    fail(Errc::cap_exceeded, "Fourier incidence reconstruction capped at p <= 13");
  if (s.kind() != GroupKind::sl2)
    fail(Errc::invalid_argument, "Fourier reconstruction is defined for SL2 sets");
  if (a.p() != f.p || b.p() != f.p || s.p() != f.p)
    fail(Errc::mixed_modulus, "operands over different moduli");

  auto indicator = [&](const PointSet2& e) {
    FpFunction fn = FpFunction::zero(f, 2);
    for (Vec2 v : e.points())
      fn.v[static_cast<size_t>(v.x1) * static_cast<size_t>(f.p) +
           static_cast<size_t>(v.x2)] = {1.0, 0.0};
    return fn;
  };
  FpFunction ahat = dft(indicator(a));
  FpFunction bhat = dft(indicator(b));

  double p2 = static_cast<double>(f.p) * static_cast<double>(f.p);
  double main = static_cast<double>(a.size()) * static_cast<double>(b.size()) *
                static_cast<double>(s.size()) / p2;
  std::complex<double> tail{0.0, 0.0};
  for (i64 m1 = 0; m1 < f.p; ++m1) {
    for (i64 m2 = 0; m2 < f.p; ++m2) {
      if (m1 == 0 && m2 == 0) continue;
      size_t neg_idx = static_cast<size_t>(f.neg(m1)) * static_cast<size_t>(f.p) +
                       static_cast<size_t>(f.neg(m2));
      std::complex<double> am = ahat.v[neg_idx];
      std::complex<double> acc{0.0, 0.0};
      for (SL2Elem g : s.sl2()) {
        Vec2 tm = sl2_act(f, sl2_transpose(g), Vec2{m1, m2});
        acc += bhat.v[static_cast<size_t>(tm.x1) * static_cast<size_t>(f.p) +
                      static_cast<size_t>(tm.x2)];
      }
      tail += am * acc;
    }
  }
  return main + p2 * tail.real();
}

}  // namespace packlab
