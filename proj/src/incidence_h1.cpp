#include "packlab/incidence_h1.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace packlab {

namespace {

void check_same_p(i64 a, i64 b) {
  if (a != b) fail(Errc::mixed_modulus, "operands over different moduli");
}

void check_h1_set(const MatrixSet& x) {
  if (x.kind() == GroupKind::sl2)
    fail(Errc::invalid_argument, "operation is defined for H1 sets");
}

// Points grouped by third coordinate.
std::vector<std::vector<Vec3>> slices(const FieldCtx& f, const PointSet3& e) {
  std::vector<std::vector<Vec3>> out(static_cast<size_t>(f.p));
  for (Vec3 v : e.points()) out[static_cast<size_t>(v.x3)].push_back(v);
  return out;
}

}  // namespace

i64 count_incidences_h1(const FieldCtx& f, const PointSet3& a,
                        const PointSet3& b, const MatrixSet& x) {
  check_same_p(a.p(), b.p());
  check_same_p(a.p(), x.p());
  check_h1_set(x);
  H1Convention conv = x.h1_convention();
  i64 total = 0;
  for (H1Elem g : x.h1())
    for (Vec3 y : b.points())
      if (a.contains(h1_act(f, g, y, conv))) ++total;
  return total;
}

i64 count_incidences_h1_naive(const FieldCtx& f, const PointSet3& a,
                              const PointSet3& b, const MatrixSet& x) {
  check_same_p(a.p(), b.p());
  check_same_p(a.p(), x.p());
  check_h1_set(x);
  H1Convention conv = x.h1_convention();
  i64 total = 0;
  for (Vec3 xx : a.points())
    for (Vec3 y : b.points())
      for (H1Elem g : x.h1())
        if (h1_act(f, g, y, conv) == xx) ++total;
  return total;
}

H1TransporterResult transporter_count_h1(const FieldCtx& f, Vec3 src1,
                                         Vec3 dst1, Vec3 src2, Vec3 dst2) {
  i64 x = src1.x1, y = src1.x2, z = src1.x3;
  i64 xp = dst1.x1, yp = dst1.x2, zp = dst1.x3;
  i64 u = src2.x1, v = src2.x2, w = src2.x3;
  i64 up = dst2.x1, vp = dst2.x2, wp = dst2.x3;
  if (z == 0 || w == 0)
    fail(Errc::hypothesis_violated, "source third coordinates must be nonzero");
  if (z != zp || w != wp)
    fail(Errc::hypothesis_violated, "third coordinates are preserved; z=z', w=w' required");
  if (f.reduce(y * wp + z * vp) != f.reduce(yp * w + zp * v))
    fail(Errc::hypothesis_violated, "compatibility y w' + z v' = y' w + z' v fails");

  H1TransporterResult res;
  i64 b = f.mul(f.sub(vp, v), f.inv(w));  // = (y'-y)/z by the hypothesis
  i64 det = f.reduce(v * z - w * y);
  i64 rhs = f.reduce(z * (up - u) + w * (x - xp));
  auto solve_c = [&](i64 aa) { return f.mul(f.reduce(xp - x - aa * y), f.inv(z)); };
  if (det != 0) {
    res.count = 1;
    i64 aa = f.mul(rhs, f.inv(det));
    res.solutions.push_back(H1Elem{aa, b, solve_c(aa)});
  } else if (rhs == 0) {
    res.count = f.p;
    for (i64 aa = 0; aa < f.p; ++aa)
      res.solutions.push_back(H1Elem{aa, b, solve_c(aa)});
  } else {
    res.count = 0;
  }
  return res;
}

i64 count_N(const FieldCtx& f, const PointSet3& a, const PointSet3& b) {
  check_same_p(a.p(), b.p());
  auto sa = slices(f, a), sb = slices(f, b);
  std::vector<i64> r1(static_cast<size_t>(f.p)), r2(static_cast<size_t>(f.p));
  i64 total = 0;
  for (i64 lam = 0; lam < f.p; ++lam) {
    const auto& a_lam = sa[static_cast<size_t>(lam)];
    const auto& b_lam = sb[static_cast<size_t>(lam)];
    if (a_lam.empty() && b_lam.empty()) continue;
    for (i64 beta = 0; beta < f.p; ++beta) {
      const auto& a_beta = sa[static_cast<size_t>(beta)];
      const auto& b_beta = sb[static_cast<size_t>(beta)];
      if (a_lam.empty() || b_beta.empty() || b_lam.empty() || a_beta.empty())
        continue;
      std::fill(r1.begin(), r1.end(), 0);
      std::fill(r2.begin(), r2.end(), 0);
      // P1 in A_lam pairs with P4 in B_beta via beta*y + lam*v'.
      for (Vec3 p1 : a_lam)
        for (Vec3 p4 : b_beta)
          ++r1[static_cast<size_t>(f.reduce(beta * p1.x2 + lam * p4.x2))];
      // P2 in B_lam pairs with P3 in A_beta via beta*y' + lam*v.
      for (Vec3 p2 : b_lam)
        for (Vec3 p3 : a_beta)
          ++r2[static_cast<size_t>(f.reduce(beta * p2.x2 + lam * p3.x2))];
      for (i64 t = 0; t < f.p; ++t)
        total += r1[static_cast<size_t>(t)] * r2[static_cast<size_t>(t)];
    }
  }
  return total;
}

i64 count_N_naive(const FieldCtx& f, const PointSet3& a, const PointSet3& b) {
  check_same_p(a.p(), b.p());
  i64 total = 0;
  for (Vec3 p1 : a.points())
    for (Vec3 p2 : b.points()) {
      if (p1.x3 != p2.x3) continue;
      for (Vec3 p3 : a.points())
        for (Vec3 p4 : b.points()) {
          if (p3.x3 != p4.x3) continue;
          if (f.reduce(p1.x2 * p4.x3 + p1.x3 * p4.x2) ==
              f.reduce(p2.x2 * p3.x3 + p3.x2 * p2.x3))
            ++total;
        }
    }
  return total;
}

i64 count_Nprime(const FieldCtx& f, const PointSet3& a, const PointSet3& b) {
  check_same_p(a.p(), b.p());
  auto sa = slices(f, a), sb = slices(f, b);
  std::unordered_map<u64, i64> r1, r2;
  u64 pp = static_cast<u64>(f.p);
  i64 total = 0;
  for (i64 lam = 0; lam < f.p; ++lam) {
    for (i64 beta = 0; beta < f.p; ++beta) {
      const auto& b_lam = sb[static_cast<size_t>(lam)];   // P1
      const auto& a_beta = sa[static_cast<size_t>(beta)]; // P4
      const auto& a_lam = sa[static_cast<size_t>(lam)];   // P2
      const auto& b_beta = sb[static_cast<size_t>(beta)]; // P3
      if (b_lam.empty() || a_beta.empty() || a_lam.empty() || b_beta.empty())
        continue;
      r1.clear();
      r2.clear();
      // (P1, P4) in B_lam x A_beta keyed by
      // (beta*y(P1), lam*v'(P4), lam*u'(P4) + beta*x(P1)).
      for (Vec3 p1 : b_lam)
        for (Vec3 p4 : a_beta) {
          u64 key = (static_cast<u64>(f.reduce(beta * p1.x2)) * pp +
                     static_cast<u64>(f.reduce(lam * p4.x2))) * pp +
                    static_cast<u64>(f.reduce(lam * p4.x1 + beta * p1.x1));
          ++r1[key];
        }
      // (P2, P3) in A_lam x B_beta keyed by
      // (lam*v(P3), beta*y'(P2), lam*u(P3) + beta*x'(P2)).
      for (Vec3 p2 : a_lam)
        for (Vec3 p3 : b_beta) {
          u64 key = (static_cast<u64>(f.reduce(lam * p3.x2)) * pp +
                     static_cast<u64>(f.reduce(beta * p2.x2))) * pp +
                    static_cast<u64>(f.reduce(lam * p3.x1 + beta * p2.x1));
          ++r2[key];
        }
      for (const auto& [key, c1] : r1) {
        auto it = r2.find(key);
        if (it != r2.end()) total += c1 * it->second;
      }
    }
  }
  return total;
}

i64 count_Nprime_naive(const FieldCtx& f, const PointSet3& a,
                       const PointSet3& b) {
  check_same_p(a.p(), b.p());
  i64 total = 0;
  for (Vec3 p1 : b.points())      // (x, y, z)
    for (Vec3 p2 : a.points()) {  // (x', y', z')
      if (p1.x3 != p2.x3) continue;
      for (Vec3 p3 : b.points())      // (u, v, w)
        for (Vec3 p4 : a.points()) {  // (u', v', w')
          if (p3.x3 != p4.x3) continue;
          i64 x = p1.x1, y = p1.x2, z = p1.x3;
          i64 xp = p2.x1, yp = p2.x2, zp = p2.x3;
          i64 u = p3.x1, v = p3.x2, w = p3.x3;
          i64 up = p4.x1, vp = p4.x2, wp = p4.x3;
          if (f.reduce(y * wp + z * vp) != f.reduce(yp * w + v * zp)) continue;
          if (f.reduce(v * z - w * y) != 0) continue;
          if (f.reduce(z * up + x * wp - zp * u - xp * w) != 0) continue;
          ++total;
        }
    }
  return total;
}

WeightedVec4 WeightedVec4::make(const FieldCtx& f,
                                std::vector<std::pair<Vec4, i64>> raw) {
  std::unordered_map<u64, std::pair<Vec4, i64>> acc;
  u64 pp = static_cast<u64>(f.p);
  for (auto& [v, m] : raw) {
    if (m <= 0) fail(Errc::invalid_argument, "multiplicities must be positive");
    u64 key = 0;
    for (i64 c : v.c) {
      if (c < 0 || c >= f.p) fail(Errc::invalid_argument, "coordinate out of range");
      key = key * pp + static_cast<u64>(c);
    }
    auto& slot = acc[key];
    slot.first = v;
    slot.second += m;
  }
  WeightedVec4 w;
  w.p = f.p;
  for (auto& [key, item] : acc) w.items.push_back(item);
  std::sort(w.items.begin(), w.items.end(), [&](const auto& x, const auto& y) {
    for (int i = 0; i < 4; ++i)
      if (x.first.c[i] != y.first.c[i]) return x.first.c[i] < y.first.c[i];
    return false;
  });
  for (auto& [v, m] : w.items) {
    w.sum_m += m;
    w.sum_m2 += m * m;
  }
  return w;
}

BoundReport weighted_orthogonal_count(const FieldCtx& f, const WeightedVec4& u,
                                      const WeightedVec4& v) {
  check_same_p(u.p, f.p);
  check_same_p(v.p, f.p);
  BoundReport r;
  r.theorem_id = "lem-5.5";
  r.p = f.p;
  i64 m = 0;
  for (const auto& [uu, fu] : u.items)
    for (const auto& [vv, gv] : v.items) {
      i64 d = 0;
      for (int i = 0; i < 4; ++i) d += uu.c[i] * vv.c[i];
      if (f.reduce(d) == 0) m += fu * gv;
    }
  r.exact = m;
  r.sizes["U"] = static_cast<i64>(u.items.size());
  r.sizes["V"] = static_cast<i64>(v.items.size());
  r.params["sumF"] = static_cast<double>(u.sum_m);
  r.params["sumG"] = static_cast<double>(v.sum_m);
  r.main_term = static_cast<double>(u.sum_m) * static_cast<double>(v.sum_m) /
                static_cast<double>(f.p);
  double pd = static_cast<double>(f.p);
  r.terms.push_back({"p^2 sqrt(sum F^2 sum G^2)",
                     pd * pd * std::sqrt(static_cast<double>(u.sum_m2) *
                                         static_cast<double>(v.sum_m2))});
  finish_bound_report(r);
  return r;
}

BoundReport evaluate_bound_h1(const FieldCtx& f, const std::string& id,
                              const H1BoundInputs& in) {
  BoundReport r;
  r.theorem_id = id;
  r.p = f.p;
  double p = static_cast<double>(f.p);

  auto need_a = [&]() -> const PointSet3& {
    if (!in.a) fail(Errc::missing_param, id + " needs point set A");
    check_same_p(in.a->p(), f.p);
    return *in.a;
  };
  auto need_b = [&]() -> const PointSet3& {
    if (!in.b) fail(Errc::missing_param, id + " needs point set B");
    check_same_p(in.b->p(), f.p);
    return *in.b;
  };

  if (id == "thm-5.1") {
    const PointSet3& a = need_a();
    const PointSet3& b = need_b();
    if (!in.x) fail(Errc::missing_param, "thm-5.1 needs matrix set X");
    check_same_p(in.x->p(), f.p);
    check_h1_set(*in.x);
    if (!a.all_third_nonzero() || !b.all_third_nonzero())
      fail(Errc::precondition_violated,
           "thm-5.1 requires all third coordinates nonzero in A and B");
    if (a.size() == 0 || b.size() == 0)
      fail(Errc::empty_set, "thm-5.1 needs nonempty A and B");
    double eps_b = b.fiber_stats().empirical_eps;
    double e = in.eps.value_or(eps_b);
    r.params["eps"] = e;
    r.params["eps_fiber_B"] = eps_b;
    double maxfib = static_cast<double>(b.fiber_stats().max_fiber);
    r.preconditions.push_back({"max fiber of B <= p^(1-eps)", true,
                               maxfib <= std::pow(p, 1.0 - e) + 1e-9, ""});
    double na = a.size(), nb = b.size(), nx = static_cast<double>(in.x->size());
    r.sizes["A"] = a.size();
    r.sizes["B"] = b.size();
    r.sizes["X"] = in.x->size();
    r.sizes["P"] = a.size() * b.size();
    r.exact = count_incidences_h1(f, a, b, *in.x);
    r.main_term = na * nb * nx / (p * p * p);
    r.terms.push_back({"p^((3-eps)/2)|P|^(1/2)|X|^(1/2)",
                       std::pow(p, (3.0 - e) / 2.0) * std::sqrt(na * nb * nx)});
  } else if (id == "prop-5.2") {
    const PointSet3& a = need_a();
    const PointSet3& b = need_b();
    if (a.size() == 0 || b.size() == 0)
      fail(Errc::empty_set, "prop-5.2 needs nonempty A and B");
    double eps_a = a.fiber_stats().empirical_eps;
    double eps_b = b.fiber_stats().empirical_eps;
    double e = in.eps.value_or(std::min(eps_a, eps_b));
    r.params["eps"] = e;
    r.params["eps_fiber_A"] = eps_a;
    r.params["eps_fiber_B"] = eps_b;
    r.preconditions.push_back(
        {"max fiber of A <= p^(1-eps)", true,
         static_cast<double>(a.fiber_stats().max_fiber) <= std::pow(p, 1.0 - e) + 1e-9, ""});
    r.preconditions.push_back(
        {"max fiber of B <= p^(1-eps)", true,
         static_cast<double>(b.fiber_stats().max_fiber) <= std::pow(p, 1.0 - e) + 1e-9, ""});
    double na = a.size(), nb = b.size();
    r.sizes["A"] = a.size();
    r.sizes["B"] = b.size();
    r.exact = count_N(f, a, b);
    r.main_term = na * na * nb * nb / p;
    r.terms.push_back({"p^(3-2 eps)|A||B|", std::pow(p, 3.0 - 2.0 * e) * na * nb});
  } else if (id == "prop-5.3") {
    const PointSet3& a = need_a();
    const PointSet3& b = need_b();
    double na = a.size(), nb = b.size();
    r.sizes["A"] = a.size();
    r.sizes["B"] = b.size();
    r.exact = count_Nprime(f, a, b);
    r.terms.push_back({"p|A||B|", p * na * nb});
  } else {
    fail(Errc::invalid_argument, "unknown theorem id: " + id);
  }

  r.params["log2p"] = std::log2(p);
  finish_bound_report(r);
  return r;
}

std::vector<std::string> bound_theorem_ids_h1() {
  return {"thm-5.1", "prop-5.2", "prop-5.3"};
}

}  // namespace packlab
