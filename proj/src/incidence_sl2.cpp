#include "packlab/incidence_sl2.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace packlab {

namespace {

void check_same_p(i64 a, i64 b) {
  if (a != b) fail(Errc::mixed_modulus, "operands over different moduli");
}

void check_sl2_set(const MatrixSet& s) {
  if (s.kind() != GroupKind::sl2)
    fail(Errc::invalid_argument, "operation is defined for SL2 sets");
}

}  // namespace

i64 count_incidences(const FieldCtx& f, const PointSet2& a, const PointSet2& b,
                     const MatrixSet& s) {
  check_same_p(a.p(), b.p());
  check_same_p(a.p(), s.p());
  check_sl2_set(s);
  i64 total = 0;
  for (SL2Elem g : s.sl2())
    for (Vec2 y : b.points())
      if (a.contains(sl2_act(f, g, y))) ++total;
  return total;
}

i64 count_incidences_naive(const FieldCtx& f, const PointSet2& a,
                           const PointSet2& b, const MatrixSet& s) {
  check_same_p(a.p(), b.p());
  check_same_p(a.p(), s.p());
  check_sl2_set(s);
  i64 total = 0;
  for (Vec2 x : a.points())
    for (Vec2 y : b.points())
      for (SL2Elem g : s.sl2())
        if (sl2_act(f, g, y) == x) ++total;
  return total;
}

i64 energy1(const FieldCtx& f, const PointSet2& a, const PointSet2& b) {
  check_same_p(a.p(), b.p());
  std::vector<i64> ra(static_cast<size_t>(f.p), 0), rb(static_cast<size_t>(f.p), 0);
  for (Vec2 x1 : a.points())
    for (Vec2 x2 : a.points()) ++ra[static_cast<size_t>(skew(f, x1, x2))];
  for (Vec2 y1 : b.points())
    for (Vec2 y2 : b.points()) ++rb[static_cast<size_t>(skew(f, y1, y2))];
  i64 total = 0;
  for (i64 t = 0; t < f.p; ++t)
    total += ra[static_cast<size_t>(t)] * rb[static_cast<size_t>(t)];
  return total;
}

i64 energy1_naive(const FieldCtx& f, const PointSet2& a, const PointSet2& b) {
  check_same_p(a.p(), b.p());
  i64 total = 0;
  for (Vec2 x1 : a.points())
    for (Vec2 x2 : a.points())
      for (Vec2 y1 : b.points())
        for (Vec2 y2 : b.points())
          if (skew(f, x1, x2) == skew(f, y1, y2)) ++total;
  return total;
}

i64 quad_skew_exact(const FieldCtx& f, const PointSet2& b) {
  return energy1(f, b, b);
}

i64 energy2(const FieldCtx& f, const MatrixSet& s) {
  check_sl2_set(s);
  std::unordered_map<u64, i64> products;
  products.reserve(static_cast<size_t>(s.size()) * static_cast<size_t>(s.size()));
  for (SL2Elem g : s.sl2())
    for (SL2Elem h : s.sl2()) ++products[sl2_key(f, sl2_mul(f, g, h))];
  i64 total = 0;
  for (const auto& [key, mult] : products) total += mult * mult;
  return total;
}

i64 energy2_naive(const FieldCtx& f, const MatrixSet& s) {
  check_sl2_set(s);
  i64 total = 0;
  for (SL2Elem a : s.sl2())
    for (SL2Elem b : s.sl2())
      for (SL2Elem c : s.sl2())
        for (SL2Elem d : s.sl2())
          if (sl2_mul(f, a, b) == sl2_mul(f, c, d)) ++total;
  return total;
}

double empirical_epsilon(const FieldCtx& f, const MatrixSet& s) {
  check_sl2_set(s);
  if (s.size() == 0) fail(Errc::empty_set, "empirical epsilon of an empty set");
  double e = static_cast<double>(energy2(f, s));
  double n = static_cast<double>(s.size());
  double eps = std::log(n * n * n / e) / std::log(static_cast<double>(f.p));
  return std::max(0.0, eps);
}

Line make_line(const FieldCtx& f, i64 a, i64 b, i64 c) {
  a = f.reduce(a); b = f.reduce(b); c = f.reduce(c);
  if (a == 0 && b == 0) fail(Errc::invalid_argument, "degenerate line (0,0,c)");
  i64 scale = a != 0 ? f.inv(a) : f.inv(b);
  return Line{f.mul(a, scale), f.mul(b, scale), f.mul(c, scale)};
}

Line line_from_slope(const FieldCtx& f, i64 slope, i64 offset) {
  // x2 = slope*x1 + offset  <=>  -slope*x1 + x2 = offset
  return make_line(f, f.neg(f.reduce(slope)), 1, offset);
}

Line line_vertical(const FieldCtx& f, i64 offset) {
  return make_line(f, 1, 0, offset);
}

Line line_through_origin(const FieldCtx& f, Vec2 dir) {
  if (is_zero(dir)) fail(Errc::zero_vector, "line direction is zero");
  // Normal (dir.x2, -dir.x1) annihilates dir.
  return make_line(f, dir.x2, f.neg(dir.x1), 0);
}

bool line_contains(const FieldCtx& f, Line l, Vec2 v) {
  return f.reduce(l.a * v.x1 + l.b * v.x2) == l.c;
}

std::vector<Vec2> line_points(const FieldCtx& f, Line l) {
  std::vector<Vec2> out;
  out.reserve(static_cast<size_t>(f.p));
  if (l.a == 1) {
    // x1 = c - b*x2
    for (i64 x2 = 0; x2 < f.p; ++x2)
      out.push_back(Vec2{f.reduce(l.c - l.b * x2), x2});
    std::sort(out.begin(), out.end(), [&](Vec2 u, Vec2 v) {
      return point_key(f, u) < point_key(f, v);
    });
  } else {
    // (0, 1, c): x2 = c
    for (i64 x1 = 0; x1 < f.p; ++x1) out.push_back(Vec2{x1, l.c});
  }
  return out;
}

u64 line_key(const FieldCtx& f, Line l) {
  u64 p = static_cast<u64>(f.p);
  return (static_cast<u64>(l.a) * p + static_cast<u64>(l.b)) * p +
         static_cast<u64>(l.c);
}

WeightedPoints WeightedPoints::make(const FieldCtx& f,
                                    std::vector<std::pair<Vec2, i64>> raw) {
  std::unordered_map<u64, std::pair<Vec2, i64>> acc;
  for (auto& [v, m] : raw) {
    if (m <= 0) fail(Errc::invalid_argument, "multiplicities must be positive");
    if (v.x1 < 0 || v.x1 >= f.p || v.x2 < 0 || v.x2 >= f.p)
      fail(Errc::invalid_argument, "point out of range");
    auto& slot = acc[point_key(f, v)];
    slot.first = v;
    slot.second += m;
  }
  WeightedPoints w;
  w.p = f.p;
  for (auto& [key, item] : acc) w.items.push_back(item);
  std::sort(w.items.begin(), w.items.end(),
            [&](const auto& x, const auto& y) {
              return point_key(f, x.first) < point_key(f, y.first);
            });
  for (auto& [v, m] : w.items) {
    w.sum_m += m;
    w.sum_m2 += m * m;
  }
  return w;
}

WeightedLines WeightedLines::make(const FieldCtx& f,
                                  std::vector<std::pair<Line, i64>> raw) {
  std::unordered_map<u64, std::pair<Line, i64>> acc;
  for (auto& [l, m] : raw) {
    if (m <= 0) fail(Errc::invalid_argument, "multiplicities must be positive");
    Line canon = make_line(f, l.a, l.b, l.c);
    auto& slot = acc[line_key(f, canon)];
    slot.first = canon;
    slot.second += m;
  }
  WeightedLines w;
  w.p = f.p;
  for (auto& [key, item] : acc) w.items.push_back(item);
  std::sort(w.items.begin(), w.items.end(),
            [&](const auto& x, const auto& y) {
              return line_key(f, x.first) < line_key(f, y.first);
            });
  for (auto& [l, m] : w.items) {
    w.sum_m += m;
    w.sum_m2 += m * m;
  }
  return w;
}

i64 weighted_pl_incidences(const FieldCtx& f, const WeightedPoints& pts,
                           const WeightedLines& lines) {
  check_same_p(pts.p, lines.p);
  std::unordered_map<u64, i64> point_mult;
  point_mult.reserve(pts.items.size());
  for (const auto& [v, m] : pts.items) point_mult.emplace(point_key(f, v), m);
  i64 total = 0;
  for (const auto& [l, lm] : lines.items) {
    for (Vec2 v : line_points(f, l)) {
      auto it = point_mult.find(point_key(f, v));
      if (it != point_mult.end()) total += it->second * lm;
    }
  }
  return total;
}

i64 weighted_pl_incidences_naive(const FieldCtx& f, const WeightedPoints& pts,
                                 const WeightedLines& lines) {
  check_same_p(pts.p, lines.p);
  i64 total = 0;
  for (const auto& [v, pm] : pts.items)
    for (const auto& [l, lm] : lines.items)
      if (line_contains(f, l, v)) total += pm * lm;
  return total;
}

namespace {

double dpow(double base, double e) { return std::pow(base, e); }

struct Evaluator {
  const FieldCtx& f;
  const BoundInputs& in;
  BoundReport r;

  explicit Evaluator(const FieldCtx& ctx, const std::string& id,
                     const BoundInputs& inputs)
      : f(ctx), in(inputs) {
    r.theorem_id = id;
    r.p = ctx.p;
  }

  const PointSet2& A() {
    if (!in.a) fail(Errc::missing_param, r.theorem_id + " needs point set A");
    check_same_p(in.a->p(), f.p);
    return *in.a;
  }
  const PointSet2& B() {
    if (!in.b) fail(Errc::missing_param, r.theorem_id + " needs point set B");
    check_same_p(in.b->p(), f.p);
    return *in.b;
  }
  const MatrixSet& S() {
    if (!in.s) fail(Errc::missing_param, r.theorem_id + " needs matrix set S");
    check_same_p(in.s->p(), f.p);
    check_sl2_set(*in.s);
    return *in.s;
  }
  const WeightedPoints& WP() {
    if (!in.wp) fail(Errc::missing_param, r.theorem_id + " needs weighted points");
    check_same_p(in.wp->p, f.p);
    return *in.wp;
  }
  const WeightedLines& WL() {
    if (!in.wl) fail(Errc::missing_param, r.theorem_id + " needs weighted lines");
    check_same_p(in.wl->p, f.p);
    return *in.wl;
  }

  double eps() {
    double e = in.eps.value_or(0.0);
    r.params["eps"] = e;
    return e;
  }

  void term(const std::string& label, double v) { r.terms.push_back({label, v}); }

  void pre(const std::string& name, bool checked, bool sat, const std::string& note = "") {
    r.preconditions.push_back({name, checked, sat, note});
  }

  void pre_size(const std::string& name, double lhs, double rhs) {
    pre(name, true, lhs <= rhs);
  }

  // Shared hypotheses of the symmetric-set incidence theorems: S = S^{-1},
  // p^gamma < |S| < p^{3 - 2 gamma}, and no heavy Borel/torus coset.
  void symmetric_set_preconditions() {
    const MatrixSet& s = S();
    bool sym = true;
    for (SL2Elem g : s.sl2()) {
      if (!s.contains_key(sl2_key(f, sl2_inv(f, g)))) { sym = false; break; }
    }
    pre("S symmetric (closed under inverse)", true, sym);
    if (in.gamma) {
      double g = *in.gamma;
      r.params["gamma"] = g;
      double lo = dpow(f.p, g), hi = dpow(f.p, 3.0 - 2.0 * g);
      double n = static_cast<double>(s.size());
      pre("p^gamma < |S| < p^(3-2 gamma)", true, lo < n && n < hi);
      CosetReport cr = max_coset_intersection(f, s, g);
      pre("max |S ∩ gH| < p^(-gamma/2) |S| over checked families", true,
          cr.bg_condition_holds,
          "max_ratio=" + std::to_string(cr.max_ratio) + " at " + cr.witness +
              "; exceptional slack " + std::to_string(cr.exceptional_slack));
    } else {
      pre("p^gamma < |S| < p^(3-2 gamma)", false, false, "gamma not supplied");
      pre("max |S ∩ gH| < p^(-gamma/2) |S| over checked families", false, false,
          "gamma not supplied");
    }
  }

  i64 kfrom(const PointSet2& set, std::optional<i64> given, const char* name) {
    i64 k = given.value_or(set.direction_stats().k1);
    if (k <= 0) k = 1;  // empty or origin-only sets; keeps formulas finite
    r.params[name] = static_cast<double>(k);
    return k;
  }
  i64 k2from(const PointSet2& set, std::optional<i64> given) {
    i64 k2 = given.value_or(set.direction_stats().k2);
    if (k2 <= 0) k2 = 1;
    r.params["k2"] = static_cast<double>(k2);
    return k2;
  }

  void sizes_abs() {
    r.sizes["A"] = A().size();
    r.sizes["B"] = B().size();
    r.sizes["S"] = S().size();
    r.sizes["P"] = A().size() * B().size();
  }
};

}  // namespace

BoundReport evaluate_bound(const FieldCtx& f, const std::string& id,
                           const BoundInputs& in) {
  Evaluator ev(f, id, in);
  BoundReport& r = ev.r;
  double p = static_cast<double>(f.p);
  double log2p = std::log2(p);

  if (id == "thm-2.1" || id == "thm-2.1k") {
    ev.sizes_abs();
    double na = ev.A().size(), nb = ev.B().size(), ns = ev.S().size();
    double np = na * nb;
    r.exact = count_incidences(f, ev.A(), ev.B(), ev.S());
    r.main_term = np * ns / (p * p);
    if (id == "thm-2.1") {
      ev.term("p*sqrt(|S||P|)", p * std::sqrt(ns * np));
    } else {
      i64 ka = ev.A().direction_stats().k1, kb = ev.B().direction_stats().k1;
      i64 k = in.k.value_or(std::min(ka, kb));
      if (k <= 0) k = 1;
      r.params["k"] = static_cast<double>(k);
      ev.term("sqrt(p*k)*sqrt(|S||P|)", std::sqrt(p * static_cast<double>(k)) * std::sqrt(ns * np));
    }
    ev.term("|S|", ns);
  } else if (id == "thm-2.2" || id == "thm-2.2k") {
    ev.sizes_abs();
    double na = ev.A().size(), nb = ev.B().size(), ns = ev.S().size();
    double e = ev.eps();
    r.exact = count_incidences(f, ev.A(), ev.B(), ev.S());
    ev.symmetric_set_preconditions();
    ev.term("|A|^(1/2)|B||S|/p", std::sqrt(na) * nb * ns / p);
    if (id == "thm-2.2") {
      ev.term("p^((2-eps)/4)|A|^(1/2)|B|^(1/2)|S|^(3/4)",
              dpow(p, (2.0 - e) / 4.0) * std::sqrt(na * nb) * dpow(ns, 0.75));
    } else {
      i64 k = ev.kfrom(ev.B(), in.k, "k");
      ev.term("k^(1/4)p^((1-eps)/4)|A|^(1/2)|B|^(1/2)|S|^(3/4)",
              dpow(static_cast<double>(k), 0.25) * dpow(p, (1.0 - e) / 4.0) *
                  std::sqrt(na * nb) * dpow(ns, 0.75));
    }
  } else if (id == "thm-2.3(1)" || id == "thm-2.3(2)") {
    ev.sizes_abs();
    double na = ev.A().size(), nb = ev.B().size(), ns = ev.S().size();
    double e = ev.eps();
    i64 k1 = ev.kfrom(ev.B(), in.k1, "k1");
    r.exact = count_incidences(f, ev.A(), ev.B(), ev.S());
    r.log_factor = log2p;
    ev.symmetric_set_preconditions();
    double pe4 = dpow(p, e / 4.0);
    ev.term("k1^(1/2)|A|^(1/2)|S|", std::sqrt(static_cast<double>(k1) * na) * ns);
    ev.term("k1^(1/2)|B|^(1/2)|A|^(1/2)|S|^(3/4)/p^(eps/4)",
            std::sqrt(static_cast<double>(k1) * nb * na) * dpow(ns, 0.75) / pe4);
    if (id == "thm-2.3(1)") {
      i64 k2 = ev.k2from(ev.B(), in.k2);
      ev.pre_size("|B| <= p", nb, p);
      ev.term("k1^(1/8)|B|^(3/4)|A|^(1/2)|S|^(3/4)/p^(eps/4)",
              dpow(static_cast<double>(k1), 0.125) * dpow(nb, 0.75) * std::sqrt(na) *
                  dpow(ns, 0.75) / pe4);
      ev.term("k1^(1/4)k2^(1/4)|B|^(1/2)|A|^(1/2)|S|^(3/4)/p^(eps/4)",
              dpow(static_cast<double>(k1) * static_cast<double>(k2), 0.25) *
                  std::sqrt(nb * na) * dpow(ns, 0.75) / pe4);
    } else {
      ev.pre_size("|B| <= p^(8/15)", nb, dpow(p, 8.0 / 15.0));
      ev.term("k1^(1/15)|B|^(187/225)|A|^(1/2)|S|^(3/4)/p^(eps/4)",
              dpow(static_cast<double>(k1), 1.0 / 15.0) * dpow(nb, 187.0 / 225.0) *
                  std::sqrt(na) * dpow(ns, 0.75) / pe4);
    }
  } else if (id == "thm-3.7(1)" || id == "thm-3.7(2)") {
    ev.sizes_abs();
    double na = ev.A().size(), nb = ev.B().size(), ns = ev.S().size();
    double e = ev.eps();
    i64 k = ev.kfrom(ev.B(), in.k, "k");
    double kk = static_cast<double>(k);
    r.exact = count_incidences(f, ev.A(), ev.B(), ev.S());
    r.log_factor = log2p;
    ev.symmetric_set_preconditions();
    if (id == "thm-3.7(1)") {
      ev.pre("|B| < k^(1/2) p", true, nb < std::sqrt(kk) * p);
      ev.term("k^(1/2)|A|^(1/2)|S|", std::sqrt(kk * na) * ns);
      ev.term("k^(1/4)p^((1-eps)/4)|A|^(1/2)|B|^(1/2)|S|^(3/4)",
              dpow(kk, 0.25) * dpow(p, (1.0 - e) / 4.0) * std::sqrt(na * nb) *
                  dpow(ns, 0.75));
    } else {
      ev.pre("|B| >= k^(1/2) p", true, nb >= std::sqrt(kk) * p);
      ev.term("|A|^(1/2)|B||S|^(3/4)/p^((1+eps)/4)",
              std::sqrt(na) * nb * dpow(ns, 0.75) / dpow(p, (1.0 + e) / 4.0));
    }
  } else if (id == "thm-3.8") {
    ev.sizes_abs();
    double na = ev.A().size(), nb = ev.B().size(), ns = ev.S().size();
    i64 k = ev.kfrom(ev.B(), in.k, "k");
    double kk = static_cast<double>(k);
    r.exact = count_incidences(f, ev.A(), ev.B(), ev.S());
    r.log_factor = log2p;
    ev.symmetric_set_preconditions();
    ev.term("|A||B||S|^(1/2)/p^(1/2)", na * nb * std::sqrt(ns) / std::sqrt(p));
    ev.term("k^(1/2)p^(1/2)|A|^(1/2)|B|^(1/2)|S|^(1/2)",
            std::sqrt(kk * p * na * nb * ns));
    ev.term("k|S|", kk * ns);
  } else if (id == "thm-3.9") {
    ev.sizes_abs();
    double na = ev.A().size(), nb = ev.B().size(), ns = ev.S().size();
    i64 k = ev.kfrom(ev.B(), in.k, "k");
    double kk = static_cast<double>(k);
    r.exact = count_incidences(f, ev.A(), ev.B(), ev.S());
    r.log_factor = log2p;
    ev.symmetric_set_preconditions();
    ev.pre_size("|B| <= |A|", nb, na);
    ev.pre_size("|A| <= p^(8/15)", na, dpow(p, 8.0 / 15.0));
    ev.term("k^(2/15)|A|^(11/15)|B|^(209/225)|S|^(1/2)",
            dpow(kk, 2.0 / 15.0) * dpow(na, 11.0 / 15.0) * dpow(nb, 209.0 / 225.0) *
                std::sqrt(ns));
    ev.term("k|A|^(1/2)|B|^(1/2)|S|^(1/2)", kk * std::sqrt(na * nb * ns));
    ev.term("k|S|", kk * ns);
  } else if (id == "lem-2.3" || id == "lem-2.3k") {
    double na = ev.A().size(), nb = ev.B().size();
    r.sizes["A"] = ev.A().size();
    r.sizes["B"] = ev.B().size();
    r.exact = energy1(f, ev.A(), ev.B());
    r.main_term = na * na * nb * nb / p;
    if (id == "lem-2.3") {
      ev.term("p^2|A||B|", p * p * na * nb);
    } else {
      i64 ka = ev.A().direction_stats().k1, kb = ev.B().direction_stats().k1;
      i64 k = in.k.value_or(std::min(ka, kb));
      if (k <= 0) k = 1;
      r.params["k"] = static_cast<double>(k);
      ev.term("p*k*|A||B|", p * static_cast<double>(k) * na * nb);
    }
  } else if (id == "lem-2.7") {
    double nb = ev.B().size();
    r.sizes["B"] = ev.B().size();
    i64 k1 = ev.kfrom(ev.B(), in.k1, "k1");
    i64 k2 = ev.k2from(ev.B(), in.k2);
    r.exact = quad_skew_exact(f, ev.B());
    ev.pre_size("|B| <= p", nb, p);
    ev.term("k1^(1/2)|B|^3", std::sqrt(static_cast<double>(k1)) * nb * nb * nb);
    ev.term("k1*k2*|B|^2", static_cast<double>(k1) * static_cast<double>(k2) * nb * nb);
    ev.term("k1^2|B|^2", static_cast<double>(k1) * static_cast<double>(k1) * nb * nb);
  } else if (id == "lem-2.8") {
    double nb = ev.B().size();
    r.sizes["B"] = ev.B().size();
    i64 k = ev.kfrom(ev.B(), in.k, "k");
    double kk = static_cast<double>(k);
    r.exact = quad_skew_exact(f, ev.B());
    ev.pre_size("|B| <= p^(8/15)", nb, dpow(p, 8.0 / 15.0));
    ev.term("k^(4/15)|B|^(748/225)", dpow(kk, 4.0 / 15.0) * dpow(nb, 748.0 / 225.0));
    ev.term("k^2|B|^2", kk * kk * nb * nb);
  } else if (id == "bnp") {
    double ns = ev.S().size();
    r.sizes["S"] = ev.S().size();
    r.exact = energy2(f, ev.S());
    ev.term("p^2|S|^2", p * p * ns * ns);
    ev.term("|S|^4/p^3", ns * ns * ns * ns / (p * p * p));
  } else if (id == "cor-3.6") {
    double ns = ev.S().size();
    r.sizes["S"] = ev.S().size();
    double e = ev.eps();
    r.exact = energy2(f, ev.S());
    ev.symmetric_set_preconditions();
    ev.term("|S|^3/p^eps", ns * ns * ns / dpow(p, e));
  } else if (id == "sdz" || id == "sdz-multi") {
    const WeightedPoints& wp = ev.WP();
    const WeightedLines& wl = ev.WL();
    double np = static_cast<double>(wp.sum_m), nl = static_cast<double>(wl.sum_m);
    r.sizes["P"] = wp.sum_m;
    r.sizes["L"] = wl.sum_m;
    r.exact = weighted_pl_incidences(f, wp, wl);
    ev.pre_size("|P| <= p^(8/5)", np, dpow(p, 1.6));
    if (id == "sdz") {
      bool plain = wp.sum_m == static_cast<i64>(wp.items.size()) &&
                   wl.sum_m == static_cast<i64>(wl.items.size());
      ev.pre("all multiplicities are 1", true, plain);
      ev.term("|P|^(11/15)|L|^(11/15)", dpow(np, 11.0 / 15.0) * dpow(nl, 11.0 / 15.0));
    } else {
      double q1 = static_cast<double>(wp.sum_m2), q2 = static_cast<double>(wl.sum_m2);
      r.params["Q1"] = q1;
      r.params["Q2"] = q2;
      r.log_factor = log2p;
      ev.term("|P|^(7/15)|L|^(7/15)Q1^(4/15)Q2^(4/15)",
              dpow(np * nl, 7.0 / 15.0) * dpow(q1 * q2, 4.0 / 15.0));
    }
    ev.term("|P|", np);
    ev.term("|L|", nl);
  } else {
    fail(Errc::invalid_argument, "unknown theorem id: " + id);
  }

  r.params["log2p"] = log2p;
  finish_bound_report(r);
  return r;
}

std::vector<std::string> bound_theorem_ids() {
  return {"thm-2.1", "thm-2.1k", "thm-2.2", "thm-2.2k", "thm-2.3(1)",
          "thm-2.3(2)", "thm-3.7(1)", "thm-3.7(2)", "thm-3.8", "thm-3.9",
          "lem-2.3", "lem-2.3k", "lem-2.7", "lem-2.8", "bnp", "cor-3.6",
          "sdz", "sdz-multi"};
}

}  // namespace packlab
