#include "packlab/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <limits>
#include <mutex>
#include <thread>

#include "packlab/constructions.hpp"
#include "packlab/incidence_h1.hpp"
#include "packlab/incidence_sl2.hpp"
#include "packlab/packing.hpp"
#include "packlab/rng.hpp"

namespace packlab {

namespace {

u64 mix_seed(u64 a, u64 b) {
  Rng r(a ^ (b * 0x9e3779b97f4a7c15ULL + 0x7f4a7c15ULL));
  return r.next();
}

struct Instance {
  std::string kind;
  i64 p = 0;
  i64 trial = 0;
  u64 seed = 0;
  i64 e_size = 0, s_size = 0;
  std::string cons_id;
  std::map<std::string, i64> cons_params;
  std::vector<std::string> theorems;
  std::optional<double> eps, gamma;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

bool is_packing_id(const std::string& id) {
  auto ids = packing_theorem_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

bool is_sl2_bound_id(const std::string& id) {
  auto ids = bound_theorem_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

bool is_h1_bound_id(const std::string& id) {
  auto ids = bound_theorem_ids_h1();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

struct RowSink {
  std::string* out;
  double* min_ratio;
  bool* has_packing;

  void add(i64 p, i64 e, i64 s, i64 k1, i64 k2, double eps,
           const std::string& theorem, double predicted, double actual,
           u64 seed) {
    double ratio = predicted > 0 ? actual / predicted : 0.0;
    *out += std::to_string(p) + "," + std::to_string(e) + "," +
            std::to_string(s) + "," + std::to_string(k1) + "," +
            std::to_string(k2) + "," + fmt(eps) + "," + theorem + "," +
            fmt(predicted) + "," + fmt(actual) + "," + fmt(ratio) + "," +
            std::to_string(seed) + "\n";
    if (is_packing_id(theorem)) {
      *has_packing = true;
      *min_ratio = std::min(*min_ratio, ratio);
    }
  }
};

// Random weighted point/line instance for the plain and weighted
// point-line bounds, sized from the job's E_size/S_size.
void eval_weighted_row(const FieldCtx& f, const Instance& inst,
                       const std::string& id, Rng& rng, RowSink sink) {
  std::vector<std::pair<Vec2, i64>> praw;
  std::vector<std::pair<Line, i64>> lraw;
  for (i64 j = 0; j < std::max<i64>(1, inst.e_size); ++j)
    praw.push_back({Vec2{rng.residue(f), rng.residue(f)},
                    1 + static_cast<i64>(rng.below(3))});
  for (i64 j = 0; j < std::max<i64>(1, inst.s_size); ++j) {
    Line l = rng.below(2) ? line_from_slope(f, rng.residue(f), rng.residue(f))
                          : line_vertical(f, rng.residue(f));
    lraw.push_back({l, 1 + static_cast<i64>(rng.below(3))});
  }
  WeightedPoints wp = WeightedPoints::make(f, std::move(praw));
  WeightedLines wl = WeightedLines::make(f, std::move(lraw));
  BoundInputs in;
  in.wp = &wp;
  in.wl = &wl;
  in.eps = inst.eps;
  in.gamma = inst.gamma;
  BoundReport r = evaluate_bound(f, id, in);
  sink.add(f.p, static_cast<i64>(wp.items.size()), static_cast<i64>(wl.items.size()),
           0, 0, inst.eps.value_or(0.0), id, r.predicted,
           static_cast<double>(r.exact), inst.seed);
}

void eval_planar(const FieldCtx& f, const Instance& inst, const PointSet2& e,
                 const MatrixSet& s, Rng& rng, RowSink sink) {
  for (const std::string& id : inst.theorems) {
    if (id == "sdz" || id == "sdz-multi") {
      eval_weighted_row(f, inst, id, rng, sink);
      continue;
    }
    if (is_packing_id(id)) {
      PackingOptions opt;
      opt.eps = inst.eps;
      opt.gamma = inst.gamma;
      opt.seed = inst.seed;
      PackingReport r = compare_packing(f, id, e, s, opt);
      sink.add(f.p, r.set_e, r.set_s, e.direction_stats().k1,
               e.direction_stats().k2, r.params.count("eps") ? r.params.at("eps") : 0.0,
               id, r.predicted, static_cast<double>(r.actual), inst.seed);
      continue;
    }
    if (is_sl2_bound_id(id)) {
      PointSet2 img = image_set(f, s, e);
      BoundInputs in;
      in.a = &img;
      in.b = &e;
      in.s = &s;
      in.eps = inst.eps;
      in.gamma = inst.gamma;
      BoundReport r = evaluate_bound(f, id, in);
      sink.add(f.p, e.size(), s.size(), e.direction_stats().k1,
               e.direction_stats().k2, inst.eps.value_or(0.0), id, r.predicted,
               static_cast<double>(r.exact), inst.seed);
      continue;
    }
    fail(Errc::invalid_argument,
         "theorem " + id + " does not apply to a planar instance");
  }
}

void eval_spatial(const FieldCtx& f, const Instance& inst, const PointSet3& e,
                  const MatrixSet& x, RowSink sink) {
  for (const std::string& id : inst.theorems) {
    if (id == "thm-1.5") {
      PackingOptions opt;
      opt.eps = inst.eps;
      opt.seed = inst.seed;
      PackingReport r = compare_packing_h1(f, e, x, opt);
      sink.add(f.p, r.set_e, r.set_s, 0, 0, r.params.at("eps"), id, r.predicted,
               static_cast<double>(r.actual), inst.seed);
      continue;
    }
    if (is_h1_bound_id(id)) {
      PointSet3 img = image_set3(f, x, e);
      H1BoundInputs in;
      in.a = &img;
      in.b = &e;
      in.x = &x;
      in.eps = inst.eps;
      BoundReport r = evaluate_bound_h1(f, id, in);
      double eps = r.params.count("eps") ? r.params.at("eps") : 0.0;
      sink.add(f.p, e.size(), x.size(), 0, 0, eps, id, r.predicted,
               static_cast<double>(r.exact), inst.seed);
      continue;
    }
    fail(Errc::invalid_argument,
         "theorem " + id + " does not apply to a spatial instance");
  }
}

void eval_instance(const Instance& inst, RowSink sink) {
  FieldCtx f = FieldCtx::make(inst.p);
  Rng rng(inst.seed);
  if (inst.kind == "random-sl2") {
    PointSet2 e = random_point_set2(f, inst.e_size, rng);
    MatrixSet s = random_sl2_set(f, inst.s_size, rng);
    eval_planar(f, inst, e, s, rng, sink);
    return;
  }
  if (inst.kind == "random-h1") {
    PointSet3 e = random_point_set3(f, inst.e_size, rng, true);
    MatrixSet x = random_h1_set(f, inst.s_size, rng);
    eval_spatial(f, inst, e, x, sink);
    return;
  }
  if (inst.kind == "construct") {
    NamedConfig cfg = make_construction(f, inst.cons_id, inst.cons_params);
    if (cfg.e3 && cfg.s) {
      eval_spatial(f, inst, *cfg.e3, *cfg.s, sink);
      return;
    }
    if (cfg.e2 && cfg.s) {
      eval_planar(f, inst, *cfg.e2, *cfg.s, rng, sink);
      return;
    }
    // Set-only configurations still support the pure size/energy bounds.
    if (cfg.s && cfg.s->kind() == GroupKind::sl2) {
      for (const std::string& id : inst.theorems) {
        BoundInputs in;
        in.s = &*cfg.s;
        in.eps = inst.eps;
        in.gamma = inst.gamma;
        BoundReport r = evaluate_bound(f, id, in);
        sink.add(f.p, 0, cfg.s->size(), 0, 0, inst.eps.value_or(0.0), id,
                 r.predicted, static_cast<double>(r.exact), inst.seed);
      }
      return;
    }
    fail(Errc::invalid_argument,
         "construction " + inst.cons_id + " yields no sweepable sets");
  }
  fail(Errc::invalid_argument, "unknown job kind '" + inst.kind + "'");
}

}  // namespace

std::string sweep_csv_header() {
  return "p,E,S,k1,k2,eps,theorem,predicted,actual,ratio,seed\n";
}

SweepResult run_sweep(const nlohmann::json& spec, int threads) {
  if (!spec.is_object()) fail(Errc::parse_error, "sweep spec must be a JSON object");
  u64 global_seed = spec.value("seed", u64{0});

  std::vector<Instance> instances;
  const nlohmann::json jobs = spec.value("jobs", nlohmann::json::array());
  if (!jobs.is_array()) fail(Errc::parse_error, "'jobs' must be an array");
  for (size_t ji = 0; ji < jobs.size(); ++ji) {
    const nlohmann::json& job = jobs[ji];
    if (!job.is_object()) fail(Errc::parse_error, "each job must be an object");
    Instance proto;
    proto.kind = job.value("kind", std::string{});
    if (!job.contains("primes") || !job["primes"].is_array() || job["primes"].empty())
      fail(Errc::parse_error, "job " + std::to_string(ji) + " needs a 'primes' array");
    if (!job.contains("theorems") || !job["theorems"].is_array() || job["theorems"].empty())
      fail(Errc::parse_error, "job " + std::to_string(ji) + " needs a 'theorems' array");
    for (const auto& t : job["theorems"]) proto.theorems.push_back(t.get<std::string>());
    proto.e_size = job.value("E_size", i64{0});
    proto.s_size = job.value("S_size", i64{0});
    proto.cons_id = job.value("id", std::string{});
    if (job.contains("params"))
      for (const auto& [k, v] : job["params"].items())
        proto.cons_params[k] = v.get<i64>();
    if (job.contains("eps")) proto.eps = job["eps"].get<double>();
    if (job.contains("gamma")) proto.gamma = job["gamma"].get<double>();
    i64 trials = proto.kind == "construct" ? 1 : job.value("trials", i64{1});
    if (trials < 1) fail(Errc::parse_error, "'trials' must be positive");

    for (const auto& pj : job["primes"]) {
      i64 p = pj.get<i64>();
      for (i64 trial = 0; trial < trials; ++trial) {
        Instance inst = proto;
        inst.p = p;
        inst.trial = trial;
        inst.seed = mix_seed(mix_seed(mix_seed(global_seed, ji), static_cast<u64>(p)),
                             static_cast<u64>(trial));
        instances.push_back(std::move(inst));
      }
    }
  }

  std::vector<std::string> chunks(instances.size());
  std::vector<double> ratios(instances.size(), std::numeric_limits<double>::infinity());
  std::vector<char> packing_flags(instances.size(), 0);

  auto work = [&](size_t i) {
    double mr = std::numeric_limits<double>::infinity();
    bool hp = false;
    RowSink sink{&chunks[i], &mr, &hp};
    eval_instance(instances[i], sink);
    ratios[i] = mr;
    packing_flags[i] = hp ? 1 : 0;
  };

  if (threads <= 1 || instances.size() <= 1) {
    for (size_t i = 0; i < instances.size(); ++i) work(i);
  } else {
    std::atomic<size_t> next{0};
    std::exception_ptr first_error;
    std::mutex err_mu;
    auto worker = [&] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= instances.size()) return;
        try {
          work(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mu);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    };
    size_t n = std::min<size_t>(static_cast<size_t>(threads), instances.size());
    std::vector<std::thread> pool;
    for (size_t i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  SweepResult res;
  res.csv = sweep_csv_header();
  res.min_ratio = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < instances.size(); ++i) {
    res.csv += chunks[i];
    if (packing_flags[i]) {
      res.has_packing_rows = true;
      res.min_ratio = std::min(res.min_ratio, ratios[i]);
    }
  }
  for (char c : res.csv)
    if (c == '\n') ++res.rows;
  res.rows -= 1;  // header
  return res;
}

}  // namespace packlab
