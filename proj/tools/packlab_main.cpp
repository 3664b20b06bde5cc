// Command-line driver. Links the shared C interface only; all rendering
// here works off the JSON strings that interface returns.
//
// Exit codes: 0 success, 1 a computed check failed, 2 usage or input error.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "packlab.h"

namespace {

using nlohmann::json;

struct FieldDel {
  void operator()(pk_field* f) const { pk_field_destroy(f); }
};
struct PointsDel {
  void operator()(pk_points* p) const { pk_points_destroy(p); }
};
struct MatricesDel {
  void operator()(pk_matrices* m) const { pk_matrices_destroy(m); }
};
using FieldPtr = std::unique_ptr<pk_field, FieldDel>;
using PointsPtr = std::unique_ptr<pk_points, PointsDel>;
using MatricesPtr = std::unique_ptr<pk_matrices, MatricesDel>;

std::string take_string(char* s) {
  std::string out = s ? s : "";
  pk_string_free(s);
  return out;
}

int api_error(pk_status st) {
  std::cerr << "error (" << static_cast<int>(st) << "): " << pk_last_error()
            << "\n";
  return 2;
}

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot open " << out_path << " for writing\n";
    return 2;
  }
  out << text;
  return 0;
}

// Loads a point file, adopting its field or checking it against the one
// already adopted. Returns 0 or an exit code.
int load_points_arg(const std::string& path, FieldPtr& field, PointsPtr& pts) {
  pk_field* fraw = nullptr;
  pk_points* praw = nullptr;
  pk_status st = pk_points_load(path.c_str(), &fraw, &praw);
  if (st != PK_OK) return api_error(st);
  if (!field) {
    field.reset(fraw);
  } else if (pk_field_p(fraw) != pk_field_p(field.get())) {
    std::cerr << "error: " << path << " uses p=" << pk_field_p(fraw)
              << ", other inputs use p=" << pk_field_p(field.get()) << "\n";
    pk_field_destroy(fraw);
    pk_points_destroy(praw);
    return 2;
  } else {
    pk_field_destroy(fraw);
  }
  pts.reset(praw);
  return 0;
}

int load_matrices_arg(const std::string& path, FieldPtr& field,
                      MatricesPtr& mats) {
  pk_field* fraw = nullptr;
  pk_matrices* mraw = nullptr;
  pk_status st = pk_matrices_load(path.c_str(), &fraw, &mraw);
  if (st != PK_OK) return api_error(st);
  if (!field) {
    field.reset(fraw);
  } else if (pk_field_p(fraw) != pk_field_p(field.get())) {
    std::cerr << "error: " << path << " uses p=" << pk_field_p(fraw)
              << ", other inputs use p=" << pk_field_p(field.get()) << "\n";
    pk_field_destroy(fraw);
    pk_matrices_destroy(mraw);
    return 2;
  } else {
    pk_field_destroy(fraw);
  }
  mats.reset(mraw);
  return 0;
}

// Field from loaded files, or from --p when nothing was loaded. A --p that
// contradicts the files is rejected.
int ensure_field(FieldPtr& field, int64_t p, bool p_given) {
  if (field) {
    if (p_given && p != pk_field_p(field.get())) {
      std::cerr << "error: --p " << p << " contradicts input files (p="
                << pk_field_p(field.get()) << ")\n";
      return 2;
    }
    return 0;
  }
  if (!p_given) {
    std::cerr << "error: --p is required when no input files are given\n";
    return 2;
  }
  pk_field* raw = nullptr;
  pk_status st = pk_field_create(p, &raw);
  if (st != PK_OK) return api_error(st);
  field.reset(raw);
  return 0;
}

int random_points_arg(const pk_field* f, int dim, int64_t size,
                      bool nonzero_third, uint64_t seed, PointsPtr& pts) {
  pk_points* raw = nullptr;
  pk_status st =
      pk_points_random(f, dim, size, nonzero_third ? 1 : 0, seed, &raw);
  if (st != PK_OK) return api_error(st);
  pts.reset(raw);
  return 0;
}

int random_matrices_arg(const pk_field* f, const std::string& kind,
                        int64_t size, uint64_t seed, MatricesPtr& mats) {
  pk_matrices* raw = nullptr;
  pk_status st = pk_matrices_random(f, kind.c_str(), size, seed, &raw);
  if (st != PK_OK) return api_error(st);
  mats.reset(raw);
  return 0;
}

bool id_in_list(const std::string& kind, const std::string& id) {
  char* raw = nullptr;
  if (pk_list_ids(kind.c_str(), &raw) != PK_OK) return false;
  json ids = json::parse(take_string(raw));
  for (const auto& v : ids)
    if (v.get<std::string>() == id) return true;
  return false;
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void render_preconditions(std::ostream& os, const json& pres) {
  if (pres.empty()) return;
  os << "preconditions:\n";
  for (const auto& pre : pres) {
    std::string mark = !pre["checked"].get<bool>() ? "unchecked"
                       : pre["satisfied"].get<bool>() ? "ok"
                                                      : "VIOLATED";
    os << "  [" << mark << "] " << pre["name"].get<std::string>();
    std::string note = pre["note"].get<std::string>();
    if (!note.empty()) os << "  (" << note << ")";
    os << "\n";
  }
}

void render_notes(std::ostream& os, const json& notes) {
  for (const auto& n : notes) os << "note: " << n.get<std::string>() << "\n";
}

std::string render_bound(const json& r) {
  std::ostringstream os;
  os << "theorem " << r["theorem"].get<std::string>() << "  p=" << r["p"]
     << "\n";
  os << "sizes:";
  for (auto it = r["sizes"].begin(); it != r["sizes"].end(); ++it)
    os << " " << it.key() << "=" << it.value();
  os << "\n";
  os << "exact=" << r["exact"] << "\n";
  os << "main_term=" << fmt_double(r["main_term"].get<double>());
  for (const auto& t : r["terms"])
    os << "  " << t["label"].get<std::string>() << "="
       << fmt_double(t["value"].get<double>());
  os << "\n";
  os << "predicted=" << fmt_double(r["predicted"].get<double>())
     << "  empirical_constant="
     << fmt_double(r["empirical_constant"].get<double>()) << "\n";
  for (auto it = r["params"].begin(); it != r["params"].end(); ++it)
    os << "param " << it.key() << "=" << fmt_double(it.value().get<double>())
       << "\n";
  render_preconditions(os, r["preconditions"]);
  render_notes(os, r["notes"]);
  return os.str();
}

std::string render_packing(const json& r) {
  std::ostringstream os;
  os << "theorem " << r["theorem"].get<std::string>() << "  p=" << r["p"]
     << "  |E|=" << r["E"] << "  |S|=" << r["S"] << "\n";
  os << "actual=" << r["actual"]
     << "  predicted=" << fmt_double(r["predicted"].get<double>())
     << "  ratio=" << fmt_double(r["ratio"].get<double>()) << "\n";
  for (auto it = r["params"].begin(); it != r["params"].end(); ++it)
    os << "param " << it.key() << "=" << fmt_double(it.value().get<double>())
       << "\n";
  render_preconditions(os, r["preconditions"]);
  render_notes(os, r["notes"]);
  return os.str();
}

std::string render_manifest(const json& m) {
  std::ostringstream os;
  os << "construction " << m["id"].get<std::string>() << "  p=" << m["p"]
     << "\n";
  if (m.contains("E_size")) os << "|E|=" << m["E_size"] << "\n";
  if (m.contains("Eprime_size")) os << "|E'|=" << m["Eprime_size"] << "\n";
  if (m.contains("set_size"))
    os << "|S|=" << m["set_size"] << " (" << m["set_kind"].get<std::string>()
       << ")\n";
  for (auto it = m["expected"].begin(); it != m["expected"].end(); ++it) {
    os << it.key() << ": expected=" << it.value();
    if (m["actual"].contains(it.key()))
      os << " actual=" << m["actual"][it.key()];
    os << "\n";
  }
  render_notes(os, m["notes"]);
  return os.str();
}

int run_verify(const std::vector<int64_t>& primes, uint64_t seed, int64_t cap,
               const std::string& format, const std::string& out_path) {
  json all = json::array();
  bool ok = true;
  std::ostringstream text;
  for (int64_t p : primes) {
    pk_field* fraw = nullptr;
    pk_status st = pk_field_create(p, &fraw);
    if (st != PK_OK) return api_error(st);
    FieldPtr field(fraw);
    char* jraw = nullptr;
    int passed = 0;
    st = pk_verify(field.get(), seed, cap, &jraw, &passed);
    if (st != PK_OK) return api_error(st);
    json checks = json::parse(take_string(jraw));
    ok = ok && passed != 0;
    for (const auto& c : checks) {
      if (c["passed"].get<bool>()) {
        text << "[p=" << p << "] ok   " << c["name"].get<std::string>();
        std::string detail = c["detail"].get<std::string>();
        if (!detail.empty()) text << "  (" << detail << ")";
      } else {
        text << "[p=" << p << "] FAIL " << c["name"].get<std::string>() << ": "
             << c["detail"].get<std::string>();
      }
      text << "\n";
    }
    all.push_back({{"p", p}, {"checks", std::move(checks)}});
  }
  text << (ok ? "verify: all checks passed\n" : "verify: FAILURES above\n");
  int rc = emit(format == "json" ? json(all).dump(2) : text.str(), out_path);
  if (rc != 0) return rc;
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact incidence, energy, and packing computations over prime fields"};
  app.require_subcommand(1);

  // Shared option storage; each subcommand registers the flags it uses.
  std::vector<int64_t> primes{5, 7, 11};
  int64_t p = 0;
  uint64_t seed = 1;
  int64_t cap = 31;
  int threads = 1;
  std::string format = "text";
  std::string out_path;
  std::string thm, a_path, b_path, s_path, e_path;
  int64_t na = 0, nb = 0, ns = 0, ne = 0;
  double eps = 0.0, gamma = 0.0;
  std::string group = "sl2";
  bool zero_third = false;

  auto* verify = app.add_subcommand("verify", "Run the invariant battery");
  verify->add_option("--p", primes, "Primes to check")->capture_default_str();
  verify->add_option("--seed", seed, "Random seed")->capture_default_str();
  verify->add_option("--cap", cap, "Largest prime for full enumerations")
      ->capture_default_str();
  verify->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", out_path, "Write output to this file");

  auto* bounds =
      app.add_subcommand("bounds", "Evaluate an incidence or energy bound");
  bounds->add_option("--thm", thm, "Statement id (see --list)")->required(false);
  bool list_bounds = false;
  bounds->add_flag("--list", list_bounds, "List known statement ids");
  bounds->add_option("--a", a_path, "Point file for the first set");
  bounds->add_option("--b", b_path, "Point file for the second set");
  bounds->add_option("--s", s_path, "Matrix file");
  bounds->add_option("--p", p, "Prime for randomly drawn operands");
  auto* bounds_na =
      bounds->add_option("--na", na, "Random size of the first set");
  auto* bounds_nb =
      bounds->add_option("--nb", nb, "Random size of the second set");
  auto* bounds_ns = bounds->add_option("--ns", ns, "Random matrix set size");
  bounds->add_option("--seed", seed, "Random seed")->capture_default_str();
  bounds->add_option("--group", group,
                     "Random matrix kind: sl2, h1-matrix, h1-symmetric");
  bounds->add_flag("--zero-third", zero_third,
                   "Allow zero third coordinates in random spatial sets");
  auto* bounds_eps = bounds->add_option("--eps", eps, "Epsilon override");
  auto* bounds_gamma = bounds->add_option("--gamma", gamma, "Gamma parameter");
  bounds->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  bounds->add_option("--out", out_path, "Write output to this file");

  auto* pack = app.add_subcommand(
      "pack", "Compare an image-set size against its predicted lower bound");
  pack->add_option("--thm", thm, "Statement id (see --list)");
  bool list_pack = false;
  pack->add_flag("--list", list_pack, "List known statement ids");
  pack->add_option("--e", e_path, "Point file for E");
  pack->add_option("--s", s_path, "Matrix file for S");
  pack->add_option("--p", p, "Prime for randomly drawn operands");
  auto* pack_ne = pack->add_option("--ne", ne, "Random size of E");
  auto* pack_ns = pack->add_option("--ns", ns, "Random size of S");
  pack->add_option("--seed", seed, "Random seed")->capture_default_str();
  auto* pack_eps = pack->add_option("--eps", eps, "Epsilon override");
  auto* pack_gamma = pack->add_option("--gamma", gamma, "Gamma parameter");
  pack->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  pack->add_option("--out", out_path, "Write output to this file");

  auto* construct =
      app.add_subcommand("construct", "Generate a named configuration");
  std::string cid;
  std::vector<std::string> param_kv;
  std::string out_e, out_s, out_aux;
  construct->add_option("--id", cid, "Construction id (see --list)");
  bool list_construct = false;
  construct->add_flag("--list", list_construct, "List known construction ids");
  construct->add_option("--p", p, "Prime");
  construct->add_option("--param", param_kv,
                        "Integer parameter as name=value; repeatable");
  construct->add_option("--out-e", out_e, "Write E to this point file");
  construct->add_option("--out-s", out_s, "Write S to this matrix file");
  construct->add_option("--out-aux", out_aux,
                        "Write the auxiliary set to this point file");
  construct->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  construct->add_option("--out", out_path, "Write the manifest to this file");

  auto* sweep = app.add_subcommand("sweep", "Run a sweep specification");
  std::string spec_path;
  sweep->add_option("--spec", spec_path, "Sweep specification (JSON file)")
      ->required();
  sweep->add_option("--threads", threads, "Worker threads")
      ->capture_default_str();
  sweep->add_option("--out", out_path, "Write the CSV to this file");

  auto* energy = app.add_subcommand("energy", "Collision-count statistics");
  std::string kind;
  energy->add_option("--kind", kind,
                     "energy1, energy2, eps, quad-n, or quad-nprime")
      ->required()
      ->check(CLI::IsMember(
          {"energy1", "energy2", "eps", "quad-n", "quad-nprime"}));
  energy->add_option("--a", a_path, "Point file for the first set");
  energy->add_option("--b", b_path, "Point file for the second set");
  energy->add_option("--s", s_path, "Matrix file");
  energy->add_option("--p", p, "Prime for randomly drawn operands");
  auto* energy_na =
      energy->add_option("--na", na, "Random size of the first set");
  auto* energy_nb =
      energy->add_option("--nb", nb, "Random size of the second set");
  auto* energy_ns = energy->add_option("--ns", ns, "Random matrix set size");
  energy->add_option("--seed", seed, "Random seed")->capture_default_str();
  energy->add_option("--group", group,
                     "Random matrix kind: sl2, h1-matrix, h1-symmetric");
  energy->add_flag("--zero-third", zero_third,
                   "Allow zero third coordinates in random spatial sets");
  energy->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  energy->add_option("--out", out_path, "Write output to this file");

  auto* incidence =
      app.add_subcommand("incidence", "Exact incidence count between sets");
  incidence->add_option("--a", a_path, "Point file for the first set");
  incidence->add_option("--b", b_path, "Point file for the second set");
  incidence->add_option("--s", s_path, "Matrix file");
  incidence->add_option("--p", p, "Prime for randomly drawn operands");
  auto* inc_na =
      incidence->add_option("--na", na, "Random size of the first set");
  auto* inc_nb =
      incidence->add_option("--nb", nb, "Random size of the second set");
  auto* inc_ns = incidence->add_option("--ns", ns, "Random matrix set size");
  incidence->add_option("--seed", seed, "Random seed")->capture_default_str();
  incidence->add_option("--group", group,
                        "Random matrix kind: sl2, h1-matrix, h1-symmetric");
  bool fourier = false;
  incidence->add_flag("--fourier", fourier,
                      "Cross-check through the discrete transform (p <= 13)");
  incidence->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  incidence->add_option("--out", out_path, "Write output to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  bool p_given = bounds->count("--p") || pack->count("--p") ||
                 construct->count("--p") || energy->count("--p") ||
                 incidence->count("--p");

  if (verify->parsed()) return run_verify(primes, seed, cap, format, out_path);

  if (bounds->parsed()) {
    if (list_bounds) {
      char* raw = nullptr;
      pk_status st = pk_list_ids("bounds-sl2", &raw);
      if (st != PK_OK) return api_error(st);
      json ids = json::parse(take_string(raw));
      st = pk_list_ids("bounds-h1", &raw);
      if (st != PK_OK) return api_error(st);
      for (const auto& v : json::parse(take_string(raw))) ids.push_back(v);
      return emit(format == "json" ? ids.dump(2) : [&] {
        std::string s;
        for (const auto& v : ids) s += v.get<std::string>() + "\n";
        return s;
      }(), out_path);
    }
    if (thm.empty()) {
      std::cerr << "error: --thm is required (or use --list)\n";
      return 2;
    }
    bool weighted = thm == "sdz" || thm == "sdz-multi";
    bool spatial = id_in_list("bounds-h1", thm);
    if (weighted) {
      if (!p_given) {
        std::cerr << "error: --p is required for weighted instances\n";
        return 2;
      }
      pk_field* fraw = nullptr;
      pk_status st = pk_field_create(p, &fraw);
      if (st != PK_OK) return api_error(st);
      FieldPtr field(fraw);
      char* jraw = nullptr;
      st = pk_evaluate_bound_weighted(field.get(), thm.c_str(),
                                      bounds_na->count() ? na : 40,
                                      bounds_ns->count() ? ns : 40, seed,
                                      &jraw);
      if (st != PK_OK) return api_error(st);
      json r = json::parse(take_string(jraw));
      return emit(format == "json" ? r.dump(2) : render_bound(r), out_path);
    }
    FieldPtr field;
    PointsPtr a, b;
    MatricesPtr s;
    int rc = 0;
    if (!a_path.empty() && (rc = load_points_arg(a_path, field, a))) return rc;
    if (!b_path.empty() && (rc = load_points_arg(b_path, field, b))) return rc;
    if (!s_path.empty() && (rc = load_matrices_arg(s_path, field, s)))
      return rc;
    if ((rc = ensure_field(field, p, p_given))) return rc;
    int dim = spatial ? 3 : 2;
    std::string mkind = spatial
                            ? (group == "sl2" ? std::string("h1-matrix") : group)
                            : group;
    uint64_t sub = seed;
    if (!a && bounds_na->count() &&
        (rc = random_points_arg(field.get(), dim, na, !zero_third, ++sub, a)))
      return rc;
    if (!b && bounds_nb->count() &&
        (rc = random_points_arg(field.get(), dim, nb, !zero_third, ++sub, b)))
      return rc;
    if (!s && bounds_ns->count() &&
        (rc = random_matrices_arg(field.get(), mkind, ns, ++sub, s)))
      return rc;
    double eps_v = eps, gamma_v = gamma;
    char* jraw = nullptr;
    pk_status st = pk_evaluate_bound(
        field.get(), thm.c_str(), a.get(), b.get(), s.get(),
        bounds_eps->count() ? &eps_v : nullptr,
        bounds_gamma->count() ? &gamma_v : nullptr, &jraw);
    if (st != PK_OK) return api_error(st);
    json r = json::parse(take_string(jraw));
    return emit(format == "json" ? r.dump(2) : render_bound(r), out_path);
  }

  if (pack->parsed()) {
    if (list_pack) {
      char* raw = nullptr;
      pk_status st = pk_list_ids("packing", &raw);
      if (st != PK_OK) return api_error(st);
      json ids = json::parse(take_string(raw));
      return emit(format == "json" ? ids.dump(2) : [&] {
        std::string s;
        for (const auto& v : ids) s += v.get<std::string>() + "\n";
        return s;
      }(), out_path);
    }
    if (thm.empty()) {
      std::cerr << "error: --thm is required (or use --list)\n";
      return 2;
    }
    FieldPtr field;
    PointsPtr e;
    MatricesPtr s;
    int rc = 0;
    if (!e_path.empty() && (rc = load_points_arg(e_path, field, e))) return rc;
    if (!s_path.empty() && (rc = load_matrices_arg(s_path, field, s)))
      return rc;
    if ((rc = ensure_field(field, p, p_given))) return rc;
    bool spatial = thm == "thm-1.5";
    uint64_t sub = seed;
    if (!e && (rc = random_points_arg(field.get(), spatial ? 3 : 2,
                                      pack_ne->count() ? ne : 40, true, ++sub,
                                      e)))
      return rc;
    if (!s && (rc = random_matrices_arg(field.get(),
                                        spatial ? "h1-matrix" : "sl2",
                                        pack_ns->count() ? ns : 60, ++sub, s)))
      return rc;
    double eps_v = eps, gamma_v = gamma;
    char* jraw = nullptr;
    pk_status st = pk_pack_compare(field.get(), thm.c_str(), e.get(), s.get(),
                                   pack_eps->count() ? &eps_v : nullptr,
                                   pack_gamma->count() ? &gamma_v : nullptr,
                                   &jraw);
    if (st != PK_OK) return api_error(st);
    json r = json::parse(take_string(jraw));
    return emit(format == "json" ? r.dump(2) : render_packing(r), out_path);
  }

  if (construct->parsed()) {
    if (list_construct) {
      char* raw = nullptr;
      pk_status st = pk_list_ids("constructions", &raw);
      if (st != PK_OK) return api_error(st);
      json ids = json::parse(take_string(raw));
      return emit(format == "json" ? ids.dump(2) : [&] {
        std::string s;
        for (const auto& v : ids) s += v.get<std::string>() + "\n";
        return s;
      }(), out_path);
    }
    if (cid.empty()) {
      std::cerr << "error: --id is required (or use --list)\n";
      return 2;
    }
    if (!construct->count("--p")) {
      std::cerr << "error: --p is required\n";
      return 2;
    }
    json params = json::object();
    for (const std::string& kv : param_kv) {
      size_t pos = kv.find('=');
      if (pos == std::string::npos || pos == 0) {
        std::cerr << "error: --param expects name=value, got '" << kv << "'\n";
        return 2;
      }
      try {
        size_t used = 0;
        long long v = std::stoll(kv.substr(pos + 1), &used);
        if (used != kv.size() - pos - 1) throw std::invalid_argument(kv);
        params[kv.substr(0, pos)] = v;
      } catch (const std::exception&) {
        std::cerr << "error: --param value in '" << kv
                  << "' is not an integer\n";
        return 2;
      }
    }
    pk_field* fraw = nullptr;
    pk_status st = pk_field_create(p, &fraw);
    if (st != PK_OK) return api_error(st);
    FieldPtr field(fraw);
    pk_points* eraw = nullptr;
    pk_matrices* sraw = nullptr;
    pk_points* auxraw = nullptr;
    char* jraw = nullptr;
    st = pk_construct(field.get(), cid.c_str(), params.dump().c_str(), &eraw,
                      &sraw, &auxraw, &jraw);
    if (st != PK_OK) return api_error(st);
    PointsPtr e(eraw), aux(auxraw);
    MatricesPtr s(sraw);
    json manifest = json::parse(take_string(jraw));
    if (!out_e.empty()) {
      if (!e) {
        std::cerr << "error: construction " << cid << " has no point set E\n";
        return 2;
      }
      if ((st = pk_points_save(field.get(), e.get(), out_e.c_str())) != PK_OK)
        return api_error(st);
    }
    if (!out_s.empty()) {
      if (!s) {
        std::cerr << "error: construction " << cid << " has no matrix set\n";
        return 2;
      }
      if ((st = pk_matrices_save(field.get(), s.get(), out_s.c_str())) !=
          PK_OK)
        return api_error(st);
    }
    if (!out_aux.empty()) {
      if (!aux) {
        std::cerr << "error: construction " << cid
                  << " has no auxiliary set\n";
        return 2;
      }
      if ((st = pk_points_save(field.get(), aux.get(), out_aux.c_str())) !=
          PK_OK)
        return api_error(st);
    }
    return emit(format == "json" ? manifest.dump(2) : render_manifest(manifest),
                out_path);
  }

  if (sweep->parsed()) {
    std::ifstream in(spec_path);
    if (!in) {
      std::cerr << "error: cannot read " << spec_path << "\n";
      return 2;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    char* csvraw = nullptr;
    double min_ratio = 0.0;
    int has_packing = 0;
    pk_status st =
        pk_sweep(buf.str().c_str(), threads, &csvraw, &min_ratio, &has_packing);
    if (st != PK_OK) return api_error(st);
    std::string csv = take_string(csvraw);
    int rc = emit(csv, out_path);
    if (rc != 0) return rc;
    if (has_packing)
      std::cerr << "min packing ratio: " << fmt_double(min_ratio) << "\n";
    return 0;
  }

  if (energy->parsed()) {
    FieldPtr field;
    PointsPtr a, b;
    MatricesPtr s;
    int rc = 0;
    bool planar = kind == "energy1";
    bool spatial = kind == "quad-n" || kind == "quad-nprime";
    bool needs_matrices = kind == "energy2" || kind == "eps";
    if (!a_path.empty() && (rc = load_points_arg(a_path, field, a))) return rc;
    if (!b_path.empty() && (rc = load_points_arg(b_path, field, b))) return rc;
    if (!s_path.empty() && (rc = load_matrices_arg(s_path, field, s)))
      return rc;
    if ((rc = ensure_field(field, p, p_given))) return rc;
    uint64_t sub = seed;
    if ((planar || spatial) && !a &&
        (rc = random_points_arg(field.get(), spatial ? 3 : 2,
                                energy_na->count() ? na : 40, !zero_third,
                                ++sub, a)))
      return rc;
    if ((planar || spatial) && !b &&
        (rc = random_points_arg(field.get(), spatial ? 3 : 2,
                                energy_nb->count() ? nb : 40, !zero_third,
                                ++sub, b)))
      return rc;
    if (needs_matrices && !s &&
        (rc = random_matrices_arg(field.get(), group,
                                  energy_ns->count() ? ns : 40, ++sub, s)))
      return rc;
    json r = {{"kind", kind}, {"p", pk_field_p(field.get())}};
    pk_status st = PK_OK;
    if (kind == "energy1") {
      int64_t v = 0;
      st = pk_energy1(field.get(), a.get(), b.get(), &v);
      r["value"] = v;
    } else if (kind == "energy2") {
      int64_t v = 0;
      st = pk_energy2(field.get(), s.get(), &v);
      r["value"] = v;
    } else if (kind == "eps") {
      double v = 0.0;
      st = pk_empirical_epsilon(field.get(), s.get(), &v);
      r["value"] = v;
    } else {
      int64_t v = 0;
      st = pk_count_quadruples(field.get(), a.get(), b.get(),
                               kind == "quad-n" ? 0 : 1, &v);
      r["value"] = v;
    }
    if (st != PK_OK) return api_error(st);
    std::ostringstream text;
    text << kind << " p=" << r["p"] << " value=" << r["value"] << "\n";
    return emit(format == "json" ? r.dump(2) : text.str(), out_path);
  }

  if (incidence->parsed()) {
    FieldPtr field;
    PointsPtr a, b;
    MatricesPtr s;
    int rc = 0;
    if (!a_path.empty() && (rc = load_points_arg(a_path, field, a))) return rc;
    if (!b_path.empty() && (rc = load_points_arg(b_path, field, b))) return rc;
    if (!s_path.empty() && (rc = load_matrices_arg(s_path, field, s)))
      return rc;
    if ((rc = ensure_field(field, p, p_given))) return rc;
    bool spatial = group != "sl2";
    uint64_t sub = seed;
    if (!a && (rc = random_points_arg(field.get(), spatial ? 3 : 2,
                                      inc_na->count() ? na : 40, true, ++sub,
                                      a)))
      return rc;
    if (!b && (rc = random_points_arg(field.get(), spatial ? 3 : 2,
                                      inc_nb->count() ? nb : 40, true, ++sub,
                                      b)))
      return rc;
    if (!s && (rc = random_matrices_arg(field.get(), group,
                                        inc_ns->count() ? ns : 60, ++sub, s)))
      return rc;
    int64_t count = 0;
    pk_status st = pk_count_incidences(field.get(), a.get(), b.get(), s.get(),
                                       &count);
    if (st != PK_OK) return api_error(st);
    json r = {{"p", pk_field_p(field.get())},
              {"A", pk_points_size(a.get())},
              {"B", pk_points_size(b.get())},
              {"S", pk_matrices_size(s.get())},
              {"incidences", count}};
    bool mismatch = false;
    if (fourier) {
      double approx = 0.0;
      st = pk_fourier_incidence(field.get(), a.get(), b.get(), s.get(),
                                &approx);
      if (st != PK_OK) return api_error(st);
      double rel = std::abs(approx - static_cast<double>(count)) /
                   std::max<double>(1.0, static_cast<double>(count));
      r["fourier"] = approx;
      r["fourier_rel_error"] = rel;
      mismatch = rel > 1e-6;
    }
    std::ostringstream text;
    text << "incidences=" << count << " (|A|=" << r["A"] << " |B|=" << r["B"]
         << " |S|=" << r["S"] << ")\n";
    if (fourier)
      text << "fourier=" << fmt_double(r["fourier"].get<double>())
           << " rel_error=" << fmt_double(r["fourier_rel_error"].get<double>())
           << (mismatch ? "  MISMATCH\n" : "\n");
    rc = emit(format == "json" ? r.dump(2) : text.str(), out_path);
    if (rc != 0) return rc;
    return mismatch ? 1 : 0;
  }

  return 2;
}
