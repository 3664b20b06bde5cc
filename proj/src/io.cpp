#include "packlab/io.hpp"

#include <fstream>
#include <sstream>

namespace packlab {

namespace {

// Splits "k1=v1 k2=v2 ..." into pairs; used for the one-line headers.
std::vector<std::pair<std::string, std::string>> header_fields(const std::string& line) {
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos)
      fail(Errc::parse_error, "malformed header token '" + tok + "'");
    out.emplace_back(tok.substr(0, eq), tok.substr(eq + 1));
  }
  return out;
}

i64 parse_int(const std::string& s, const std::string& what) {
  try {
    size_t pos = 0;
    i64 v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(Errc::parse_error, "expected an integer for " + what + ", got '" + s + "'");
  }
}

std::vector<i64> parse_row(const FieldCtx& f, const std::string& line,
                           size_t want, i64 lineno) {
  std::vector<i64> vals;
  std::istringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ','))
    vals.push_back(parse_int(cell, "line " + std::to_string(lineno)));
  if (vals.size() != want)
    fail(Errc::parse_error, "line " + std::to_string(lineno) + " has " +
                                std::to_string(vals.size()) + " fields, expected " +
                                std::to_string(want));
  for (i64 v : vals)
    if (v < 0 || v >= f.p)
      fail(Errc::parse_error, "line " + std::to_string(lineno) +
                                  " has a residue outside [0, p)");
  return vals;
}

bool next_content_line(std::istream& in, std::string& line, i64& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    line = line.substr(start);
    return true;
  }
  return false;
}

}  // namespace

LoadedPoints read_points(std::istream& in) {
  std::string line;
  i64 lineno = 0;
  if (!next_content_line(in, line, lineno))
    fail(Errc::parse_error, "empty point file");
  i64 p = -1;
  int dim = -1;
  for (const auto& [key, val] : header_fields(line)) {
    if (key == "p") p = parse_int(val, "header p");
    else if (key == "dim") dim = static_cast<int>(parse_int(val, "header dim"));
    else fail(Errc::parse_error, "unknown header key '" + key + "'");
  }
  if (p < 0 || (dim != 2 && dim != 3))
    fail(Errc::parse_error, "point header must give p and dim=2|3");
  LoadedPoints out;
  out.field = FieldCtx::make(p);
  out.dim = dim;
  while (next_content_line(in, line, lineno)) {
    std::vector<i64> v = parse_row(out.field, line, static_cast<size_t>(dim), lineno);
    if (dim == 2)
      out.pts2.push_back(Vec2{v[0], v[1]});
    else
      out.pts3.push_back(Vec3{v[0], v[1], v[2]});
  }
  return out;
}

LoadedPoints read_points_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot open '" + path + "'");
  return read_points(in);
}

LoadedMatrices read_matrices(std::istream& in) {
  std::string line;
  i64 lineno = 0;
  if (!next_content_line(in, line, lineno))
    fail(Errc::parse_error, "empty matrix file");
  i64 p = -1;
  std::string group;
  for (const auto& [key, val] : header_fields(line)) {
    if (key == "p") p = parse_int(val, "header p");
    else if (key == "group") group = val;
    else fail(Errc::parse_error, "unknown header key '" + key + "'");
  }
  if (p < 0) fail(Errc::parse_error, "matrix header must give p");
  FieldCtx f = FieldCtx::make(p);
  if (group == "sl2") {
    std::vector<SL2Elem> elems;
    while (next_content_line(in, line, lineno)) {
      std::vector<i64> v = parse_row(f, line, 4, lineno);
      elems.push_back(SL2Elem{v[0], v[1], v[2], v[3]});
    }
    MatrixSet set = MatrixSet::make_sl2(f, std::move(elems));
    return LoadedMatrices{std::move(f), std::move(set)};
  }
  if (group == "h1-matrix" || group == "h1-symmetric") {
    H1Convention conv = group == "h1-matrix" ? H1Convention::matrix
                                             : H1Convention::symmetric;
    std::vector<H1Elem> elems;
    while (next_content_line(in, line, lineno)) {
      std::vector<i64> v = parse_row(f, line, 3, lineno);
      elems.push_back(H1Elem{v[0], v[1], v[2]});
    }
    MatrixSet set = MatrixSet::make_h1(f, std::move(elems), conv);
    return LoadedMatrices{std::move(f), std::move(set)};
  }
  fail(Errc::parse_error, "unknown group '" + group + "'");
}

LoadedMatrices read_matrices_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot open '" + path + "'");
  return read_matrices(in);
}

void write_points(std::ostream& out, const FieldCtx& f,
                  const std::vector<Vec2>& pts) {
  out << "p=" << f.p << " dim=2\n";
  for (Vec2 v : pts) out << v.x1 << "," << v.x2 << "\n";
}

void write_points(std::ostream& out, const FieldCtx& f,
                  const std::vector<Vec3>& pts) {
  out << "p=" << f.p << " dim=3\n";
  for (Vec3 v : pts) out << v.x1 << "," << v.x2 << "," << v.x3 << "\n";
}

namespace {
template <typename T>
void write_points_path(const std::string& path, const FieldCtx& f, const T& pts) {
  std::ofstream out(path);
  if (!out) fail(Errc::io_error, "cannot write '" + path + "'");
  write_points(out, f, pts);
  if (!out) fail(Errc::io_error, "write failed for '" + path + "'");
}
}  // namespace

void write_points_file(const std::string& path, const FieldCtx& f,
                       const std::vector<Vec2>& pts) {
  write_points_path(path, f, pts);
}

void write_points_file(const std::string& path, const FieldCtx& f,
                       const std::vector<Vec3>& pts) {
  write_points_path(path, f, pts);
}

void write_matrices(std::ostream& out, const MatrixSet& s) {
  out << "p=" << s.p() << " group=" << group_kind_name(s.kind()) << "\n";
  if (s.kind() == GroupKind::sl2) {
    for (const SL2Elem& g : s.sl2())
      out << g.a << "," << g.b << "," << g.c << "," << g.d << "\n";
  } else {
    for (const H1Elem& g : s.h1())
      out << g.x << "," << g.y << "," << g.t << "\n";
  }
}

void write_matrices_file(const std::string& path, const MatrixSet& s) {
  std::ofstream out(path);
  if (!out) fail(Errc::io_error, "cannot write '" + path + "'");
  write_matrices(out, s);
  if (!out) fail(Errc::io_error, "write failed for '" + path + "'");
}

nlohmann::json to_json(const Precondition& pre) {
  return {{"name", pre.name},
          {"checked", pre.checked},
          {"satisfied", pre.satisfied},
          {"note", pre.note}};
}

nlohmann::json to_json(const BoundReport& r) {
  nlohmann::json terms = nlohmann::json::array();
  for (const TermValue& t : r.terms)
    terms.push_back({{"label", t.label}, {"value", t.value}});
  nlohmann::json pres = nlohmann::json::array();
  for (const Precondition& p : r.preconditions) pres.push_back(to_json(p));
  return {{"theorem", r.theorem_id}, {"p", r.p},
          {"sizes", r.sizes},        {"params", r.params},
          {"exact", r.exact},        {"main_term", r.main_term},
          {"terms", terms},          {"log_factor", r.log_factor},
          {"predicted", r.predicted},
          {"empirical_constant", r.empirical_constant},
          {"preconditions", pres},   {"notes", r.notes}};
}

nlohmann::json to_json(const PackingReport& r) {
  nlohmann::json pres = nlohmann::json::array();
  for (const Precondition& p : r.preconditions) pres.push_back(to_json(p));
  nlohmann::json j = {{"theorem", r.theorem_id}, {"p", r.p},
                      {"E", r.set_e},            {"S", r.set_s},
                      {"actual", r.actual},      {"params", r.params},
                      {"predicted", r.predicted},{"ratio", r.ratio},
                      {"preconditions", pres},   {"notes", r.notes}};
  if (r.seed) j["seed"] = *r.seed;
  return j;
}

nlohmann::json to_json(const CheckResult& r) {
  return {{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}};
}

nlohmann::json to_json(const std::vector<CheckResult>& rs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const CheckResult& r : rs) arr.push_back(to_json(r));
  return arr;
}

nlohmann::json to_json(const NamedConfig& cfg) {
  nlohmann::json j = {{"id", cfg.id},
                      {"p", cfg.p},
                      {"expected", cfg.expected},
                      {"actual", cfg.actual},
                      {"notes", cfg.notes}};
  if (cfg.e2) j["E_size"] = cfg.e2->size();
  if (cfg.e3) j["E_size"] = cfg.e3->size();
  if (cfg.eprime) j["Eprime_size"] = cfg.eprime->size();
  if (cfg.s) {
    j["set_size"] = cfg.s->size();
    j["set_kind"] = group_kind_name(cfg.s->kind());
  }
  return j;
}

}  // namespace packlab
