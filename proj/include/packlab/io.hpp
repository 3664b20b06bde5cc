#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "packlab/constructions.hpp"
#include "packlab/fp.hpp"
#include "packlab/groups.hpp"
#include "packlab/report.hpp"

namespace packlab {

// Point file: header "p=<prime> dim=<2|3>", then one point per line as
// comma-separated residues.  Repeated lines are kept; they carry
// multiplicity for weighted consumers, while set constructors deduplicate.
struct LoadedPoints {
  FieldCtx field;
  int dim = 2;
  std::vector<Vec2> pts2;
  std::vector<Vec3> pts3;
};

// Matrix file: header "p=<prime> group=<sl2|h1-matrix|h1-symmetric>", then
// one element per line: a,b,c,d for sl2 and x,y,t for the h1 kinds.
struct LoadedMatrices {
  FieldCtx field;
  MatrixSet set;
};

LoadedPoints read_points(std::istream& in);
LoadedPoints read_points_file(const std::string& path);
LoadedMatrices read_matrices(std::istream& in);
LoadedMatrices read_matrices_file(const std::string& path);

void write_points(std::ostream& out, const FieldCtx& f,
                  const std::vector<Vec2>& pts);
void write_points(std::ostream& out, const FieldCtx& f,
                  const std::vector<Vec3>& pts);
void write_points_file(const std::string& path, const FieldCtx& f,
                       const std::vector<Vec2>& pts);
void write_points_file(const std::string& path, const FieldCtx& f,
                       const std::vector<Vec3>& pts);
void write_matrices(std::ostream& out, const MatrixSet& s);
void write_matrices_file(const std::string& path, const MatrixSet& s);

nlohmann::json to_json(const Precondition& pre);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const PackingReport& r);
nlohmann::json to_json(const CheckResult& r);
nlohmann::json to_json(const std::vector<CheckResult>& rs);
// Manifest of a generated configuration (sets are emitted separately).
nlohmann::json to_json(const NamedConfig& cfg);

}  // namespace packlab
