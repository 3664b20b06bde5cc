#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "packlab/fp.hpp"

namespace packlab {

struct TermValue {
  std::string label;
  double value = 0.0;
};

struct Precondition {
  std::string name;
  bool checked = false;    // false when required inputs were absent
  bool satisfied = false;  // meaningful only when checked
  std::string note;
};

// One evaluated inequality: exact count vs. the formula's right-hand side.
// For two-sided bounds |exact - main| <= C * (sum of terms);
// empirical_constant = |exact - main| / (log_factor * sum of terms).
// One-sided bounds have main = 0.  Theorems stated up to a log lose the
// factor log2(p) into log_factor; predicted = main + log_factor * sum.
struct BoundReport {
  std::string theorem_id;
  i64 p = 0;
  std::map<std::string, i64> sizes;
  std::map<std::string, double> params;
  i64 exact = 0;
  double main_term = 0.0;
  std::vector<TermValue> terms;
  double log_factor = 1.0;
  double predicted = 0.0;
  double empirical_constant = 0.0;
  std::vector<Precondition> preconditions;
  std::vector<std::string> notes;
};

// Packing lower bound: actual = |S(E)| vs. predicted; ratio = actual/predicted.
struct PackingReport {
  std::string theorem_id;
  i64 p = 0;
  i64 set_e = 0, set_s = 0, actual = 0;
  std::map<std::string, double> params;  // k, k1, k2, eps, ...
  double predicted = 0.0;
  double ratio = 0.0;
  std::optional<u64> seed;
  std::vector<Precondition> preconditions;
  std::vector<std::string> notes;
};

// One named invariant check from the verification suite.
struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

inline void finish_bound_report(BoundReport& r) {
  double sum = 0.0;
  for (const auto& t : r.terms) sum += t.value;
  r.predicted = r.main_term + r.log_factor * sum;
  double err = r.log_factor * sum;
  double dev = r.exact >= r.main_term ? static_cast<double>(r.exact) - r.main_term
                                      : r.main_term - static_cast<double>(r.exact);
  r.empirical_constant = err > 0.0 ? dev / err : 0.0;
}

}  // namespace packlab
