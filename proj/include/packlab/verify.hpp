#pragma once

#include <vector>

#include "packlab/fp.hpp"
#include "packlab/report.hpp"

namespace packlab {

// Seeded invariant battery over every module at a single prime.  Checks are
// scale-capped: enumerations respect `cap`, transform checks run only at
// transform-sized primes.  A thrown error inside a check marks that check
// failed and the battery continues.
std::vector<CheckResult> run_verify_suite(const FieldCtx& f, u64 seed,
                                          i64 cap = 31);

inline bool all_passed(const std::vector<CheckResult>& rs) {
  for (const CheckResult& r : rs)
    if (!r.passed) return false;
  return true;
}

}  // namespace packlab
