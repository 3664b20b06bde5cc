#pragma once

#include <string>

#include "json.hpp"
#include "packlab/fp.hpp"

namespace packlab {

// Sweep specification (JSON):
//   {"seed": <u64>,
//    "jobs": [{"kind": "random-sl2" | "random-h1" | "construct",
//              "primes": [5, 7, ...],
//              "trials": <n>,            // random kinds; construct runs once
//              "E_size": <n>, "S_size": <n>,   // random kinds
//              "id": "<construction id>",      // construct kind
//              "params": {"dA": 3, ...},       // construct kind, optional
//              "theorems": ["prop-1.1", ...],
//              "eps": <double>, "gamma": <double>}]}   // optional overrides
//
// One CSV row per (job, prime, trial, theorem), ordered by instance index.
// Every instance derives its own seed from (seed, job, prime, trial), so
// results do not depend on the thread count.
struct SweepResult {
  std::string csv;
  i64 rows = 0;
  // Smallest actual/predicted over the packing-theorem rows; +inf when none.
  double min_ratio = 0.0;
  bool has_packing_rows = false;
};

std::string sweep_csv_header();

SweepResult run_sweep(const nlohmann::json& spec, int threads = 1);

}  // namespace packlab
