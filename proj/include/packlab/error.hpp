#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace packlab {

// Stable error codes; the C API exposes the same numbering.
enum class Errc : int {
  ok = 0,
  not_prime = 1,
  even_modulus = 2,
  zero_inverse = 3,
  cap_exceeded = 4,
  zero_vector = 5,
  dependent_basis = 6,
  mixed_modulus = 7,
  convention_mismatch = 8,
  hypothesis_violated = 9,
  empty_set = 10,
  not_a_divisor = 11,
  infeasible_fiber = 12,
  not_origin_line = 13,
  dimension_mismatch = 14,
  missing_param = 15,
  precondition_violated = 16,
  parse_error = 17,
  io_error = 18,
  invalid_argument = 19,
  internal = 20,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace packlab
