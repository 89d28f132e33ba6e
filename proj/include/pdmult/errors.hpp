#pragma once

#include <stdexcept>
#include <string>

namespace pdmult {

// Machine-readable error codes. The CLI maps every Error to exit code 2
// and serializes the code string into the JSON payload.
enum class Errc {
  zero_polynomial,
  degenerate_line,
  not_homogeneous,
  not_an_intersection_point,
  common_component,
  infinity_intersection,
  cardinality_mismatch,
  precondition_failed,
  parse_error,
  division_by_zero,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::zero_polynomial: return "zero_polynomial";
    case Errc::degenerate_line: return "degenerate_line";
    case Errc::not_homogeneous: return "not_homogeneous";
    case Errc::not_an_intersection_point: return "not_an_intersection_point";
    case Errc::common_component: return "common_component";
    case Errc::infinity_intersection: return "infinity_intersection";
    case Errc::cardinality_mismatch: return "cardinality_mismatch";
    case Errc::precondition_failed: return "precondition_failed";
    case Errc::parse_error: return "parse_error";
    case Errc::division_by_zero: return "division_by_zero";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  Errc code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

}  // namespace pdmult
