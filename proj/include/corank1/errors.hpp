#pragma once

#include <stdexcept>
#include <string>

namespace corank1 {

enum class errc {
  hermitian_violation,
  realness_violation,
  out_of_range,
  dimension_mismatch,
  degenerate_type,
  point_not_interior,
  zero_vector,
  empty_intersection,
  curve_exits_domain,
  not_boundary_point,
  disconnected,
  infinite_type_point,
  not_normal_approach,
  degenerate_limit,
  invalid_domain,
  bad_input,
};

const char* errc_name(errc c);

/// Library-wide exception carrying a stable error code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw Error(c, msg); }

}  // namespace corank1
