#pragma once

#include <stdexcept>
#include <string>

namespace hc2 {

// Every precondition violation in the kernel throws Error with one of these
// codes.  Codes are stable identifiers: the CLI prints them verbatim and the
// tests match on them, so treat renames as interface breaks.
enum class Errc {
  zero_vector,
  degenerate_subspace,
  signature_violation,
  base_mismatch,
  degenerate_plane,
  coincident_points,
  not_on_geodesic,
  not_unit_tangent,
  nonpositive_alpha,
  polar_point,
  orthogonal_pair,
  collinear_input,
  not_on_flat,
  not_on_spine,
  non_unit_phase,
  on_spine,
  not_on_bisector,
  parameter_out_of_range,
  no_sign_change,
  dependent_span,
  vertex_input,
  common_flat_exists,
  internal_check,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace hc2
