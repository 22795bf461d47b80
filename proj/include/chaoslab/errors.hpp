#pragma once

#include <stdexcept>
#include <string>

namespace chaoslab {

// Failure modes of the public operations. Every chaoslab exception carries
// one of these so the CLI, the bindings and the tests can dispatch on the
// condition instead of matching message text.
enum class Errc {
  closure_exceeds_cap,
  bound_exceeded,
  ideal_kind_mismatch,
  phase_too_large,
  semigroup_too_large,
  not_closed,
  not_invariant,
  not_equivalence,
  not_equivariant,
  not_generating,
  hypothesis_violated,
  particular_point_in_d,
  non_abelian,
  cardinal_order_violated,
  window_too_small,
  unknown_suite,
  unsupported_command,
  parse_error,
  validation_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace chaoslab
