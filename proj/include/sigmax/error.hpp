#pragma once
// Error codes shared by all sigmax modules. Every contract violation throws
// sigmax::Error carrying one of these codes; the CLI maps them to exit status 2.

#include <stdexcept>
#include <string>

namespace sigmax {

enum class Errc {
  space_too_large,
  foreign_label,
  universe_mismatch,
  empty_reference,
  both_empty,
  zero_vector,
  dimension_mismatch,
  degenerate_grid,
  zero_total,
  kind_mismatch,
  space_mismatch,
  all_zero_given,
  zero_evidence,
  not_exhaustive,
  unknown_fixture,
  internal_disagreement,
  fixture_invalid,
  invalid_argument,
  parse_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace sigmax
