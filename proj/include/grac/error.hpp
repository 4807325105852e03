#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace grac {

enum class Errc {
  forward_reference,
  empty_grammar,
  cap_exceeded,
  out_of_range,
  parse_error,
  element_out_of_universe,
  not_blocked,
  out_of_grid,
  width_not_power_of_two,
  unknown_edge,
  bad_layer,
  malformed_bwt,
  malformed_code,
  unknown_family,
  invalid_argument,
  io_error,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace grac
