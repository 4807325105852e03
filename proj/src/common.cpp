#include <cctype>

#include "grac/big_int.hpp"
#include "grac/bit_string.hpp"
#include "grac/error.hpp"

namespace grac {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::forward_reference: return "ForwardReference";
    case Errc::empty_grammar: return "EmptyGrammar";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::out_of_range: return "OutOfRange";
    case Errc::parse_error: return "ParseError";
    case Errc::element_out_of_universe: return "ElementOutOfUniverse";
    case Errc::not_blocked: return "NotBlocked";
    case Errc::out_of_grid: return "OutOfGrid";
    case Errc::width_not_power_of_two: return "WidthNotPowerOfTwo";
    case Errc::unknown_edge: return "UnknownEdge";
    case Errc::bad_layer: return "BadLayer";
    case Errc::malformed_bwt: return "MalformedBwt";
    case Errc::malformed_code: return "MalformedCode";
    case Errc::unknown_family: return "UnknownFamily";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::io_error: return "IoError";
  }
  return "Unknown";
}

std::size_t ceil_log2(const BigInt& v) {
  if (v <= 1) return 0;
  BigInt m = v - 1;
  return boost::multiprecision::msb(m) + 1;
}

std::size_t ceil_log2(std::uint64_t v) { return ceil_log2(BigInt(v)); }

BigInt parse_decimal(const std::string& text) {
  if (text.empty()) throw Error(Errc::parse_error, "empty integer");
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw Error(Errc::parse_error, "not a non-negative integer: '" + text + "'");
  }
  return BigInt(text);
}

BitString BitString::from_text(std::string_view text) {
  std::vector<bool> bits;
  bits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c != '0' && c != '1')
      throw Error(Errc::parse_error, "bit string has '" + std::string(1, c) + "' at offset " + std::to_string(i));
    bits.push_back(c == '1');
  }
  return BitString(std::move(bits));
}

std::string BitString::to_text() const {
  std::string out;
  out.reserve(bits_.size());
  for (bool b : bits_) out.push_back(b ? '1' : '0');
  return out;
}

}  // namespace grac
